#include "idealpack/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <limits>
#include <set>
#include <sstream>

namespace idealpack {

using nlohmann::json;

namespace {

json j_int(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

json j_rational(const Rational& r) { return to_string(r); }

json j_monomial(const Monomial& m, const VariableContext& ctx) {
    json out = json::array();
    for (int i = 0; i < m.num_vars(); ++i)
        if (m.exponent(i) != 0) out.push_back(json::array({ctx.name(i), j_int(m.exponent(i))}));
    return out;
}

json j_monomials(const std::vector<Monomial>& ms, const VariableContext& ctx) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(j_monomial(m, ctx));
    return out;
}

json j_names(const std::vector<int>& vars, const VariableContext& ctx) {
    json out = json::array();
    for (int v : vars) out.push_back(ctx.name(v));
    return out;
}

json j_point(const RationalVector& p) {
    json out = json::array();
    for (const auto& c : p) out.push_back(j_rational(c));
    return out;
}

json j_points(const std::vector<RationalVector>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(j_point(p));
    return out;
}

json j_invariants(const HypergraphInvariants& inv) {
    return json{{"tau", j_int(inv.tau)},
                {"pi", j_int(inv.pi)},
                {"tau_f", j_rational(inv.tau_f)},
                {"pi_f", j_rational(inv.pi_f)}};
}

json j_pattern(const SubstitutionPattern& p, const VariableContext& ctx) {
    return json{{"delete", j_names(p.zeros, ctx)}, {"contract", j_names(p.ones, ctx)}};
}

json j_packing(const PackingVerdict& v, const VariableContext& ctx) {
    json out{{"konig", v.konig},
             {"packed", v.packed},
             {"minors_checked", v.minors_checked},
             {"minors_unique", v.minors_unique}};
    if (v.failing_minor) out["failing_minor"] = j_pattern(*v.failing_minor, ctx);
    return out;
}

json j_sym_report(const SymbolicOrdinaryReport& rep, const VariableContext& ctx) {
    json table = json::array();
    for (const auto& [m, eq] : rep.equal_by_m) table.push_back(json::array({m, eq}));
    json out{{"table", table}};
    if (rep.first_unequal_m) out["first_unequal_m"] = *rep.first_unequal_m;
    if (rep.witness) out["witness"] = j_monomial(*rep.witness, ctx);
    return out;
}

std::string generators_str(const MonomialIdeal& I) {
    std::string out = "(";
    for (std::size_t i = 0; i < I.generators().size(); ++i) {
        if (i) out += ", ";
        out += I.generators()[i].str(I.context());
    }
    return out + ")";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// -- input parsing -----------------------------------------------------------

Int parse_exponent(const json& j, std::size_t gen_index) {
    const std::string where = "generator #" + std::to_string(gen_index + 1);
    if (j.is_number_integer()) {
        const std::int64_t v = j.get<std::int64_t>();
        if (v <= 0) throw UnsupportedInputError(where + ": exponents must be positive");
        return Int(v);
    }
    if (j.is_string()) {
        Rational r = parse_rational(j.get<std::string>());
        if (!is_integer(r) || r <= 0)
            throw UnsupportedInputError(where + ": exponents must be positive integers");
        return numerator(r);
    }
    throw UnsupportedInputError(where + ": exponent must be an integer or string");
}

InputDocument parse_json_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UnsupportedInputError(std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw UnsupportedInputError("input must be a JSON object");
    if (!j.contains("variables") || !j["variables"].is_array())
        throw UnsupportedInputError("missing \"variables\" array");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw UnsupportedInputError("missing \"generators\" array");

    InputDocument doc;
    for (const auto& v : j["variables"]) {
        if (!v.is_string()) throw UnsupportedInputError("variable names must be strings");
        doc.variables.push_back(v.get<std::string>());
    }
    VariableContext ctx(doc.variables); // validates distinct / nonempty

    std::set<std::vector<Int>> seen;
    for (std::size_t gi = 0; gi < j["generators"].size(); ++gi) {
        const auto& g = j["generators"][gi];
        const std::string where = "generator #" + std::to_string(gi + 1);
        if (!g.is_array() || g.empty())
            throw UnsupportedInputError(where + ": must be a nonempty array");
        std::vector<std::pair<std::string, Int>> terms;
        std::vector<Int> exps(ctx.size(), Int(0));
        for (const auto& term : g) {
            std::string name;
            Int exp;
            if (term.is_string()) {
                name = term.get<std::string>();
                exp = 1;
            } else if (term.is_array() && term.size() == 2 && term[0].is_string()) {
                name = term[0].get<std::string>();
                exp = parse_exponent(term[1], gi);
            } else {
                throw UnsupportedInputError(where +
                                            ": terms are names or [name, exponent] pairs");
            }
            const int idx = ctx.index_of(name); // throws on undeclared variables
            if (exps[idx] != 0)
                throw UnsupportedInputError(where + ": duplicate variable " + name);
            exps[idx] = exp;
            terms.emplace_back(name, exp);
        }
        if (seen.insert(exps).second) doc.generators.push_back(std::move(terms));
    }
    return doc;
}

InputDocument parse_compact_document(const std::string& text) {
    std::set<char> vars;
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
            ++start;
        line = line.substr(start);
        if (line.empty() || line[0] == '#') continue;
        std::set<char> in_line;
        for (char c : line) {
            if (!std::isalpha(static_cast<unsigned char>(c)))
                throw UnsupportedInputError("line " + std::to_string(lineno) +
                                            ": compact form uses single-letter names");
            if (!in_line.insert(c).second)
                throw UnsupportedInputError("line " + std::to_string(lineno) +
                                            ": repeated variable; compact form is square-free");
            vars.insert(c);
        }
        lines.push_back(line);
    }
    if (lines.empty()) throw UnsupportedInputError("no generators in compact input");

    InputDocument doc;
    for (char c : vars) doc.variables.push_back(std::string(1, c));
    std::set<std::vector<char>> seen;
    for (const auto& l : lines) {
        std::vector<char> sorted(l.begin(), l.end());
        std::sort(sorted.begin(), sorted.end());
        if (!seen.insert(sorted).second) continue;
        std::vector<std::pair<std::string, Int>> terms;
        for (char c : l) terms.emplace_back(std::string(1, c), Int(1));
        doc.generators.push_back(std::move(terms));
    }
    return doc;
}

json j_echo(const InputDocument& doc) {
    json gens = json::array();
    for (const auto& g : doc.generators) {
        json one = json::array();
        for (const auto& [name, exp] : g) one.push_back(json::array({name, j_int(exp)}));
        gens.push_back(one);
    }
    return json{{"variables", doc.variables}, {"generators", gens}};
}

} // namespace

MonomialIdeal InputDocument::to_ideal() const {
    VariableContext ctx(variables);
    std::vector<Monomial> gens;
    for (const auto& g : generators) {
        std::vector<Int> exps(ctx.size(), Int(0));
        for (const auto& [name, exp] : g) exps[ctx.index_of(name)] = exp;
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(std::move(ctx), std::move(gens));
}

InputDocument parse_document(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_json_document(text);
        break;
    }
    return parse_compact_document(text);
}

AnalysisReport analyze(const InputDocument& doc, const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    AnalysisReport rep;
    rep.ideal = doc.to_ideal();
    const MonomialIdeal& I = rep.ideal;
    if (!I.is_square_free() || !I.is_proper())
        throw UnsupportedInputError("analyze requires a proper square-free ideal");

    rep.decomposition = prime_decompose(I);
    rep.equidimensional = is_equidimensional(I);
    const Hypergraph H = hypergraph_of(I);
    rep.uniform = is_uniform(H);
    rep.alpha_value = alpha(I);
    rep.waldschmidt_value = waldschmidt(I);
    rep.invariants = hypergraph_invariants(H, cfg.guards);
    rep.konig = is_konig(I);
    if (rep.konig.konig != (rep.invariants.tau == rep.invariants.pi))
        throw InternalInvariantError("Konig verdict disagrees with tau == pi");
    rep.packing = is_packed(I, cfg.guards);
    rep.integrality = sp_integrality(I, cfg.guards);
    rep.np_eq_sp = np_equals_sp(I, cfg.guards);
    rep.dual = alexander_dual(I);
    rep.dual_equidimensional = is_equidimensional(rep.dual);
    rep.dual_height = prime_decompose(rep.dual).height;
    rep.blocker_invariants = hypergraph_invariants(hypergraph_of(rep.dual), cfg.guards);
    rep.symbolic_vs_ordinary = symbolic_equals_ordinary(I, cfg.m_max, cfg.guards);
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string render(const AnalysisReport& rep, RenderFormat format, bool with_timing) {
    const VariableContext& ctx = rep.ideal.context();
    if (format == RenderFormat::Json) {
        json j{{"variables", ctx.names()},
               {"generators", j_monomials(rep.ideal.generators(), ctx)},
               {"ht", rep.decomposition.height},
               {"primes", j_monomials(rep.decomposition.primes, ctx)},
               {"heights", rep.decomposition.heights},
               {"equidimensional", rep.equidimensional},
               {"uniform", rep.uniform},
               {"alpha", j_int(rep.alpha_value)},
               {"waldschmidt", j_rational(rep.waldschmidt_value)},
               {"hypergraph_invariants", j_invariants(rep.invariants)},
               {"blocker_invariants", j_invariants(rep.blocker_invariants)},
               {"konig", rep.konig.konig},
               {"packed", rep.packing.packed},
               {"packing", j_packing(rep.packing, ctx)},
               {"sp_integral", rep.integrality.sp_integral},
               {"integrality",
                json{{"sp_integral", rep.integrality.sp_integral},
                     {"hypergraph_fulkersonian", rep.integrality.hypergraph_fulkersonian},
                     {"blocker_fulkersonian", rep.integrality.blocker_fulkersonian},
                     {"dual_sp_integral", rep.integrality.dual_sp_integral}}},
               {"np_equals_sp", rep.np_eq_sp},
               {"dual", json{{"generators", j_monomials(rep.dual.generators(), ctx)},
                             {"ht", rep.dual_height},
                             {"equidimensional", rep.dual_equidimensional}}},
               {"symbolic_vs_ordinary", j_sym_report(rep.symbolic_vs_ordinary, ctx)}};
        if (rep.konig.witness) j["konig_witness"] = j_monomials(*rep.konig.witness, ctx);
        if (with_timing) j["timing_seconds"] = rep.elapsed_seconds;
        return dump(j);
    }

    std::ostringstream out;
    out << "ideal " << generators_str(rep.ideal) << " in "
        << ctx.size() << " variables\n";
    out << "ht = " << rep.decomposition.height
        << ", primes = " << rep.decomposition.primes.size()
        << ", equidimensional = " << (rep.equidimensional ? "true" : "false")
        << ", uniform = " << (rep.uniform ? "true" : "false") << "\n";
    out << "alpha = " << rep.alpha_value << ", waldschmidt = "
        << to_string(rep.waldschmidt_value) << "\n";
    out << "tau = " << rep.invariants.tau << ", pi = " << rep.invariants.pi
        << ", tau_f = " << to_string(rep.invariants.tau_f)
        << ", pi_f = " << to_string(rep.invariants.pi_f) << "\n";
    out << "konig = " << (rep.konig.konig ? "true" : "false")
        << ", packed = " << (rep.packing.packed ? "true" : "false");
    if (rep.packing.failing_minor) {
        out << " (failing minor: delete {";
        const auto& fm = *rep.packing.failing_minor;
        for (std::size_t i = 0; i < fm.zeros.size(); ++i)
            out << (i ? "," : "") << ctx.name(fm.zeros[i]);
        out << "}, contract {";
        for (std::size_t i = 0; i < fm.ones.size(); ++i)
            out << (i ? "," : "") << ctx.name(fm.ones[i]);
        out << "})";
    }
    out << "\n";
    out << "sp_integral = " << (rep.integrality.sp_integral ? "true" : "false")
        << ", np_equals_sp = " << (rep.np_eq_sp ? "true" : "false") << "\n";
    out << "dual " << generators_str(rep.dual) << ", ht = " << rep.dual_height
        << ", equidimensional = " << (rep.dual_equidimensional ? "true" : "false") << "\n";
    out << "symbolic vs ordinary:";
    for (const auto& [m, eq] : rep.symbolic_vs_ordinary.equal_by_m)
        out << " m=" << m << (eq ? " equal" : " DIFFER");
    if (rep.symbolic_vs_ordinary.witness)
        out << " (witness " << rep.symbolic_vs_ordinary.witness->str(ctx) << ")";
    out << "\n";
    if (with_timing) out << "elapsed: " << rep.elapsed_seconds << " s\n";
    return out.str();
}

namespace {

std::vector<int> resolve_names(const std::vector<std::string>& names,
                               const VariableContext& ctx) {
    std::vector<int> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(ctx.index_of(n));
    return out;
}

RunResult run_analyze(const InputDocument& doc, const RunConfig& cfg) {
    AnalysisReport rep = analyze(doc, cfg);
    return {render(rep, RenderFormat::Json, cfg.timing),
            render(rep, RenderFormat::Text, cfg.timing)};
}

RunResult run_dual(const MonomialIdeal& I, const RunConfig& cfg) {
    const MonomialIdeal dual = alexander_dual(I);
    const PrimeDecomposition dec = prime_decompose(dual);
    const PackingVerdict packing = is_packed(dual, cfg.guards);
    const bool equidim = is_equidimensional(dual);
    json j{{"generators", j_monomials(dual.generators(), I.context())},
           {"ht", dec.height},
           {"equidimensional", equidim},
           {"konig", packing.konig},
           {"packed", packing.packed},
           {"packing", j_packing(packing, I.context())}};
    std::ostringstream text;
    text << "dual " << generators_str(dual) << ", ht = " << dec.height
         << ", equidimensional = " << (equidim ? "true" : "false")
         << ", packed = " << (packing.packed ? "true" : "false") << "\n";
    return {dump(j), text.str()};
}

RunResult run_decompose(const MonomialIdeal& I) {
    const PrimeDecomposition dec = prime_decompose(I);
    json primes = json::array();
    for (const auto& p : dec.primes) primes.push_back(j_names(p.support(), I.context()));
    json j{{"primes", primes}, {"heights", dec.heights}, {"ht", dec.height}};
    std::ostringstream text;
    text << dec.primes.size() << " minimal primes, ht = " << dec.height << "\n";
    return {dump(j), text.str()};
}

RunResult run_minor(const MonomialIdeal& I, const RunConfig& cfg) {
    const Hypergraph H = hypergraph_of(I);
    const Hypergraph M = minor(H, resolve_names(cfg.delete_vars, I.context()),
                               resolve_names(cfg.contract_vars, I.context()));
    json edges = json::array();
    for (const auto& e : M.edges) edges.push_back(j_names(e, I.context()));
    const MonomialIdeal ideal = edge_ideal(M);
    json j{{"unit", M.unit},
           {"edges", edges},
           {"generators", j_monomials(ideal.generators(), I.context())}};
    std::ostringstream text;
    if (M.unit)
        text << "minor is the unit state (an edge was fully contracted)\n";
    else
        text << "minor has " << M.edges.size() << " edges: " << generators_str(ideal) << "\n";
    return {dump(j), text.str()};
}

RunResult run_packing(const MonomialIdeal& I, const RunConfig& cfg) {
    const PackingVerdict v = is_packed(I, cfg.guards);
    json j = j_packing(v, I.context());
    std::ostringstream text;
    text << "konig = " << (v.konig ? "true" : "false")
         << ", packed = " << (v.packed ? "true" : "false") << " (" << v.minors_checked
         << " patterns, " << v.minors_unique << " distinct minors)\n";
    return {dump(j), text.str()};
}

RunResult run_waldschmidt(const MonomialIdeal& I, const RunConfig& cfg) {
    const Rational w = waldschmidt(I);
    const auto seq = waldschmidt_limit_check(I, cfg.m_max, cfg.guards);
    json limit = json::array();
    for (const auto& [m, term] : seq) limit.push_back(json::array({m, j_rational(term)}));
    json j{{"waldschmidt", j_rational(w)}, {"limit_sequence", limit}};
    std::ostringstream text;
    text << "waldschmidt = " << to_string(w) << "; alpha(I^(m))/m =";
    for (const auto& [m, term] : seq) text << " " << to_string(term);
    text << "\n";
    return {dump(j), text.str()};
}

RunResult run_alpha(const MonomialIdeal& I) {
    const Int a = alpha(I);
    json j{{"alpha", j_int(a)}};
    std::ostringstream text;
    text << "alpha = " << a << "\n";
    return {dump(j), text.str()};
}

RunResult run_polyhedron(const MonomialIdeal& I, const RunConfig& cfg) {
    json j;
    std::ostringstream text;
    if (cfg.which == "np") {
        json exps = json::array();
        for (const auto& g : I.generators()) {
            json row = json::array();
            for (const auto& e : g.exponents()) row.push_back(j_int(e));
            exps.push_back(row);
        }
        j["exponents"] = exps;
        if (cfg.want_vertices) {
            // A generator exponent is a vertex unless it lies in the
            // polyhedron spanned by the remaining generators.
            json vertices = json::array();
            const auto& gens = I.generators();
            for (std::size_t k = 0; k < gens.size(); ++k) {
                bool vertex = true;
                if (gens.size() > 1) {
                    std::vector<Monomial> others;
                    for (std::size_t i = 0; i < gens.size(); ++i)
                        if (i != k) others.push_back(gens[i]);
                    RationalVector point;
                    for (const auto& e : gens[k].exponents()) point.push_back(Rational(e));
                    vertex = !np_contains(MonomialIdeal(I.context(), others), point);
                }
                if (vertex) {
                    json row = json::array();
                    for (const auto& e : gens[k].exponents()) row.push_back(j_int(e));
                    vertices.push_back(row);
                }
            }
            j["vertices"] = vertices;
        }
        text << "NP(I): V-representation with " << I.num_generators() << " generators\n";
    } else if (cfg.which == "sp") {
        const BinaryMatrix A = prime_matrix(I);
        j["halfspaces"] = A.entries;
        if (cfg.want_vertices) {
            const auto vertices = sp_vertices(I, cfg.guards);
            const IntegralityReport integ = sp_integrality(I, cfg.guards);
            j["vertices"] = j_points(vertices);
            j["integral"] = integ.sp_integral;
            j["fulkersonian"] = json{
                {"sp_integral", integ.sp_integral},
                {"hypergraph_fulkersonian", integ.hypergraph_fulkersonian},
                {"blocker_fulkersonian", integ.blocker_fulkersonian},
                {"dual_sp_integral", integ.dual_sp_integral}};
            text << "SP(I): " << A.rows << " halfspaces, " << vertices.size()
                 << " vertices, integral = " << (integ.sp_integral ? "true" : "false")
                 << "\n";
        } else {
            text << "SP(I): " << A.rows << " halfspaces\n";
        }
    } else {
        throw UnsupportedInputError("--which must be np or sp");
    }
    return {dump(j), text.str()};
}

RunResult run_sympower(const MonomialIdeal& I, const RunConfig& cfg) {
    const SymbolicOrdinaryReport rep = symbolic_equals_ordinary(I, cfg.m_max, cfg.guards);
    json j = j_sym_report(rep, I.context());
    std::ostringstream text;
    text << "symbolic vs ordinary:";
    for (const auto& [m, eq] : rep.equal_by_m) text << " m=" << m << (eq ? " equal" : " DIFFER");
    if (rep.witness) text << " (witness " << rep.witness->str(I.context()) << ")";
    text << "\n";
    return {dump(j), text.str()};
}

RunResult run_coloring(const MonomialIdeal& I, const RunConfig& cfg) {
    const Hypergraph H = hypergraph_of(I);
    const auto coloring = rainbow_coloring(H, cfg.color_a, cfg.color_b, cfg.guards);
    json j{{"a", cfg.color_a}, {"b", cfg.color_b}, {"found", coloring.has_value()}};
    if (coloring) {
        json assign = json::object();
        for (int v = 0; v < H.ctx.size(); ++v) assign[H.ctx.name(v)] = coloring->assignment[v];
        j["assignment"] = assign;
        j["lower_bound_holds"] = partite_lower_bound_check(I, *coloring);
    }
    std::ostringstream text;
    text << "(" << cfg.color_a << ":" << cfg.color_b << ")-rainbow coloring "
         << (coloring ? "found" : "does not exist") << "\n";
    return {dump(j), text.str()};
}

RunResult run_invariants(const MonomialIdeal& I, const RunConfig& cfg) {
    const HypergraphInvariants inv = hypergraph_invariants(hypergraph_of(I), cfg.guards);
    json j = j_invariants(inv);
    std::ostringstream text;
    text << "tau = " << inv.tau << ", pi = " << inv.pi << ", tau_f = "
         << to_string(inv.tau_f) << ", pi_f = " << to_string(inv.pi_f) << "\n";
    return {dump(j), text.str()};
}

RunResult run_probe(const RunConfig& cfg) {
    ProbeKind kind;
    if (cfg.probe_kind == "q58") kind = ProbeKind::Q58;
    else if (cfg.probe_kind == "c57") kind = ProbeKind::C57;
    else throw UnsupportedInputError("--kind must be q58 or c57");
    FamilySpec family{cfg.probe_max_n, cfg.probe_max_edges, cfg.m_max};
    const ProbeReport rep = conjecture_probe(kind, family, cfg.guards);
    json findings = json::array();
    for (const auto& f : rep.findings)
        findings.push_back(json{
            {"variables", f.ideal.context().names()},
            {"generators", j_monomials(f.ideal.generators(), f.ideal.context())},
            {"note", f.note}});
    json j{{"kind", cfg.probe_kind},
           {"max_n", cfg.probe_max_n},
           {"max_edges", cfg.probe_max_edges},
           {"instances_enumerated", rep.instances_enumerated},
           {"instances_tested", rep.instances_tested},
           {"counterexample_found", rep.counterexample_found()},
           {"findings", findings}};
    std::ostringstream text;
    if (rep.counterexample_found())
        text << rep.findings.size() << " candidate(s) found -- inspect the findings\n";
    else
        text << "no counterexample in family (" << rep.instances_enumerated
             << " instances, " << rep.instances_tested << " tested)\n";
    return {dump(j), text.str()};
}

} // namespace

RunResult run_command(const std::string& command, const std::optional<InputDocument>& doc,
                      const RunConfig& cfg) {
    if (command == "probe") return run_probe(cfg);
    if (!doc) throw UnsupportedInputError("this subcommand needs an input file");
    if (command == "analyze") return run_analyze(*doc, cfg);

    const MonomialIdeal I = doc->to_ideal();
    if (command == "dual") return run_dual(I, cfg);
    if (command == "decompose") return run_decompose(I);
    if (command == "minor") return run_minor(I, cfg);
    if (command == "packing") return run_packing(I, cfg);
    if (command == "waldschmidt") return run_waldschmidt(I, cfg);
    if (command == "alpha") return run_alpha(I);
    if (command == "polyhedron") return run_polyhedron(I, cfg);
    if (command == "sympower") return run_sympower(I, cfg);
    if (command == "coloring") return run_coloring(I, cfg);
    if (command == "invariants") return run_invariants(I, cfg);
    throw UnsupportedInputError("unknown subcommand: " + command);
}

} // namespace idealpack
