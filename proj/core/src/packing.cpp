#include "idealpack/packing.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace idealpack {

namespace {

void require_square_free(const MonomialIdeal& I, const char* op) {
    if (!I.is_square_free())
        throw UnsupportedInputError(std::string(op) + " requires a square-free ideal");
}

std::vector<int> mask_to_vertices(std::uint64_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask & (std::uint64_t(1) << v)) out.push_back(v);
    return out;
}

} // namespace

KonigResult is_konig(const MonomialIdeal& I) {
    require_square_free(I, "is_konig");
    if (I.is_zero() || I.is_unit()) return {true, std::nullopt};

    const int ht = prime_decompose(I).height;
    const auto& gens = I.generators();
    const int t = static_cast<int>(gens.size());
    std::vector<std::uint64_t> masks(t);
    for (int j = 0; j < t; ++j) masks[j] = gens[j].support_mask();

    std::vector<int> chosen;
    auto dfs = [&](auto&& self, int idx, std::uint64_t used) -> bool {
        if (static_cast<int>(chosen.size()) == ht) return true;
        if (t - idx < ht - static_cast<int>(chosen.size())) return false;
        for (int j = idx; j < t; ++j) {
            if (masks[j] & used) continue;
            chosen.push_back(j);
            if (self(self, j + 1, used | masks[j])) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, 0, 0)) return {false, std::nullopt};
    std::vector<Monomial> witness;
    witness.reserve(chosen.size());
    for (int j : chosen) witness.push_back(gens[j]);
    return {true, std::move(witness)};
}

PackingVerdict is_packed(const MonomialIdeal& I, const Guards& guards) {
    require_square_free(I, "is_packed");
    const int n = I.context().size();
    if (n > guards.packing_vertex_cap)
        throw GuardExceededError("is_packed exceeds the vertex cap");

    PackingVerdict verdict;
    verdict.packed = true;
    std::set<std::vector<Monomial>> seen;

    // Substitution patterns ordered by the number of touched variables, so
    // the empty pattern (the ideal itself) is tested first.
    std::vector<std::uint64_t> touched_by_size;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) touched_by_size.push_back(m);
    std::sort(touched_by_size.begin(), touched_by_size.end(),
              [](std::uint64_t a, std::uint64_t b) {
                  int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
                  return pa != pb ? pa < pb : a < b;
              });

    bool first_pattern = true;
    for (std::uint64_t touched : touched_by_size) {
        // Every split of the touched set into a zero side and a one side.
        std::uint64_t ones = 0;
        while (true) {
            const std::uint64_t zeros = touched & ~ones;
            ++verdict.minors_checked;
            MonomialIdeal minor_ideal =
                substitute(I, mask_to_vertices(zeros, n), mask_to_vertices(ones, n));
            if (seen.insert(minor_ideal.generators()).second) {
                ++verdict.minors_unique;
                const bool k = is_konig(minor_ideal).konig;
                if (first_pattern) verdict.konig = k;
                if (!k) {
                    verdict.packed = false;
                    verdict.failing_minor = SubstitutionPattern{
                        mask_to_vertices(zeros, n), mask_to_vertices(ones, n)};
                    return verdict;
                }
            }
            first_pattern = false;
            if (ones == touched) break;
            ones = (ones - touched) & touched; // next submask
        }
    }
    return verdict;
}

SymbolicOrdinaryReport symbolic_equals_ordinary(const MonomialIdeal& I, int m_max,
                                                const Guards& guards) {
    require_square_free(I, "symbolic_equals_ordinary");
    if (!I.is_proper())
        throw UnsupportedInputError("symbolic_equals_ordinary requires a proper ideal");
    if (m_max < 1)
        throw UnsupportedInputError("symbolic_equals_ordinary requires m_max >= 1");

    SymbolicOrdinaryReport rep;
    for (int m = 1; m <= m_max; ++m) {
        const MonomialIdeal sym = symbolic_power(I, m, guards);
        const MonomialIdeal ord = power(I, m);
        const bool eq = equals(sym, ord);
        rep.equal_by_m.emplace_back(m, eq);
        if (!eq && !rep.first_unequal_m) {
            rep.first_unequal_m = m;
            for (const auto& g : sym.generators())
                if (!contains(ord, g)) {
                    rep.witness = g;
                    break;
                }
        }
    }
    return rep;
}

std::optional<std::vector<int>> exact_cover(const Hypergraph& H) {
    if (H.unit) return std::nullopt; // an emptied edge cannot be met exactly once
    const int n = H.ctx.size();
    const int t = H.num_edges();
    if (t == 0) return std::vector<int>{};

    // Last vertex of each edge, to detect when an edge is fully decided.
    std::vector<int> last_vertex(t, -1);
    std::vector<std::vector<int>> edges_of(n);
    for (int j = 0; j < t; ++j) {
        for (int v : H.edges[j]) {
            edges_of[v].push_back(j);
            last_vertex[j] = std::max(last_vertex[j], v);
        }
    }
    std::vector<int> hit(t, 0);
    std::vector<int> cover;
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == n)
            return std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
        // take v
        bool ok = true;
        for (int j : edges_of[v])
            if (++hit[j] > 1) ok = false;
        if (ok) {
            cover.push_back(v);
            if (self(self, v + 1)) return true;
            cover.pop_back();
        }
        for (int j : edges_of[v]) --hit[j];
        // skip v: edges ending here must already be hit
        for (int j : edges_of[v])
            if (last_vertex[j] == v && hit[j] == 0) return false;
        return self(self, v + 1);
    };
    if (dfs(dfs, 0)) return cover;
    return std::nullopt;
}

std::optional<RainbowColoring> rainbow_coloring(const Hypergraph& H, int a, int b,
                                                const Guards& guards) {
    if (a < 1 || b < 1 || a < b)
        throw UnsupportedInputError("rainbow coloring requires a >= b >= 1");
    if (a > 30) throw GuardExceededError("rainbow coloring supports at most 30 colors");
    if (H.unit) return std::nullopt; // an empty edge sees no color at all
    const int n = H.ctx.size();
    const int t = H.num_edges();

    // All b-subsets of [a], as masks, in lexicographic order of their
    // sorted color lists.
    std::vector<std::uint32_t> choices;
    {
        std::vector<int> pick(b);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::uint32_t m = 0;
            for (int c : pick) m |= std::uint32_t(1) << c;
            choices.push_back(m);
            int idx = b - 1;
            while (idx >= 0 && pick[idx] == a - b + idx) --idx;
            if (idx < 0) break;
            ++pick[idx];
            for (int j = idx + 1; j < b; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    const std::uint32_t all_colors = (a == 32) ? ~0u : ((std::uint32_t(1) << a) - 1);
    std::vector<std::vector<int>> edges_of(n);
    std::vector<int> undecided(t, 0);
    for (int j = 0; j < t; ++j)
        for (int v : H.edges[j]) {
            edges_of[v].push_back(j);
            ++undecided[j];
        }
    std::vector<std::uint32_t> covered(t, 0);
    std::vector<std::uint32_t> assignment(n, 0);
    std::int64_t nodes = 0;

    auto dfs = [&](auto&& self, int v) -> bool {
        if (++nodes > guards.search_node_cap)
            throw GuardExceededError("rainbow coloring search budget exceeded");
        if (v == n) {
            for (int j = 0; j < t; ++j)
                if (covered[j] != all_colors) return false;
            return true;
        }
        for (std::uint32_t choice : choices) {
            bool ok = true;
            std::vector<std::uint32_t> saved;
            saved.reserve(edges_of[v].size());
            for (int j : edges_of[v]) {
                saved.push_back(covered[j]);
                covered[j] |= choice;
                --undecided[j];
                // an edge must still be able to reach all colors
                if (__builtin_popcount(all_colors & ~covered[j]) > undecided[j] * b) ok = false;
            }
            if (ok) {
                assignment[v] = choice;
                if (self(self, v + 1)) return true;
            }
            for (std::size_t k = 0; k < edges_of[v].size(); ++k) {
                covered[edges_of[v][k]] = saved[k];
                ++undecided[edges_of[v][k]];
            }
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;

    RainbowColoring out;
    out.a = a;
    out.b = b;
    out.assignment.resize(n);
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < a; ++c)
            if (assignment[v] & (std::uint32_t(1) << c)) out.assignment[v].push_back(c);
    return out;
}

bool partite_lower_bound_check(const MonomialIdeal& I, const RainbowColoring& coloring) {
    require_square_free(I, "partite_lower_bound_check");
    const Hypergraph H = hypergraph_of(I);
    const int n = H.ctx.size();
    const int a = coloring.a, b = coloring.b;
    if (a < 1 || b < 1 || a < b || static_cast<int>(coloring.assignment.size()) != n)
        throw UnsupportedInputError("malformed rainbow coloring");
    for (const auto& colors : coloring.assignment) {
        if (static_cast<int>(colors.size()) != b)
            throw UnsupportedInputError("every vertex needs exactly b colors");
        for (int c : colors)
            if (c < 0 || c >= a) throw UnsupportedInputError("color out of range");
    }
    for (const auto& e : H.edges) {
        for (int color = 0; color < a; ++color) {
            bool seen = false;
            for (int v : e)
                seen = seen || std::count(coloring.assignment[v].begin(),
                                          coloring.assignment[v].end(), color) > 0;
            if (!seen)
                throw UnsupportedInputError("coloring invalid: an edge misses a color");
        }
    }

    // Refine each color class to a minimal vertex cover.
    std::vector<std::vector<int>> covers;
    for (int color = 0; color < a; ++color) {
        std::vector<char> in(n, 0);
        for (int v = 0; v < n; ++v)
            if (std::count(coloring.assignment[v].begin(), coloring.assignment[v].end(),
                           color) > 0)
                in[v] = 1;
        auto is_cover = [&](const std::vector<char>& c) {
            for (const auto& e : H.edges) {
                bool met = false;
                for (int v : e) met = met || c[v];
                if (!met) return false;
            }
            return true;
        };
        for (int v = 0; v < n; ++v) {
            if (!in[v]) continue;
            in[v] = 0;
            if (!is_cover(in)) in[v] = 1;
        }
        std::vector<int> cover;
        for (int v = 0; v < n; ++v)
            if (in[v]) cover.push_back(v);
        covers.push_back(std::move(cover));
    }
    std::vector<int> multiplicity(n, 0);
    for (const auto& cover : covers)
        for (int v : cover) ++multiplicity[v];
    for (int v = 0; v < n; ++v)
        if (multiplicity[v] > b)
            throw InternalInvariantError(
                "minimal-cover refinement put a vertex into more than b covers");

    return waldschmidt(I) >= Rational(a, b);
}

UniformPackingReport uniform_packing_theorem_check(const Hypergraph& H,
                                                   const Guards& guards) {
    UniformPackingReport rep;
    if (H.unit || H.edges.empty()) {
        rep.skip_reason = "no edges";
        return rep;
    }
    if (!is_uniform(H)) {
        rep.skip_reason = "hypergraph is not uniform";
        return rep;
    }
    const MonomialIdeal I = edge_ideal(H);
    if (!is_packed(I, guards).packed) {
        rep.skip_reason = "ideal does not satisfy the packing property";
        return rep;
    }
    rep.applicable = true;

    rep.cover = exact_cover(H);
    rep.exact_cover_found = rep.cover.has_value();
    const int a = static_cast<int>(alpha(I));
    rep.partite_ok = rainbow_coloring(H, a, 1, guards).has_value();
    rep.dual_packed = is_packed(alexander_dual(I), guards).packed;
    return rep;
}

EquidimDualityReport equidim_duality_check(const MonomialIdeal& I, const Guards& guards) {
    require_square_free(I, "equidim_duality_check");
    EquidimDualityReport rep;
    if (!I.is_proper()) {
        rep.skip_reason = "ideal is zero or unit";
        return rep;
    }
    const MonomialIdeal dual = alexander_dual(I);
    if (!is_equidimensional(I)) {
        rep.skip_reason = "ideal is not equidimensional";
        return rep;
    }
    if (!is_equidimensional(dual)) {
        rep.skip_reason = "dual ideal is not equidimensional";
        return rep;
    }
    rep.applicable = true;
    rep.packed = is_packed(I, guards).packed;
    rep.dual_packed = is_packed(dual, guards).packed;
    rep.agree = rep.packed == rep.dual_packed;
    return rep;
}

// ---------------------------------------------------------------------------
// Canonical family enumeration
// ---------------------------------------------------------------------------

namespace {

/// Lex-least representative test for an edge-mask list (sorted ascending):
/// no vertex relabeling may produce a smaller list.
class CanonicalTester {
public:
    explicit CanonicalTester(int n) : n_(n) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::uint32_t> table(std::uint32_t(1) << n);
            for (std::uint32_t m = 0; m < table.size(); ++m) {
                std::uint32_t img = 0;
                for (int v = 0; v < n; ++v)
                    if (m & (std::uint32_t(1) << v)) img |= std::uint32_t(1) << perm[v];
                table[m] = img;
            }
            tables_.push_back(std::move(table));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    bool is_canonical(const std::vector<std::uint32_t>& edges) const {
        std::vector<std::uint32_t> mapped(edges.size());
        for (const auto& table : tables_) {
            for (std::size_t i = 0; i < edges.size(); ++i) mapped[i] = table[edges[i]];
            std::sort(mapped.begin(), mapped.end());
            if (mapped < edges) return false;
        }
        return true;
    }

private:
    int n_;
    std::vector<std::vector<std::uint32_t>> tables_;
};

} // namespace

void for_each_canonical_hypergraph(int max_n, int max_edges,
                                   const std::function<void(const Hypergraph&)>& visit) {
    if (max_n < 1 || max_n > 8)
        throw GuardExceededError("canonical enumeration supports 1..8 vertices");
    if (max_edges < 1) throw UnsupportedInputError("need at least one edge");

    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::string> names;
        for (int v = 0; v < n; ++v) names.push_back(std::string(1, char('a' + v)));
        const VariableContext ctx(names);
        const CanonicalTester tester(n);
        const std::uint32_t full = (std::uint32_t(1) << n) - 1;

        std::vector<std::uint32_t> edges;
        auto emit = [&]() {
            std::uint32_t covered = 0;
            for (auto e : edges) covered |= e;
            if (covered != full) return; // counted at its true vertex count
            if (!tester.is_canonical(edges)) return;
            std::vector<std::vector<int>> edge_lists;
            edge_lists.reserve(edges.size());
            for (auto e : edges) edge_lists.push_back(mask_to_vertices(e, n));
            visit(make_hypergraph(ctx, std::move(edge_lists)));
        };
        auto dfs = [&](auto&& self, std::uint32_t next) -> void {
            if (!edges.empty()) emit();
            if (static_cast<int>(edges.size()) == max_edges) return;
            for (std::uint32_t e = next; e <= full; ++e) {
                bool comparable = false;
                for (auto prev : edges) {
                    if ((prev & e) == prev || (prev & e) == e) {
                        comparable = true;
                        break;
                    }
                }
                if (comparable) continue;
                edges.push_back(e);
                self(self, e + 1);
                edges.pop_back();
            }
        };
        dfs(dfs, 1);
    }
}

ProbeReport conjecture_probe(ProbeKind kind, const FamilySpec& family, const Guards& guards) {
    if (family.max_n > guards.family_vertex_cap || family.max_edges > guards.family_edge_cap)
        throw GuardExceededError("probe family exceeds the enumeration guard");

    ProbeReport report;
    report.kind = kind;
    for_each_canonical_hypergraph(family.max_n, family.max_edges, [&](const Hypergraph& H) {
        ++report.instances_enumerated;
        const MonomialIdeal I = edge_ideal(H);
        if (kind == ProbeKind::Q58) {
            if (!is_equidimensional(I) || !np_equals_sp(I, guards)) return;
            ++report.instances_tested;
            const PackingVerdict verdict = is_packed(I, guards);
            const SymbolicOrdinaryReport sym = symbolic_equals_ordinary(I, family.m_max, guards);
            if (!verdict.packed)
                report.findings.push_back(
                    {I, "equidimensional, NP = SP, but not packed"});
            else if (sym.first_unequal_m)
                report.findings.push_back(
                    {I, "equidimensional, NP = SP, but I^(m) != I^m at m = " +
                            std::to_string(*sym.first_unequal_m)});
        } else {
            if (!is_packed(I, guards).packed) return;
            ++report.instances_tested;
            const int ht = prime_decompose(I).height;
            const int a = static_cast<int>(alpha(I)) * ht;
            const auto coloring = rainbow_coloring(H, a, ht, guards);
            if (!coloring) {
                report.findings.push_back(
                    {I, "packed but no (" + std::to_string(a) + ":" + std::to_string(ht) +
                            ")-rainbow coloring exists"});
            } else if (!partite_lower_bound_check(I, *coloring)) {
                throw InternalInvariantError(
                    "rainbow coloring found but the Waldschmidt lower bound fails");
            }
        }
    });
    return report;
}

} // namespace idealpack
