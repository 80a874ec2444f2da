// Command-line front end: parse an ideal, run one analysis, print canonical
// JSON on stdout and a short summary on stderr.
//
// Exit codes: 0 success, 2 input error, 3 guard exceeded, 4 internal
// invariant violation (theorem alarm).

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "idealpack/report.hpp"

namespace {

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw idealpack::UnsupportedInputError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of square-free monomial ideals and their hypergraphs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string guard_profile = "default";
    if (const char* env = std::getenv("IDEALPACK_GUARDS")) guard_profile = env;
    app.add_option("--guards", guard_profile,
                   "Guard profile: small, default or large (env IDEALPACK_GUARDS)");
    bool timing = false;
    app.add_flag("--timing", timing, "Include (non-canonical) timing metadata");
    bool quiet = false;
    app.add_flag("-q,--quiet", quiet, "Suppress the text summary on stderr");

    idealpack::RunConfig cfg;
    std::string input_path;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input_path, "Input file (JSON or compact form, '-' = stdin)")
            ->required();
    };

    auto* c_analyze = app.add_subcommand("analyze", "Full report on one ideal");
    add_input(c_analyze);
    c_analyze->add_option("--max-m", cfg.m_max, "Symbolic-vs-ordinary table depth");

    auto* c_dual = app.add_subcommand("dual", "Alexander dual and its packing verdict");
    add_input(c_dual);

    auto* c_decompose = app.add_subcommand("decompose", "Irredundant prime decomposition");
    add_input(c_decompose);

    auto* c_minor = app.add_subcommand("minor", "Delete/contract a vertex pattern");
    add_input(c_minor);
    c_minor->add_option("--delete", cfg.delete_vars, "Variables set to 0")->delimiter(',');
    c_minor->add_option("--contract", cfg.contract_vars, "Variables set to 1")->delimiter(',');

    auto* c_packing = app.add_subcommand("packing", "Konig/packing verdict over all minors");
    add_input(c_packing);

    auto* c_wald = app.add_subcommand("waldschmidt", "Waldschmidt constant and limit terms");
    add_input(c_wald);
    c_wald->add_option("--max-m", cfg.m_max, "Terms of alpha(I^(m))/m to compute");

    auto* c_alpha = app.add_subcommand("alpha", "Initial degree");
    add_input(c_alpha);

    auto* c_poly = app.add_subcommand("polyhedron", "Newton or symbolic polyhedron");
    add_input(c_poly);
    c_poly->add_option("--which", cfg.which, "np or sp")->required();
    c_poly->add_flag("--vertices", cfg.want_vertices, "Enumerate vertices");

    auto* c_sym = app.add_subcommand("sympower", "Symbolic vs ordinary powers");
    add_input(c_sym);
    c_sym->add_option("--max-m", cfg.m_max, "Largest power compared");

    auto* c_color = app.add_subcommand("coloring", "Search an (a:b)-rainbow coloring");
    add_input(c_color);
    c_color->add_option("--a", cfg.color_a, "Number of colors")->required();
    c_color->add_option("--b", cfg.color_b, "Colors per vertex")->required();

    auto* c_inv = app.add_subcommand("invariants", "tau, pi and their LP relaxations");
    add_input(c_inv);

    auto* c_probe = app.add_subcommand("probe", "Conjecture probes over small families");
    c_probe->add_option("--kind", cfg.probe_kind, "q58 or c57")->required();
    c_probe->add_option("--max-n", cfg.probe_max_n, "Largest vertex count");
    c_probe->add_option("--max-edges", cfg.probe_max_edges, "Largest edge count");
    c_probe->add_option("--max-m", cfg.m_max, "Symbolic power depth (q58)");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.guards = idealpack::Guards::profile(guard_profile);
        cfg.timing = timing;
        const std::string command = app.get_subcommands().front()->get_name();
        std::optional<idealpack::InputDocument> doc;
        if (command != "probe") doc = idealpack::parse_document(read_input(input_path));
        const idealpack::RunResult result = idealpack::run_command(command, doc, cfg);
        std::cout << result.json;
        if (!quiet) std::cerr << result.text;
        return 0;
    } catch (const idealpack::GuardExceededError& e) {
        std::cout << "{\n  \"error\": \"guard_exceeded\",\n  \"message\": "
                  << json_quote(e.what()) << "\n}\n";
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const idealpack::InternalInvariantError& e) {
        std::cout << "{\n  \"error\": \"invariant_violation\",\n  \"message\": "
                  << json_quote(e.what()) << "\n}\n";
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const idealpack::Error& e) {
        std::cout << "{\n  \"error\": \"input\",\n  \"message\": "
                  << json_quote(e.what()) << "\n}\n";
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
