#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idealpack/packing.hpp"

namespace idealpack {

/// A parsed input file: declared variables plus generator terms in their
/// original order (used for echoing). Duplicate generators are collapsed,
/// first occurrence wins.
struct InputDocument {
    std::vector<std::string> variables;
    std::vector<std::vector<std::pair<std::string, Int>>> generators;

    MonomialIdeal to_ideal() const;
};

/// Parses either the JSON schema
///   {"variables": ["a","b"], "generators": [["a","b"], [["a",2]]]}
/// or, when the text does not start with '{', the compact square-free form
/// of one monomial per line with juxtaposed single-character names.
/// Violations carry line/field diagnostics.
InputDocument parse_document(const std::string& text);

struct RunConfig {
    Guards guards = Guards::defaults();
    int m_max = 3;                      // symbolic-vs-ordinary table depth
    std::optional<int> box_bound;       // lattice scans; default derived
    bool timing = false;                // adds a non-canonical timing field
    bool want_vertices = false;         // polyhedron subcommand
    std::string which = "sp";           // polyhedron subcommand: np | sp
    std::vector<std::string> delete_vars;
    std::vector<std::string> contract_vars;
    int color_a = 1;                    // coloring subcommand
    int color_b = 1;
    std::string probe_kind = "q58";     // probe subcommand
    int probe_max_n = 5;
    int probe_max_edges = 6;
};

/// Everything the `analyze` subcommand reports. All fields are produced by
/// single library calls; this module does no arithmetic of its own.
struct AnalysisReport {
    MonomialIdeal ideal;
    PrimeDecomposition decomposition;
    bool equidimensional = false;
    bool uniform = false;
    Int alpha_value;
    Rational waldschmidt_value;
    HypergraphInvariants invariants;
    HypergraphInvariants blocker_invariants;
    KonigResult konig;
    PackingVerdict packing;
    IntegralityReport integrality;
    bool np_eq_sp = false;
    MonomialIdeal dual;
    bool dual_equidimensional = false;
    int dual_height = 0;
    SymbolicOrdinaryReport symbolic_vs_ordinary;
    double elapsed_seconds = 0.0;
};

AnalysisReport analyze(const InputDocument& doc, const RunConfig& cfg);

enum class RenderFormat { Json, Text };

/// Canonical rendering: sorted keys, fractions as "p/q" strings, monomials
/// as variable/exponent pair lists in context order. Byte-deterministic
/// unless cfg.timing added the timing field.
std::string render(const AnalysisReport& report, RenderFormat format, bool with_timing);

struct RunResult {
    std::string json; // canonical machine output (stdout)
    std::string text; // short human summary (stderr)
};

/// Dispatches a subcommand: analyze, dual, decompose, minor, packing,
/// waldschmidt, alpha, polyhedron, sympower, coloring, invariants, probe.
/// `doc` may be absent only for probe.
RunResult run_command(const std::string& command, const std::optional<InputDocument>& doc,
                      const RunConfig& cfg);

} // namespace idealpack
