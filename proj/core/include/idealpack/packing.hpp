#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idealpack/polyhedra.hpp"

namespace idealpack {

struct KonigResult {
    bool konig = false;
    /// ht(I) pairwise coprime minimal generators, when they exist.
    std::optional<std::vector<Monomial>> witness;
};

/// Searches for ht(I) pairwise coprime minimal generators by backtracking.
/// The unit state and the edgeless (zero) ideal are vacuously Konig.
KonigResult is_konig(const MonomialIdeal& I);

/// A substitution pattern: variables sent to 0 (deletion side) and to 1
/// (contraction side).
struct SubstitutionPattern {
    std::vector<int> zeros;
    std::vector<int> ones;
};

struct PackingVerdict {
    bool konig = false;  // verdict for the empty substitution, i.e. I itself
    bool packed = false;
    std::optional<SubstitutionPattern> failing_minor;
    std::int64_t minors_checked = 0; // substitution patterns enumerated
    std::int64_t minors_unique = 0;  // distinct minor ideals analyzed
};

/// Tests every ideal obtained by sending a subset of the variables to 0 and
/// a disjoint subset to 1 (3^n patterns, deduplicated by the resulting
/// ideal) for the Konig property. Early-exits with the first failing
/// pattern; patterns are enumerated smallest-first so the empty
/// substitution is tested first.
PackingVerdict is_packed(const MonomialIdeal& I, const Guards& guards = Guards::defaults());

struct SymbolicOrdinaryReport {
    std::vector<std::pair<int, bool>> equal_by_m;
    std::optional<int> first_unequal_m;
    std::optional<Monomial> witness; // a generator of I^(m) outside I^m
};

/// Exact comparison of symbolic_power(I, m) and power(I, m) for m = 1..m_max.
SymbolicOrdinaryReport symbolic_equals_ordinary(const MonomialIdeal& I, int m_max,
                                                const Guards& guards = Guards::defaults());

/// A vertex set meeting every edge in exactly one vertex, or absence.
std::optional<std::vector<int>> exact_cover(const Hypergraph& H);

/// An (a:b)-rainbow coloring: every vertex gets a b-subset of the colors
/// {0,...,a-1} and every edge sees every color.
struct RainbowColoring {
    int a = 0;
    int b = 0;
    std::vector<std::vector<int>> assignment; // per vertex, sorted color list
};

/// Exhaustive backtracking search with per-edge color-coverage pruning.
/// Returns a coloring or definite absence; a blown node budget raises
/// GuardExceededError instead of guessing.
std::optional<RainbowColoring> rainbow_coloring(const Hypergraph& H, int a, int b,
                                                const Guards& guards = Guards::defaults());

/// Validates the coloring, refines each color class to a minimal vertex
/// cover, checks that no vertex lies in more than b of them, and reports
/// whether waldschmidt(I) >= a/b holds exactly.
bool partite_lower_bound_check(const MonomialIdeal& I, const RainbowColoring& coloring);

struct UniformPackingReport {
    bool applicable = false;
    std::string skip_reason;
    std::optional<std::vector<int>> cover; // exact cover witness
    bool exact_cover_found = false;
    bool partite_ok = false;  // an alpha(I)-coloring exists
    bool dual_packed = false; // I^v satisfies the packing property
    bool ok() const { return exact_cover_found && partite_ok && dual_packed; }
};

/// For a uniform hypergraph with the packing property, verifies by direct
/// search: an exact cover exists, H is alpha(I)-partite, and the dual
/// satisfies the packing property. Precondition failures skip with reason.
UniformPackingReport uniform_packing_theorem_check(const Hypergraph& H,
                                                   const Guards& guards = Guards::defaults());

struct EquidimDualityReport {
    bool applicable = false;
    std::string skip_reason;
    bool packed = false;
    bool dual_packed = false;
    bool agree = false;
};

/// When I and I^v are both equidimensional, their packing verdicts must
/// coincide; skipped with reason otherwise.
EquidimDualityReport equidim_duality_check(const MonomialIdeal& I,
                                           const Guards& guards = Guards::defaults());

// ---------------------------------------------------------------------------
// Family enumeration and conjecture probes
// ---------------------------------------------------------------------------

/// Visits one representative per isomorphism class of hypergraphs with
/// 1..max_n vertices (no isolated ones) and 1..max_edges edges, in a fixed
/// deterministic order. Representatives are the lexicographically least
/// edge-mask lists over all vertex relabelings.
void for_each_canonical_hypergraph(int max_n, int max_edges,
                                   const std::function<void(const Hypergraph&)>& visit);

enum class ProbeKind { Q58, C57 };

struct FamilySpec {
    int max_n = 5;
    int max_edges = 6;
    int m_max = 3;
};

struct ProbeFinding {
    MonomialIdeal ideal;
    std::string note;
};

struct ProbeReport {
    ProbeKind kind = ProbeKind::Q58;
    std::int64_t instances_enumerated = 0;
    std::int64_t instances_tested = 0; // instances meeting the probe's filter
    std::vector<ProbeFinding> findings;
    bool counterexample_found() const { return !findings.empty(); }
};

/// Q58: among equidimensional square-free ideals with NP(I) = SP(I), looks
/// for one that is not packed or has a symbolic/ordinary power gap.
/// C57: among packed hypergraphs, looks for one with no
/// (alpha(I)*ht(I) : ht(I))-rainbow coloring. Falsification harnesses only:
/// findings are reported, never interpreted.
ProbeReport conjecture_probe(ProbeKind kind, const FamilySpec& family,
                             const Guards& guards = Guards::defaults());

} // namespace idealpack
