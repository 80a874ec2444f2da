#pragma once

#include <optional>
#include <vector>

#include "idealpack/guards.hpp"
#include "idealpack/hypergraph.hpp"
#include "idealpack/numbers.hpp"

namespace idealpack {

// ---------------------------------------------------------------------------
// General exact linear programs. All variables are implicitly >= 0; rows
// compare a linear form against a rational right-hand side.
// ---------------------------------------------------------------------------

enum class RowSense { LE, GE, EQ };

struct LinearProgram {
    int num_vars = 0;
    std::vector<RationalVector> rows;
    RationalVector rhs;
    std::vector<RowSense> senses;
    RationalVector objective; // length num_vars
    bool maximize = false;

    void add_row(RationalVector coeffs, RowSense sense, Rational b);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RationalVector point;
};

/// Two-phase primal simplex over exact rationals with Bland's pivoting
/// rule. Deterministic; an iteration-cap overrun (impossible for a correct
/// Bland implementation) raises InternalInvariantError.
LpOutcome solve(const LinearProgram& lp);

/// Feasibility only (phase 1).
bool feasible(const LinearProgram& lp);

// ---------------------------------------------------------------------------
// Set covering / packing programs over 0/1 matrices.
// ---------------------------------------------------------------------------

/// minimize c.x subject to M x >= 1, x >= 0 (integrality optional).
struct CoverProgram {
    BinaryMatrix M;
    RationalVector objective; // length M.cols, entries >= 0
    bool integral = false;
};

/// maximize c.y subject to M y <= 1, y >= 0 (integrality optional).
struct PackProgram {
    BinaryMatrix M;
    RationalVector objective; // length M.cols, entries >= 0
    bool integral = false;
};

struct Solution {
    Rational value;
    RationalVector point;
    std::optional<RationalVector> dual_point; // LP solves only
};

struct SolveOptions {
    /// Refine the reported optimum to the lexicographically smallest
    /// optimal point (n extra solves). The optimum value never changes.
    bool lex_min_point = false;
};

/// Exact LP optimum with a primal point and an independently solved dual
/// point; primal and dual values are asserted equal (strong duality).
Solution solve_lp(const CoverProgram& p, const SolveOptions& options = {});
Solution solve_lp(const PackProgram& p, const SolveOptions& options = {});

/// Exact integer optimum by depth-first branch and bound on the most
/// fractional variable, seeded and pruned by LP relaxations.
Solution solve_ip(const CoverProgram& p, const Guards& guards = Guards::defaults(),
                  const SolveOptions& options = {});
Solution solve_ip(const PackProgram& p, const Guards& guards = Guards::defaults(),
                  const SolveOptions& options = {});

/// All vertices of {x >= 0, M x >= 1} for a 0/1 matrix M, by exhaustive
/// basis enumeration over n-subsets of the constraint rows. Points are
/// deduplicated and sorted. Guarded by guards.vertex_enum_cap.
std::vector<RationalVector> vertex_enumerate(const BinaryMatrix& M,
                                             const Guards& guards = Guards::defaults());

/// True iff every coordinate of every point is an integer.
bool is_integral(const std::vector<RationalVector>& points);

// ---------------------------------------------------------------------------
// The four linear optimization invariants of a hypergraph.
// ---------------------------------------------------------------------------

struct HypergraphInvariants {
    Int tau;        // transversal number
    Int pi;         // packing (matching) number
    Rational tau_f; // fractional transversal number
    Rational pi_f;  // fractional packing number
};

/// tau, pi and their LP relaxations. Edgeless hypergraphs and the unit
/// state report all four as 0.
HypergraphInvariants hypergraph_invariants(const Hypergraph& H,
                                           const Guards& guards = Guards::defaults());

} // namespace idealpack
