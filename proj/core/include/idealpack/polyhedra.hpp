#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "idealpack/lp.hpp"

namespace idealpack {

// The Newton polyhedron NP(I) is kept in V-representation only: the convex
// hull of the generator exponents plus the non-negative orthant. Membership
// questions are exact LP feasibility problems. The symbolic polyhedron
// SP(I) of a square-free ideal is the halfspace system {y >= 0, A y >= 1}
// over the prime decomposition matrix A.

/// a in conv(exponents of generators) + R^n_{>=0}, decided by exact LP
/// feasibility. Works for arbitrary monomial ideals; rejects negative
/// coordinates and the zero ideal.
bool np_contains(const MonomialIdeal& I, const RationalVector& a);

/// a satisfies every prime covering inequality of the square-free ideal I.
bool sp_contains(const MonomialIdeal& I, const RationalVector& a);

/// Vertices of SP(I), via vertex_enumerate on the prime matrix.
std::vector<RationalVector> sp_vertices(const MonomialIdeal& I,
                                        const Guards& guards = Guards::defaults());

/// The four equivalent integrality verdicts: SP(I) integral, H
/// Fulkersonian, H^v Fulkersonian, SP(I^v) integral. The first two are
/// computed by independent vertex enumerations and cross-checked; the other
/// two follow through the matrix transposition identities, which are
/// themselves re-verified on every call.
struct IntegralityReport {
    bool sp_integral = false;
    bool hypergraph_fulkersonian = false;
    bool blocker_fulkersonian = false;
    bool dual_sp_integral = false;
};

IntegralityReport sp_integrality(const MonomialIdeal& I,
                                 const Guards& guards = Guards::defaults());

/// Single verdict from sp_integrality.
bool sp_is_integral(const MonomialIdeal& I, const Guards& guards = Guards::defaults());

/// NP(I) = SP(I)? Since NP(I) is always contained in SP(I), it is enough to
/// test every vertex of SP(I) for membership in NP(I).
bool np_equals_sp(const MonomialIdeal& I, const Guards& guards = Guards::defaults());

/// Scans all integer points with coordinates <= box_bound and reports
/// whether np_contains and sp_contains agree on every one of them.
bool lattice_points_agree(const MonomialIdeal& I, int box_bound,
                          const Guards& guards = Guards::defaults());

/// The default scan box: maximum generator degree + 1. Beyond it upward
/// closure makes agreement automatic.
int default_box_bound(const MonomialIdeal& I);

/// Initial degree: least total degree of a minimal generator.
Int alpha(const MonomialIdeal& I);

/// The Waldschmidt constant as the exact LP minimum of the coordinate sum
/// over SP(I).
Rational waldschmidt(const MonomialIdeal& I);

/// The sequence alpha(I^(m))/m for m = 1..m_max, each symbolic power
/// computed directly. Every term is verified to be >= waldschmidt(I).
std::vector<std::pair<int, Rational>> waldschmidt_limit_check(
    const MonomialIdeal& I, int m_max, const Guards& guards = Guards::defaults());

/// Least b <= b_max such that b*point is integral and x^(b*point) lies in
/// I^(b); std::nullopt when no such b exists within the cap.
std::optional<int> scaling_membership_check(const MonomialIdeal& I,
                                            const RationalVector& point, int b_max,
                                            const Guards& guards = Guards::defaults());

struct LpEquivalence {
    Rational sp_value;
    Rational np_value;
    bool equal = false;
};

/// Minimizes c over SP(I) (halfspace LP) and over NP(I) (V-representation
/// LP over barycentric weights and slack), both exactly. Requires c >= 0;
/// with a negative coefficient both programs would be unbounded below.
LpEquivalence lp_equivalence_check(const MonomialIdeal& I, const RationalVector& c);

} // namespace idealpack
