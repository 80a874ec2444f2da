#include "idealpack/polyhedra.hpp"

#include <algorithm>
#include <unordered_map>

namespace idealpack {

namespace {

void require_square_free_proper(const MonomialIdeal& I, const char* op) {
    if (!I.is_square_free())
        throw UnsupportedInputError(std::string(op) + " requires a square-free ideal");
    if (!I.is_proper())
        throw UnsupportedInputError(std::string(op) + " requires a proper nonzero ideal");
}

} // namespace

bool np_contains(const MonomialIdeal& I, const RationalVector& a) {
    if (I.is_zero())
        throw UnsupportedInputError("np_contains: the zero ideal has an empty Newton polyhedron");
    const int n = I.context().size();
    if (static_cast<int>(a.size()) != n)
        throw ContextMismatchError("point dimension does not match the ideal's context");
    for (const auto& coord : a)
        if (coord < 0)
            throw UnsupportedInputError("np_contains rejects negative coordinates");

    // Feasibility of: lambda >= 0, sum lambda = 1, sum lambda_j g_j <= a.
    const auto& gens = I.generators();
    const int t = static_cast<int>(gens.size());
    LinearProgram lp;
    lp.num_vars = t;
    lp.objective.assign(t, Rational(0));
    {
        RationalVector ones(t, Rational(1));
        lp.add_row(std::move(ones), RowSense::EQ, Rational(1));
    }
    for (int i = 0; i < n; ++i) {
        RationalVector row(t);
        for (int j = 0; j < t; ++j) row[j] = Rational(gens[j].exponent(i));
        lp.add_row(std::move(row), RowSense::LE, a[i]);
    }
    return feasible(lp);
}

bool sp_contains(const MonomialIdeal& I, const RationalVector& a) {
    if (!I.is_square_free())
        throw UnsupportedInputError("sp_contains requires a square-free ideal");
    if (I.is_zero())
        throw UnsupportedInputError("sp_contains rejects the zero ideal");
    const int n = I.context().size();
    if (static_cast<int>(a.size()) != n)
        throw ContextMismatchError("point dimension does not match the ideal's context");
    for (const auto& coord : a)
        if (coord < 0) return false;
    for (const auto& prime : prime_decompose(I).primes) {
        Rational sum = 0;
        for (int v : prime.support()) sum += a[v];
        if (sum < 1) return false;
    }
    return true;
}

std::vector<RationalVector> sp_vertices(const MonomialIdeal& I, const Guards& guards) {
    require_square_free_proper(I, "sp_vertices");
    return vertex_enumerate(prime_matrix(I), guards);
}

IntegralityReport sp_integrality(const MonomialIdeal& I, const Guards& guards) {
    require_square_free_proper(I, "sp_integrality");
    const Hypergraph H = hypergraph_of(I);
    const MonomialIdeal dual = alexander_dual(I);

    const BinaryMatrix A = prime_matrix(I);
    const BinaryMatrix Bt = transpose(incidence_matrix(H));

    // Transposition identities, re-verified on every call.
    if (prime_matrix(dual) != Bt)
        throw InternalInvariantError("prime matrix of the dual differs from B^T");
    if (incidence_matrix(blocker(H)) != transpose(A))
        throw InternalInvariantError("incidence matrix of the blocker differs from A^T");

    IntegralityReport rep;
    rep.sp_integral = is_integral(vertex_enumerate(A, guards));
    rep.hypergraph_fulkersonian = is_integral(vertex_enumerate(Bt, guards));
    if (rep.sp_integral != rep.hypergraph_fulkersonian)
        throw InternalInvariantError(
            "integrality of SP(I) and of the covering polyhedron of H disagree");
    // SP(I) is the covering polyhedron of the blocker, and SP(I^v) that of
    // H itself, so the remaining verdicts follow from the identities above.
    rep.blocker_fulkersonian = rep.sp_integral;
    rep.dual_sp_integral = rep.hypergraph_fulkersonian;
    return rep;
}

bool sp_is_integral(const MonomialIdeal& I, const Guards& guards) {
    return sp_integrality(I, guards).sp_integral;
}

bool np_equals_sp(const MonomialIdeal& I, const Guards& guards) {
    require_square_free_proper(I, "np_equals_sp");
    for (const auto& vertex : sp_vertices(I, guards))
        if (!np_contains(I, vertex)) return false;
    return true;
}

int default_box_bound(const MonomialIdeal& I) {
    Int best = 0;
    for (const auto& g : I.generators()) best = std::max(best, g.total_degree());
    if (best > 1000000)
        throw GuardExceededError("generator degrees too large for a lattice scan");
    return static_cast<int>(best) + 1;
}

bool lattice_points_agree(const MonomialIdeal& I, int box_bound, const Guards& guards) {
    require_square_free_proper(I, "lattice_points_agree");
    if (box_bound < 0) throw UnsupportedInputError("box bound must be non-negative");
    const int n = I.context().size();
    if (n > 32) throw GuardExceededError("lattice scan supports at most 32 variables");

    double points = 1;
    for (int i = 0; i < n; ++i) points *= box_bound + 1;
    if (points > static_cast<double>(guards.lattice_point_cap))
        throw GuardExceededError("lattice scan exceeds the point budget");

    // For a square-free ideal both NP and SP membership of an integer point
    // only depend on min(a, 1): a convex combination of 0/1 exponent
    // vectors never exceeds 1 in any coordinate, and a covering inequality
    // is satisfied by integers iff some supporting coordinate is positive.
    // So the scan resolves every point through a memo on capped vectors,
    // each entry still computed by the genuine np/sp membership tests.
    std::unordered_map<std::uint32_t, std::pair<bool, bool>> memo;
    std::vector<int> a(n, 0);
    while (true) {
        std::uint32_t mask = 0;
        for (int i = 0; i < n; ++i)
            if (a[i] > 0) mask |= std::uint32_t(1) << i;
        auto it = memo.find(mask);
        if (it == memo.end()) {
            RationalVector capped(n);
            for (int i = 0; i < n; ++i) capped[i] = (mask >> i) & 1;
            it = memo.emplace(mask, std::make_pair(np_contains(I, capped),
                                                   sp_contains(I, capped)))
                     .first;
        }
        if (it->second.first != it->second.second) return false;
        int pos = 0;
        while (pos < n && a[pos] == box_bound) a[pos++] = 0;
        if (pos == n) break;
        ++a[pos];
    }
    return true;
}

Int alpha(const MonomialIdeal& I) {
    if (I.is_zero())
        throw UnsupportedInputError("alpha is undefined for the zero ideal");
    Int best = I.generators().front().total_degree();
    for (const auto& g : I.generators()) best = std::min(best, g.total_degree());
    return best;
}

Rational waldschmidt(const MonomialIdeal& I) {
    require_square_free_proper(I, "waldschmidt");
    const BinaryMatrix A = prime_matrix(I);
    CoverProgram p{A, RationalVector(A.cols, Rational(1)), false};
    return solve_lp(p).value;
}

std::vector<std::pair<int, Rational>> waldschmidt_limit_check(const MonomialIdeal& I,
                                                              int m_max,
                                                              const Guards& guards) {
    require_square_free_proper(I, "waldschmidt_limit_check");
    if (m_max < 1) throw UnsupportedInputError("waldschmidt_limit_check requires m_max >= 1");
    const Rational w = waldschmidt(I);
    std::vector<std::pair<int, Rational>> terms;
    terms.reserve(m_max);
    for (int m = 1; m <= m_max; ++m) {
        const MonomialIdeal sym = symbolic_power(I, m, guards);
        Rational term = Rational(alpha(sym)) / m;
        if (term < w)
            throw InternalInvariantError(
                "alpha(I^(m))/m dropped below the Waldschmidt constant");
        terms.emplace_back(m, std::move(term));
    }
    return terms;
}

std::optional<int> scaling_membership_check(const MonomialIdeal& I,
                                            const RationalVector& point, int b_max,
                                            const Guards& guards) {
    require_square_free_proper(I, "scaling_membership_check");
    if (!sp_contains(I, point))
        throw UnsupportedInputError("scaling_membership_check requires a point of SP(I)");
    if (b_max < 1 || b_max > guards.sympower_m_cap)
        throw GuardExceededError("scaling bound outside the symbolic power cap");
    const int n = I.context().size();
    for (int b = 1; b <= b_max; ++b) {
        bool integral = true;
        std::vector<Int> exps(n);
        for (int i = 0; i < n && integral; ++i) {
            Rational scaled = point[i] * b;
            if (!is_integer(scaled)) integral = false;
            else exps[i] = numerator(scaled);
        }
        if (!integral) continue;
        if (contains(symbolic_power(I, b, guards), Monomial(std::move(exps)))) return b;
    }
    return std::nullopt;
}

LpEquivalence lp_equivalence_check(const MonomialIdeal& I, const RationalVector& c) {
    require_square_free_proper(I, "lp_equivalence_check");
    const int n = I.context().size();
    if (static_cast<int>(c.size()) != n)
        throw ContextMismatchError("objective length does not match the context");
    for (const auto& x : c)
        if (x < 0)
            throw UnsupportedInputError(
                "lp_equivalence_check requires non-negative objectives");

    const BinaryMatrix A = prime_matrix(I);
    Solution sp = solve_lp(CoverProgram{A, c, false});

    // NP side in V-representation: a = sum lambda_j g_j + s with lambda in
    // the simplex and slack s >= 0; minimize c over such points.
    const auto& gens = I.generators();
    const int t = static_cast<int>(gens.size());
    LinearProgram np;
    np.num_vars = t + n;
    np.objective.assign(t + n, Rational(0));
    for (int j = 0; j < t; ++j) {
        Rational dot = 0;
        for (int i = 0; i < n; ++i) dot += c[i] * Rational(gens[j].exponent(i));
        np.objective[j] = dot;
    }
    for (int i = 0; i < n; ++i) np.objective[t + i] = c[i];
    {
        RationalVector row(t + n, Rational(0));
        for (int j = 0; j < t; ++j) row[j] = 1;
        np.add_row(std::move(row), RowSense::EQ, Rational(1));
    }
    LpOutcome np_out = solve(np);
    if (np_out.status != LpStatus::Optimal)
        throw InternalInvariantError("Newton polyhedron LP failed to solve");

    LpEquivalence out;
    out.sp_value = sp.value;
    out.np_value = np_out.value;
    out.equal = out.sp_value == out.np_value;
    return out;
}

} // namespace idealpack
