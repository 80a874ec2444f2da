#include "idealpack/lp.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>

namespace idealpack {

void LinearProgram::add_row(RationalVector coeffs, RowSense sense, Rational b) {
    if (static_cast<int>(coeffs.size()) != num_vars)
        throw UnsupportedInputError("row length does not match the variable count");
    rows.push_back(std::move(coeffs));
    senses.push_back(sense);
    rhs.push_back(std::move(b));
}

namespace {

constexpr long kPivotCap = 1'000'000;

// Dense two-phase tableau. Column layout: structural | slack | artificial |
// rhs. Two objective rows are carried through every pivot, so phase 2 needs
// no re-pricing.
class SimplexTableau {
public:
    explicit SimplexTableau(const LinearProgram& lp) : n_(lp.num_vars) {
        const int m = static_cast<int>(lp.rows.size());
        std::vector<RationalVector> rows = lp.rows;
        RationalVector rhs = lp.rhs;
        std::vector<RowSense> senses = lp.senses;
        for (int i = 0; i < m; ++i) {
            if (rhs[i] < 0) {
                for (auto& c : rows[i]) c = -c;
                rhs[i] = -rhs[i];
                senses[i] = senses[i] == RowSense::LE   ? RowSense::GE
                            : senses[i] == RowSense::GE ? RowSense::LE
                                                        : RowSense::EQ;
            }
        }
        int num_slack = 0;
        for (auto s : senses)
            if (s != RowSense::EQ) ++num_slack;
        int num_art = 0;
        for (auto s : senses)
            if (s != RowSense::LE) ++num_art;
        slack_begin_ = n_;
        art_begin_ = n_ + num_slack;
        cols_ = art_begin_ + num_art; // + rhs column appended below

        tab_.assign(m + 2, RationalVector(cols_ + 1, Rational(0)));
        basis_.assign(m, -1);
        active_.assign(m, true);

        int slack = slack_begin_, art = art_begin_;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n_; ++j) tab_[i][j] = rows[i][j];
            tab_[i][cols_] = rhs[i];
            if (senses[i] == RowSense::LE) {
                tab_[i][slack] = 1;
                basis_[i] = slack++;
            } else if (senses[i] == RowSense::GE) {
                tab_[i][slack] = -1;
                ++slack;
                tab_[i][art] = 1;
                basis_[i] = art++;
            } else {
                tab_[i][art] = 1;
                basis_[i] = art++;
            }
        }

        // Phase-2 reduced costs: plain objective (min form), zero elsewhere.
        RationalVector c = lp.objective;
        if (lp.maximize)
            for (auto& x : c) x = -x;
        for (int j = 0; j < n_; ++j) tab_[m][j] = c[j];

        // Phase-1 reduced costs: unit cost on artificials, priced out
        // against the artificial part of the starting basis.
        for (int j = art_begin_; j < cols_; ++j) tab_[m + 1][j] = 1;
        for (int i = 0; i < m; ++i) {
            if (basis_[i] >= art_begin_)
                for (int j = 0; j <= cols_; ++j) tab_[m + 1][j] -= tab_[i][j];
        }
        m_ = m;
    }

    LpStatus run_phase1() {
        optimize(m_ + 1, /*allow_artificial=*/true);
        if (tab_[m_ + 1][cols_] != 0) return LpStatus::Infeasible;
        // Pivot leftover artificials out of the basis; rows that cannot be
        // pivoted are redundant equalities.
        for (int i = 0; i < m_; ++i) {
            if (!active_[i] || basis_[i] < art_begin_) continue;
            int enter = -1;
            for (int j = 0; j < art_begin_; ++j)
                if (tab_[i][j] != 0) { enter = j; break; }
            if (enter < 0)
                active_[i] = false;
            else
                pivot(i, enter);
        }
        return LpStatus::Optimal;
    }

    LpStatus run_phase2() { return optimize(m_, /*allow_artificial=*/false); }

    Rational objective_value() const { return -tab_[m_][cols_]; }

    RationalVector structural_point() const {
        RationalVector x(n_, Rational(0));
        for (int i = 0; i < m_; ++i)
            if (active_[i] && basis_[i] < n_) x[basis_[i]] = tab_[i][cols_];
        return x;
    }

private:
    LpStatus optimize(int obj_row, bool allow_artificial) {
        const int limit = allow_artificial ? cols_ : art_begin_;
        for (long iter = 0; iter < kPivotCap; ++iter) {
            int enter = -1;
            for (int j = 0; j < limit; ++j)
                if (tab_[obj_row][j] < 0) { enter = j; break; } // Bland: lowest index
            if (enter < 0) return LpStatus::Optimal;

            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < m_; ++i) {
                if (!active_[i] || tab_[i][enter] <= 0) continue;
                Rational ratio = tab_[i][cols_] / tab_[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
        throw InternalInvariantError("simplex pivot cap exceeded; Bland's rule should cycle-free");
    }

    void pivot(int r, int s) {
        RationalVector& prow = tab_[r];
        const Rational inv = Rational(1) / prow[s];
        for (auto& v : prow) v *= inv;
        prow[s] = 1; // exact, avoids 1-as-fraction drift in comparisons
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r) continue;
            const Rational f = tab_[i][s];
            if (f == 0) continue;
            RationalVector& row = tab_[i];
            for (int j = 0; j <= cols_; ++j)
                if (prow[j] != 0) row[j] -= f * prow[j];
            row[s] = 0;
        }
        basis_[r] = s;
    }

    int n_ = 0, m_ = 0, cols_ = 0, slack_begin_ = 0, art_begin_ = 0;
    std::vector<RationalVector> tab_;
    std::vector<int> basis_;
    std::vector<char> active_;
};

void validate_binary(const BinaryMatrix& M) {
    if (static_cast<int>(M.entries.size()) != M.rows)
        throw UnsupportedInputError("matrix row count mismatch");
    for (const auto& row : M.entries) {
        if (static_cast<int>(row.size()) != M.cols)
            throw UnsupportedInputError("matrix column count mismatch");
        for (int v : row)
            if (v != 0 && v != 1) throw UnsupportedInputError("matrix entries must be 0 or 1");
    }
}

void validate_objective(const RationalVector& c, int expect) {
    if (static_cast<int>(c.size()) != expect)
        throw UnsupportedInputError("objective length does not match the program");
    for (const auto& x : c)
        if (x < 0) throw UnsupportedInputError("objective coefficients must be non-negative");
}

LinearProgram cover_relaxation(const CoverProgram& p) {
    LinearProgram lp;
    lp.num_vars = p.M.cols;
    lp.objective = p.objective;
    lp.maximize = false;
    for (int i = 0; i < p.M.rows; ++i) {
        RationalVector row(p.M.cols);
        bool nonzero = false;
        for (int j = 0; j < p.M.cols; ++j) {
            row[j] = p.M.entries[i][j];
            nonzero |= p.M.entries[i][j] != 0;
        }
        if (!nonzero)
            throw UnsupportedInputError("cover program has an unsatisfiable empty constraint");
        lp.add_row(std::move(row), RowSense::GE, Rational(1));
    }
    return lp;
}

LinearProgram pack_relaxation(const PackProgram& p) {
    LinearProgram lp;
    lp.num_vars = p.M.cols;
    lp.objective = p.objective;
    lp.maximize = true;
    for (int j = 0; j < p.M.cols; ++j) {
        bool nonzero = false;
        for (int i = 0; i < p.M.rows; ++i) nonzero |= p.M.entries[i][j] != 0;
        if (!nonzero && p.objective[j] > 0)
            throw UnsupportedInputError("pack program is unbounded: variable outside every constraint");
    }
    for (int i = 0; i < p.M.rows; ++i) {
        RationalVector row(p.M.cols);
        for (int j = 0; j < p.M.cols; ++j) row[j] = p.M.entries[i][j];
        lp.add_row(std::move(row), RowSense::LE, Rational(1));
    }
    return lp;
}

LpOutcome solve_raw(const LinearProgram& lp) {
    SimplexTableau t(lp);
    LpOutcome out;
    if (t.run_phase1() == LpStatus::Infeasible) {
        out.status = LpStatus::Infeasible;
        return out;
    }
    out.status = t.run_phase2();
    if (out.status != LpStatus::Optimal) return out;
    Rational value = t.objective_value();
    out.value = lp.maximize ? -value : value;
    out.point = t.structural_point();
    return out;
}

/// Refines an optimal solution to the lexicographically smallest optimal
/// point by fixing coordinates one at a time.
RationalVector lex_min_optimal_point(const LinearProgram& lp, const Rational& value) {
    LinearProgram fixed = lp;
    fixed.add_row(lp.objective, RowSense::EQ, value);
    RationalVector point(lp.num_vars);
    for (int i = 0; i < lp.num_vars; ++i) {
        LinearProgram probe = fixed;
        probe.maximize = false;
        probe.objective.assign(lp.num_vars, Rational(0));
        probe.objective[i] = 1;
        LpOutcome out = solve_raw(probe);
        if (out.status != LpStatus::Optimal)
            throw InternalInvariantError("lexicographic refinement lost feasibility");
        point[i] = out.value;
        RationalVector unit(lp.num_vars, Rational(0));
        unit[i] = 1;
        fixed.add_row(std::move(unit), RowSense::EQ, out.value);
    }
    return point;
}

Solution solve_lp_pair(const LinearProgram& primal, const LinearProgram& dual,
                       const SolveOptions& options) {
    LpOutcome pout = solve_raw(primal);
    if (pout.status != LpStatus::Optimal)
        throw InternalInvariantError("cover/pack LP relaxation failed to solve");
    LpOutcome dout = solve_raw(dual);
    if (dout.status != LpStatus::Optimal || dout.value != pout.value)
        throw InternalInvariantError("strong duality certificate mismatch in solve_lp");
    Solution s;
    s.value = pout.value;
    s.point = options.lex_min_point ? lex_min_optimal_point(primal, pout.value)
                                    : std::move(pout.point);
    s.dual_point = std::move(dout.point);
    return s;
}

// ---------------------------------------------------------------------------
// Branch and bound
// ---------------------------------------------------------------------------

struct BnbContext {
    bool minimize = true;
    bool integral_objective = true;
    std::int64_t nodes = 0;
    std::int64_t node_cap = 0;
    std::optional<Rational> incumbent;
    RationalVector incumbent_point;
};

bool improves(const BnbContext& ctx, const Rational& candidate) {
    if (!ctx.incumbent) return true;
    return ctx.minimize ? candidate < *ctx.incumbent : candidate > *ctx.incumbent;
}

bool prunable(const BnbContext& ctx, const Rational& bound) {
    if (!ctx.incumbent) return false;
    Rational effective = bound;
    if (ctx.integral_objective)
        effective = ctx.minimize ? Rational(ceil_of(bound)) : Rational(floor_of(bound));
    return ctx.minimize ? effective >= *ctx.incumbent : effective <= *ctx.incumbent;
}

void branch_and_bound(const LinearProgram& node, BnbContext& ctx) {
    if (++ctx.nodes > ctx.node_cap)
        throw GuardExceededError("branch-and-bound node budget exceeded");
    LpOutcome relax = solve_raw(node);
    if (relax.status == LpStatus::Infeasible) return;
    if (relax.status == LpStatus::Unbounded)
        throw InternalInvariantError("unbounded relaxation inside branch and bound");
    if (prunable(ctx, relax.value)) return;

    // Most fractional coordinate; ties to the smallest index.
    int branch_var = -1;
    Rational branch_value, best_gap;
    for (int i = 0; i < node.num_vars; ++i) {
        if (is_integer(relax.point[i])) continue;
        Rational frac = relax.point[i] - Rational(floor_of(relax.point[i]));
        Rational gap = abs(frac - Rational(1, 2));
        if (branch_var < 0 || gap < best_gap) {
            branch_var = i;
            branch_value = relax.point[i];
            best_gap = gap;
        }
    }
    if (branch_var < 0) {
        if (improves(ctx, relax.value)) {
            ctx.incumbent = relax.value;
            ctx.incumbent_point = relax.point;
        }
        return;
    }

    const Int fl = floor_of(branch_value);
    RationalVector unit(node.num_vars, Rational(0));
    unit[branch_var] = 1;
    LinearProgram down = node;
    down.add_row(unit, RowSense::LE, Rational(fl));
    branch_and_bound(down, ctx);
    LinearProgram up = node;
    up.add_row(unit, RowSense::GE, Rational(fl + 1));
    branch_and_bound(up, ctx);
}

Solution run_ip(const LinearProgram& base, const Guards& guards, const SolveOptions& options) {
    BnbContext ctx;
    ctx.minimize = !base.maximize;
    ctx.integral_objective =
        std::all_of(base.objective.begin(), base.objective.end(),
                    [](const Rational& c) { return is_integer(c); });
    ctx.node_cap = guards.search_node_cap;
    branch_and_bound(base, ctx);
    if (!ctx.incumbent)
        throw InternalInvariantError("integer program unexpectedly infeasible");

    Solution s;
    s.value = *ctx.incumbent;
    s.point = std::move(ctx.incumbent_point);
    if (options.lex_min_point) {
        // Lock the optimum value, then minimize coordinates left to right.
        LinearProgram fixed = base;
        fixed.add_row(base.objective, RowSense::EQ, s.value);
        for (int i = 0; i < base.num_vars; ++i) {
            LinearProgram probe = fixed;
            probe.maximize = false;
            probe.objective.assign(base.num_vars, Rational(0));
            probe.objective[i] = 1;
            BnbContext sub;
            sub.minimize = true;
            sub.integral_objective = true;
            sub.node_cap = guards.search_node_cap;
            branch_and_bound(probe, sub);
            if (!sub.incumbent)
                throw InternalInvariantError("lexicographic IP refinement lost feasibility");
            RationalVector unit(base.num_vars, Rational(0));
            unit[i] = 1;
            fixed.add_row(std::move(unit), RowSense::EQ, *sub.incumbent);
            s.point[i] = *sub.incumbent;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Vertex enumeration kernel: fraction-free forward elimination (Bareiss)
// over int64, then integer back-substitution with the final pivot as the
// common denominator. Safe for 0/1 systems up to dimension 12 by the
// Hadamard bound.
// ---------------------------------------------------------------------------

constexpr int kMaxDim = 14;

bool solve_unit_rhs(std::int64_t a[kMaxDim][kMaxDim + 1], int k, std::int64_t* num,
                    std::int64_t& den) {
    std::int64_t prev = 1;
    for (int col = 0; col < k; ++col) {
        int pr = col;
        while (pr < k && a[pr][col] == 0) ++pr;
        if (pr == k) return false;
        if (pr != col)
            for (int j = 0; j <= k; ++j) std::swap(a[pr][j], a[col][j]);
        const std::int64_t piv = a[col][col];
        for (int r = col + 1; r < k; ++r) {
            const std::int64_t f = a[r][col];
            for (int j = col; j <= k; ++j) a[r][j] = (piv * a[r][j] - f * a[col][j]) / prev;
        }
        prev = piv;
    }
    den = a[k - 1][k - 1];
    if (den == 0) return false;
    // x_i * den is integral by Cramer's rule, so these divisions are exact.
    for (int i = k - 1; i >= 0; --i) {
        std::int64_t acc = a[i][k] * den;
        for (int j = i + 1; j < k; ++j) acc -= a[i][j] * num[j];
        num[i] = acc / a[i][i];
    }
    if (den < 0) {
        den = -den;
        for (int i = 0; i < k; ++i) num[i] = -num[i];
    }
    return true;
}

} // namespace

LpOutcome solve(const LinearProgram& lp) { return solve_raw(lp); }

bool feasible(const LinearProgram& lp) {
    SimplexTableau t(lp);
    return t.run_phase1() != LpStatus::Infeasible;
}

Solution solve_lp(const CoverProgram& p, const SolveOptions& options) {
    validate_binary(p.M);
    validate_objective(p.objective, p.M.cols);
    if (p.integral)
        throw UnsupportedInputError("solve_lp expects a relaxed program; use solve_ip");
    LinearProgram primal = cover_relaxation(p);
    // Dual: maximize 1.y subject to M^T y <= c, y >= 0.
    LinearProgram dual;
    dual.num_vars = p.M.rows;
    dual.objective.assign(p.M.rows, Rational(1));
    dual.maximize = true;
    for (int j = 0; j < p.M.cols; ++j) {
        RationalVector row(p.M.rows);
        for (int i = 0; i < p.M.rows; ++i) row[i] = p.M.entries[i][j];
        dual.add_row(std::move(row), RowSense::LE, p.objective[j]);
    }
    return solve_lp_pair(primal, dual, options);
}

Solution solve_lp(const PackProgram& p, const SolveOptions& options) {
    validate_binary(p.M);
    validate_objective(p.objective, p.M.cols);
    if (p.integral)
        throw UnsupportedInputError("solve_lp expects a relaxed program; use solve_ip");
    LinearProgram primal = pack_relaxation(p);
    // Dual: minimize 1.z subject to M^T z >= c, z >= 0.
    LinearProgram dual;
    dual.num_vars = p.M.rows;
    dual.objective.assign(p.M.rows, Rational(1));
    dual.maximize = false;
    for (int j = 0; j < p.M.cols; ++j) {
        RationalVector row(p.M.rows);
        for (int i = 0; i < p.M.rows; ++i) row[i] = p.M.entries[i][j];
        dual.add_row(std::move(row), RowSense::GE, p.objective[j]);
    }
    return solve_lp_pair(primal, dual, options);
}

Solution solve_ip(const CoverProgram& p, const Guards& guards, const SolveOptions& options) {
    validate_binary(p.M);
    validate_objective(p.objective, p.M.cols);
    if (!p.integral)
        throw UnsupportedInputError("solve_ip expects an integral program; use solve_lp");
    if (p.M.cols > guards.ip_var_cap)
        throw GuardExceededError("integer program exceeds the variable cap");
    return run_ip(cover_relaxation(p), guards, options);
}

Solution solve_ip(const PackProgram& p, const Guards& guards, const SolveOptions& options) {
    validate_binary(p.M);
    validate_objective(p.objective, p.M.cols);
    if (!p.integral)
        throw UnsupportedInputError("solve_ip expects an integral program; use solve_lp");
    if (p.M.cols > guards.ip_var_cap)
        throw GuardExceededError("integer program exceeds the variable cap");
    return run_ip(pack_relaxation(p), guards, options);
}

std::vector<RationalVector> vertex_enumerate(const BinaryMatrix& M, const Guards& guards) {
    validate_binary(M);
    const int n = M.cols;
    const int s = M.rows;
    if (n > guards.vertex_enum_cap)
        throw GuardExceededError("vertex enumeration exceeds the dimension cap");
    if (n == 0) return {};
    for (int i = 0; i < s; ++i)
        if (std::all_of(M.entries[i].begin(), M.entries[i].end(), [](int v) { return v == 0; }))
            throw UnsupportedInputError("constraint matrix has an all-zero row");
    if (s == 0) return {RationalVector(n, Rational(0))};

    std::set<RationalVector> found;
    std::vector<int> free_coords;
    for (std::uint32_t fmask = 1; fmask < (1u << n); ++fmask) {
        free_coords.clear();
        for (int j = 0; j < n; ++j)
            if (fmask & (1u << j)) free_coords.push_back(j);
        const int k = static_cast<int>(free_coords.size());
        if (k > s) continue;

        // All k-subsets of the s constraint rows become candidate bases.
        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::int64_t a[kMaxDim][kMaxDim + 1];
            for (int r = 0; r < k; ++r) {
                for (int c = 0; c < k; ++c) a[r][c] = M.entries[pick[r]][free_coords[c]];
                a[r][k] = 1;
            }
            std::int64_t num[kMaxDim], den = 0;
            if (solve_unit_rhs(a, k, num, den)) {
                bool ok = true;
                for (int c = 0; c < k && ok; ++c) ok = num[c] >= 0;
                for (int i = 0; i < s && ok; ++i) {
                    std::int64_t sum = 0;
                    for (int c = 0; c < k; ++c)
                        if (M.entries[i][free_coords[c]]) sum += num[c];
                    ok = sum >= den;
                }
                if (ok) {
                    RationalVector point(n, Rational(0));
                    for (int c = 0; c < k; ++c)
                        point[free_coords[c]] = Rational(num[c], den);
                    found.insert(std::move(point));
                }
            }
            // next combination
            int idx = k - 1;
            while (idx >= 0 && pick[idx] == s - k + idx) --idx;
            if (idx < 0) break;
            ++pick[idx];
            for (int j = idx + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return {found.begin(), found.end()};
}

bool is_integral(const std::vector<RationalVector>& points) {
    for (const auto& p : points)
        for (const auto& c : p)
            if (!is_integer(c)) return false;
    return true;
}

HypergraphInvariants hypergraph_invariants(const Hypergraph& H, const Guards& guards) {
    if (H.unit || H.edges.empty())
        return HypergraphInvariants{Int(0), Int(0), Rational(0), Rational(0)};
    const BinaryMatrix B = incidence_matrix(H);
    const BinaryMatrix Bt = transpose(B);

    CoverProgram cover{Bt, RationalVector(Bt.cols, Rational(1)), false};
    PackProgram pack{B, RationalVector(B.cols, Rational(1)), false};
    Solution tau_f = solve_lp(cover);
    Solution pi_f = solve_lp(pack);
    if (tau_f.value != pi_f.value)
        throw InternalInvariantError("LP duality violated: tau_f != pi_f");

    cover.integral = true;
    pack.integral = true;
    Solution tau = solve_ip(cover, guards);
    Solution pi = solve_ip(pack, guards);
    if (!is_integer(tau.value) || !is_integer(pi.value))
        throw InternalInvariantError("integer program returned a fractional optimum");

    HypergraphInvariants inv{numerator(tau.value), numerator(pi.value), tau_f.value, pi_f.value};
    if (!(Rational(inv.pi) <= inv.pi_f && inv.tau_f <= Rational(inv.tau)))
        throw InternalInvariantError("duality chain pi <= pi_f = tau_f <= tau violated");
    return inv;
}

} // namespace idealpack
