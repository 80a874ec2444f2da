#include "idealpack/ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace idealpack {

namespace {

void require_same_context(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.context() != J.context())
        throw ContextMismatchError("ideals live in different variable contexts");
}

void require_square_free(const MonomialIdeal& I, const char* op) {
    if (!I.is_square_free())
        throw UnsupportedInputError(std::string(op) + " requires a square-free ideal");
}

// Support-set lex order: compare the sorted vertex lists entry by entry,
// shorter prefix first. This is the row/column order of all 0/1 matrices.
bool support_lex_less(const Monomial& a, const Monomial& b) {
    return a.support() < b.support();
}

} // namespace

std::vector<Monomial> minimize(std::vector<Monomial> gens) {
    if (gens.empty()) return gens;
    const int n = gens.front().num_vars();
    for (const auto& g : gens)
        if (g.num_vars() != n)
            throw ContextMismatchError("mixed variable contexts in generator set");

    // Scan candidates by ascending degree so every divisor is seen before
    // its multiples; equal monomials collapse via the dedupe step.
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        Int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<Monomial> minimal;
    for (auto& g : gens) {
        bool dominated = false;
        for (const auto& kept : minimal)
            if (kept.divides(g)) { dominated = true; break; }
        if (!dominated) minimal.push_back(std::move(g));
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const Monomial& a, const Monomial& b) { return b < a; });
    return minimal;
}

MonomialIdeal::MonomialIdeal(VariableContext ctx, std::vector<Monomial> gens)
    : ctx_(std::move(ctx)) {
    for (const auto& g : gens)
        if (g.num_vars() != ctx_.size())
            throw ContextMismatchError("generator does not match the variable context");
    gens_ = minimize(std::move(gens));
}

bool MonomialIdeal::is_square_free() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_square_free(); });
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
    if (m.num_vars() != I.context().size())
        throw ContextMismatchError("monomial does not match the ideal's context");
    for (const auto& g : I.generators())
        if (g.divides(m)) return true;
    return false;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_context(I, J);
    std::vector<Monomial> lcms;
    lcms.reserve(I.generators().size() * J.generators().size());
    for (const auto& a : I.generators())
        for (const auto& b : J.generators())
            lcms.push_back(a.lcm_with(b));
    return MonomialIdeal(I.context(), std::move(lcms));
}

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_context(I, J);
    std::vector<Monomial> products;
    products.reserve(I.generators().size() * J.generators().size());
    for (const auto& a : I.generators())
        for (const auto& b : J.generators())
            products.push_back(a.times(b));
    return MonomialIdeal(I.context(), std::move(products));
}

MonomialIdeal power(const MonomialIdeal& I, int m) {
    if (m < 1) throw UnsupportedInputError("power requires m >= 1");
    MonomialIdeal result = I;
    for (int k = 1; k < m; ++k) result = multiply(result, I);
    return result;
}

PrimeDecomposition prime_decompose(const MonomialIdeal& I) {
    require_square_free(I, "prime_decompose");
    if (I.is_zero())
        throw UnsupportedInputError("prime_decompose rejects the zero ideal");
    const int n = I.context().size();
    if (n > 64)
        throw GuardExceededError("prime_decompose supports at most 64 variables");

    // Iterated expansion over generator supports: fold in one edge at a
    // time, distributing a vertex choice over the covers found so far and
    // discarding non-minimal ones after each step.
    std::vector<std::uint64_t> covers{0};
    if (I.is_unit()) covers.clear(); // empty intersection of primes
    else {
        for (const auto& g : I.generators()) {
            const std::uint64_t edge = g.support_mask();
            std::vector<std::uint64_t> next;
            next.reserve(covers.size() * 2);
            for (std::uint64_t c : covers) {
                if (c & edge) {
                    next.push_back(c);
                    continue;
                }
                for (int v = 0; v < n; ++v)
                    if (edge & (std::uint64_t(1) << v)) next.push_back(c | (std::uint64_t(1) << v));
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            covers.clear();
            for (std::uint64_t c : next) {
                bool dominated = false;
                for (std::uint64_t kept : covers)
                    if ((kept & c) == kept) { dominated = true; break; }
                if (!dominated) covers.push_back(c);
            }
        }
    }

    PrimeDecomposition dec;
    for (std::uint64_t c : covers) {
        std::vector<int> vars;
        for (int v = 0; v < n; ++v)
            if (c & (std::uint64_t(1) << v)) vars.push_back(v);
        dec.primes.push_back(Monomial::from_support(n, vars));
    }
    std::sort(dec.primes.begin(), dec.primes.end(), support_lex_less);
    dec.heights.reserve(dec.primes.size());
    for (const auto& p : dec.primes)
        dec.heights.push_back(static_cast<int>(p.support().size()));
    dec.height = dec.heights.empty() ? 0 : *std::min_element(dec.heights.begin(), dec.heights.end());
    return dec;
}

std::vector<Monomial> degree_m_on_support(int n, const std::vector<int>& support, int m) {
    std::vector<Monomial> out;
    std::vector<Int> exps(n, Int(0));
    // Compositions of m into |support| parts.
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == support.size()) {
            exps[support[pos]] = remaining;
            out.emplace_back(exps);
            exps[support[pos]] = 0;
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            exps[support[pos]] = take;
            self(self, pos + 1, remaining - take);
        }
        exps[support[pos]] = 0;
    };
    if (!support.empty() && m >= 0) rec(rec, 0, m);
    return out;
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, int m, const Guards& guards) {
    require_square_free(I, "symbolic_power");
    if (!I.is_proper())
        throw UnsupportedInputError("symbolic_power requires a proper nonzero ideal");
    if (m < 1) throw UnsupportedInputError("symbolic_power requires m >= 1");
    if (m > guards.sympower_m_cap)
        throw GuardExceededError("symbolic power exponent exceeds the guard cap");

    const PrimeDecomposition dec = prime_decompose(I);
    const int n = I.context().size();
    MonomialIdeal acc;
    bool first = true;
    for (const auto& prime : dec.primes) {
        MonomialIdeal prime_power(I.context(), degree_m_on_support(n, prime.support(), m));
        if (first) {
            acc = std::move(prime_power);
            first = false;
        } else {
            const std::int64_t pending =
                std::int64_t(acc.num_generators()) * prime_power.num_generators();
            if (pending > guards.sympower_term_cap)
                throw GuardExceededError("symbolic power intermediate exceeds the term budget");
            acc = intersect(acc, prime_power);
        }
    }
    return acc;
}

bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_context(I, J);
    return I == J;
}

MonomialIdeal substitute(const MonomialIdeal& I, const std::vector<int>& zeros,
                         const std::vector<int>& ones) {
    const int n = I.context().size();
    std::vector<char> zero_set(n, 0), one_set(n, 0);
    for (int v : zeros) {
        if (v < 0 || v >= n) throw UnsupportedInputError("substitution index out of range");
        zero_set[v] = 1;
    }
    for (int v : ones) {
        if (v < 0 || v >= n) throw UnsupportedInputError("substitution index out of range");
        if (zero_set[v])
            throw UnsupportedInputError("substitution sets overlap at variable " +
                                        I.context().name(v));
        one_set[v] = 1;
    }

    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        bool killed = false;
        std::vector<Int> exps = g.exponents();
        for (int v = 0; v < n; ++v) {
            if (exps[v] == 0) continue;
            if (zero_set[v]) { killed = true; break; }
            if (one_set[v]) exps[v] = 0;
        }
        if (!killed) gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(I.context(), std::move(gens));
}

} // namespace idealpack
