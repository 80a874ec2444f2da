#pragma once

#include <optional>
#include <vector>

#include "idealpack/guards.hpp"
#include "idealpack/monomial.hpp"

namespace idealpack {

/// Returns the divisibility-minimal elements of `gens`: an antichain
/// generating the same ideal. Deduplicates; preserves nothing of the input
/// order (output is sorted descending lexicographically).
std::vector<Monomial> minimize(std::vector<Monomial> gens);

/// A monomial ideal in canonical form: the generator set is kept minimized
/// (an antichain under divisibility) and sorted, so equality of ideals is
/// equality of generator lists. The zero ideal has no generators; the unit
/// ideal is generated by 1 and only ever arises from substitutions.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(VariableContext ctx, std::vector<Monomial> gens);

    const VariableContext& context() const { return ctx_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_proper() const { return !is_zero() && !is_unit(); }
    bool is_square_free() const;

    bool operator==(const MonomialIdeal& other) const {
        return ctx_ == other.ctx_ && gens_ == other.gens_;
    }
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

private:
    VariableContext ctx_;
    std::vector<Monomial> gens_;
};

/// The irredundant prime decomposition of a square-free monomial ideal:
/// each prime is recorded as the square-free monomial on its variables.
/// Primes are sorted by their support sets (lexicographically).
struct PrimeDecomposition {
    std::vector<Monomial> primes;
    std::vector<int> heights;
    int height = 0; // min of heights; 0 only for the unit ideal

    std::vector<std::vector<int>> supports() const {
        std::vector<std::vector<int>> s;
        s.reserve(primes.size());
        for (const auto& p : primes) s.push_back(p.support());
        return s;
    }
};

/// True iff some generator of I divides m.
bool contains(const MonomialIdeal& I, const Monomial& m);

/// Generated by the pairwise lcms of the two generator sets.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// Generated by the pairwise products.
MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);

/// I^m for m >= 1; m = 0 is rejected (the unit ideal is out of scope here).
MonomialIdeal power(const MonomialIdeal& I, int m);

/// Minimal primes of a square-free ideal, i.e. the minimal transversals of
/// the generator supports (Berge-style iterated expansion). The unit ideal
/// decomposes into no primes with height 0; the zero ideal is rejected.
PrimeDecomposition prime_decompose(const MonomialIdeal& I);

/// I^(m) = intersection of the m-th powers of the minimal primes, where the
/// power of a prime on support S is generated by all degree-m monomials on S.
MonomialIdeal symbolic_power(const MonomialIdeal& I, int m,
                             const Guards& guards = Guards::defaults());

/// Canonical-form comparison.
bool equals(const MonomialIdeal& I, const MonomialIdeal& J);

/// Sets the variables in `zeros` to 0 (dropping any generator they divide)
/// and the variables in `ones` to 1 (erasing them from the exponent
/// vectors), then re-minimizes. The two sets must be disjoint. This is the
/// ideal-side companion of hypergraph deletion/contraction.
MonomialIdeal substitute(const MonomialIdeal& I, const std::vector<int>& zeros,
                         const std::vector<int>& ones);

/// All degree-m monomials on the given support, in n variables.
std::vector<Monomial> degree_m_on_support(int n, const std::vector<int>& support, int m);

} // namespace idealpack
