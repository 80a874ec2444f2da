#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "idealpack/errors.hpp"
#include "idealpack/numbers.hpp"

namespace idealpack {

/// The ordered variable set of a polynomial ring. Only the monomial
/// structure matters here, so no coefficient field is modeled.
class VariableContext {
public:
    VariableContext() = default;
    explicit VariableContext(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(i); }

    /// Index of a declared variable; throws UnsupportedInputError otherwise.
    int index_of(const std::string& name) const;

    bool operator==(const VariableContext& other) const { return names_ == other.names_; }
    bool operator!=(const VariableContext& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
};

/// An exponent vector over a fixed number of variables. Monomials do not
/// carry their context; lengths are checked wherever two of them meet.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Int> exponents);

    /// x^0 = 1 in n variables.
    static Monomial one(int n) { return Monomial(std::vector<Int>(n, Int(0))); }

    /// Square-free monomial from a sorted-or-not list of variable indices.
    static Monomial from_support(int n, const std::vector<int>& vars);

    int num_vars() const { return static_cast<int>(exponents_.size()); }
    const std::vector<Int>& exponents() const { return exponents_; }
    const Int& exponent(int i) const { return exponents_.at(i); }

    Int total_degree() const;
    bool is_one() const;
    bool is_square_free() const;

    /// Indices with positive exponent, ascending.
    std::vector<int> support() const;
    /// Support as a bitmask; requires num_vars() <= 64.
    std::uint64_t support_mask() const;

    bool divides(const Monomial& other) const;
    Monomial times(const Monomial& other) const;
    Monomial lcm_with(const Monomial& other) const;
    Monomial pow(const Int& m) const;

    bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }
    /// Lexicographic order on exponent vectors; the canonical generator
    /// order sorts descending under this.
    std::strong_ordering operator<=>(const Monomial& other) const;

    /// Human form, e.g. "a*b^2" or "1"; names taken from ctx.
    std::string str(const VariableContext& ctx) const;

private:
    std::vector<Int> exponents_;
};

/// Throws ContextMismatchError unless both monomials live in n variables.
void require_same_context(const Monomial& a, const Monomial& b);

} // namespace idealpack
