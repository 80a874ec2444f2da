#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "idealpack/errors.hpp"

namespace idealpack {

// Arbitrary-precision integers and rationals. Everything in the library that
// makes a mathematical claim (LP optima, integrality verdicts, polyhedron
// vertices) is computed over these; no floating point appears in any
// decision path.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Largest integer <= r.
inline Int floor_of(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

/// Smallest integer >= r.
inline Int ceil_of(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

/// Canonical "p" or "p/q" form, q > 0 and gcd(p,q) = 1.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q". Rejects q <= 0 and garbage.
inline Rational parse_rational(const std::string& text) {
    auto parse_int = [](const std::string& s) -> Int {
        if (s.empty()) throw UnsupportedInputError("empty integer literal");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw UnsupportedInputError("bad integer literal: " + s);
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw UnsupportedInputError("bad integer literal: " + s);
        return Int(s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw UnsupportedInputError("denominator must be positive in: " + text);
    return Rational(num, den);
}

using RationalVector = std::vector<Rational>;

} // namespace idealpack
