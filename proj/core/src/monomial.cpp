#include "idealpack/monomial.hpp"

#include <algorithm>
#include <set>

namespace idealpack {

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw UnsupportedInputError("a variable context needs at least one variable");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw UnsupportedInputError("empty variable name");
        if (!seen.insert(n).second)
            throw UnsupportedInputError("duplicate variable name: " + n);
    }
}

int VariableContext::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    throw UnsupportedInputError("undeclared variable: " + name);
}

Monomial::Monomial(std::vector<Int> exponents) : exponents_(std::move(exponents)) {
    for (const Int& e : exponents_)
        if (e < 0) throw UnsupportedInputError("negative exponent in monomial");
}

Monomial Monomial::from_support(int n, const std::vector<int>& vars) {
    std::vector<Int> exps(n, Int(0));
    for (int v : vars) {
        if (v < 0 || v >= n) throw UnsupportedInputError("variable index out of range");
        exps[v] = 1;
    }
    return Monomial(std::move(exps));
}

Int Monomial::total_degree() const {
    Int d = 0;
    for (const Int& e : exponents_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](const Int& e) { return e == 0; });
}

bool Monomial::is_square_free() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](const Int& e) { return e == 0 || e == 1; });
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (int i = 0; i < num_vars(); ++i)
        if (exponents_[i] > 0) s.push_back(i);
    return s;
}

std::uint64_t Monomial::support_mask() const {
    if (num_vars() > 64)
        throw GuardExceededError("support masks require at most 64 variables");
    std::uint64_t m = 0;
    for (int i = 0; i < num_vars(); ++i)
        if (exponents_[i] > 0) m |= std::uint64_t(1) << i;
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    require_same_context(*this, other);
    for (int i = 0; i < num_vars(); ++i)
        if (exponents_[i] > other.exponents_[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    require_same_context(*this, other);
    std::vector<Int> e(exponents_);
    for (int i = 0; i < num_vars(); ++i) e[i] += other.exponents_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm_with(const Monomial& other) const {
    require_same_context(*this, other);
    std::vector<Int> e(exponents_);
    for (int i = 0; i < num_vars(); ++i)
        if (other.exponents_[i] > e[i]) e[i] = other.exponents_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::pow(const Int& m) const {
    if (m < 0) throw UnsupportedInputError("negative monomial power");
    std::vector<Int> e(exponents_);
    for (auto& x : e) x *= m;
    return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    const int n = std::min(num_vars(), other.num_vars());
    for (int i = 0; i < n; ++i) {
        if (exponents_[i] < other.exponents_[i]) return std::strong_ordering::less;
        if (exponents_[i] > other.exponents_[i]) return std::strong_ordering::greater;
    }
    return num_vars() <=> other.num_vars();
}

std::string Monomial::str(const VariableContext& ctx) const {
    if (is_one()) return "1";
    std::string out;
    for (int i = 0; i < num_vars(); ++i) {
        if (exponents_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx.name(i);
        if (exponents_[i] != 1) out += "^" + exponents_[i].str();
    }
    return out;
}

void require_same_context(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars())
        throw ContextMismatchError("monomials live in different variable contexts");
}

} // namespace idealpack
