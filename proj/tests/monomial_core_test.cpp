#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "idealpack/ideal.hpp"
#include "oracles.hpp"

using namespace idealpack;
using oracles::letters;
using oracles::mono;

namespace {

Monomial from_exps(std::vector<long> e) {
    std::vector<Int> exps(e.begin(), e.end());
    return Monomial(std::move(exps));
}

MonomialIdeal random_square_free_ideal(std::mt19937_64& rng, int n, int max_edges) {
    auto masks = oracles::random_edge_masks(rng, n, max_edges);
    return oracles::ideal_from_masks(n, masks);
}

} // namespace

TEST_CASE("variable context invariants") {
    CHECK_THROWS_AS(VariableContext(std::vector<std::string>{}), UnsupportedInputError);
    CHECK_THROWS_AS(VariableContext({"x", "x"}), UnsupportedInputError);
    CHECK_THROWS_AS(VariableContext({"x", ""}), UnsupportedInputError);
    VariableContext ctx({"x", "y"});
    CHECK(ctx.size() == 2);
    CHECK(ctx.index_of("y") == 1);
    CHECK_THROWS_AS(ctx.index_of("z"), UnsupportedInputError);
}

TEST_CASE("monomial basics") {
    Monomial m = from_exps({1, 2, 0});
    CHECK(m.total_degree() == 3);
    CHECK_FALSE(m.is_square_free());
    CHECK(m.support() == std::vector<int>{0, 1});
    CHECK(m.support_mask() == 0b011);
    CHECK(from_exps({1, 1, 0}).is_square_free());
    CHECK(from_exps({1, 0, 0}).divides(from_exps({1, 2, 0})));
    CHECK_FALSE(from_exps({2, 0, 0}).divides(from_exps({1, 2, 0})));
    CHECK(from_exps({1, 2, 0}).lcm_with(from_exps({0, 1, 3})) == from_exps({1, 2, 3}));
    CHECK(from_exps({1, 2, 0}).times(from_exps({0, 1, 3})) == from_exps({1, 3, 3}));
    CHECK_THROWS_AS(from_exps({1}).divides(from_exps({1, 1})), ContextMismatchError);
    CHECK(from_exps({1, 0}).str(letters(2)) == "a");
    CHECK(from_exps({1, 2}).str(letters(2)) == "a*b^2");
    CHECK(Monomial::one(2).str(letters(2)) == "1");
}

TEST_CASE("minimize: divisibility-minimal antichain") {
    auto ctx2 = letters(2);
    // {x, xy} -> {x}
    MonomialIdeal a(ctx2, {from_exps({1, 0}), from_exps({1, 1})});
    CHECK(a.generators() == std::vector<Monomial>{from_exps({1, 0})});
    // {x^2, xy, y^2, x} -> {x, y^2}
    MonomialIdeal b(ctx2, {from_exps({2, 0}), from_exps({1, 1}), from_exps({0, 2}),
                           from_exps({1, 0})});
    CHECK(b.num_generators() == 2);
    CHECK(contains(b, from_exps({1, 0})));
    CHECK(contains(b, from_exps({0, 2})));
    CHECK_FALSE(contains(b, from_exps({0, 1})));
    // the worked example's generators are already incomparable
    auto q6 = oracles::q6_ideal();
    CHECK(q6.num_generators() == 4);

    // mixed contexts rejected
    CHECK_THROWS_AS(minimize({from_exps({1}), from_exps({1, 0})}), ContextMismatchError);
}

TEST_CASE("antichain invariant after every construction (random)") {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<Monomial> gens;
        const int count = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < count; ++i) {
            std::vector<Int> exps(n);
            for (int j = 0; j < n; ++j) exps[j] = static_cast<int>(rng() % 4);
            gens.emplace_back(std::move(exps));
        }
        // drop accidental constants (unit ideal is fine but trivializes the check)
        MonomialIdeal I(letters(n), gens);
        const auto& mins = I.generators();
        for (std::size_t i = 0; i < mins.size(); ++i)
            for (std::size_t j = 0; j < mins.size(); ++j)
                if (i != j) CHECK_FALSE(mins[i].divides(mins[j]));
    }
}

TEST_CASE("contains") {
    auto q6 = oracles::q6_ideal();
    CHECK(contains(q6, mono(6, 0b000111)));          // abc itself
    CHECK(contains(q6, mono(6, 0b111111)));          // abc | abcdef
    CHECK_FALSE(contains(q6, Monomial::one(6)));     // 1 is outside proper ideals
    MonomialIdeal x(letters(1), {from_exps({1})});
    CHECK_FALSE(contains(x, Monomial::one(1)));
}

TEST_CASE("intersect: coprime principal ideals and idempotence") {
    auto ctx = letters(2);
    MonomialIdeal X(ctx, {from_exps({1, 0})});
    MonomialIdeal Y(ctx, {from_exps({0, 1})});
    MonomialIdeal XY = intersect(X, Y);
    CHECK(XY.generators() == std::vector<Monomial>{from_exps({1, 1})});
    auto q6 = oracles::q6_ideal();
    CHECK(equals(intersect(q6, q6), q6));
    CHECK_THROWS_AS(intersect(X, oracles::q6_ideal()), ContextMismatchError);
}

TEST_CASE("the worked example's prime intersection reproduces the ideal") {
    // (a,d) cap (b,e) cap (c,f) cap (a,b,c) cap (a,e,f) cap (b,d,f) cap (c,d,e)
    const std::vector<std::uint64_t> primes{0b001001, 0b010010, 0b100100,
                                            0b000111, 0b110001, 0b101010, 0b011100};
    MonomialIdeal acc(letters(6), {Monomial::one(6)}); // unit: neutral for intersection
    for (auto p : primes) {
        std::vector<Monomial> gens;
        for (int v = 0; v < 6; ++v)
            if (p & (std::uint64_t(1) << v)) gens.push_back(mono(6, std::uint64_t(1) << v));
        acc = intersect(acc, MonomialIdeal(letters(6), gens));
    }
    CHECK(equals(acc, oracles::q6_ideal()));
}

TEST_CASE("multiply and power") {
    auto ctx = letters(2);
    MonomialIdeal XY(ctx, {from_exps({1, 0}), from_exps({0, 1})}); // (x, y)
    MonomialIdeal sq = power(XY, 2);
    CHECK(sq.num_generators() == 3); // x^2, xy, y^2
    CHECK(contains(sq, from_exps({1, 1})));
    CHECK(equals(power(XY, 1), XY));
    CHECK_THROWS_AS(power(XY, 0), UnsupportedInputError);

    MonomialIdeal xy(ctx, {from_exps({1, 1})});
    MonomialIdeal z(letters(3), {from_exps({0, 0, 1})});
    CHECK_THROWS_AS(multiply(xy, z), ContextMismatchError);

    // the worked example squared: all ten degree-6 products are incomparable
    auto q6 = oracles::q6_ideal();
    CHECK(power(q6, 2).num_generators() == 10);
}

TEST_CASE("prime_decompose matches the worked example") {
    auto dec = prime_decompose(oracles::q6_ideal());
    CHECK(dec.height == 2);
    CHECK(dec.primes.size() == 7);
    std::set<std::uint64_t> got;
    for (const auto& p : dec.primes) got.insert(p.support_mask());
    const std::set<std::uint64_t> expected{0b001001, 0b010010, 0b100100,
                                           0b000111, 0b110001, 0b101010, 0b011100};
    CHECK(got == expected);
    // heights sorted along with primes: two-element covers have height 2
    CHECK(*std::min_element(dec.heights.begin(), dec.heights.end()) == 2);
    CHECK(*std::max_element(dec.heights.begin(), dec.heights.end()) == 3);
}

TEST_CASE("prime_decompose simple cases and errors") {
    MonomialIdeal x(letters(1), {from_exps({1})});
    auto dec = prime_decompose(x);
    CHECK(dec.height == 1);
    CHECK(dec.primes.size() == 1);

    // triangle: minimal covers of the 3-cycle
    auto tri = oracles::ideal_from_masks(3, {0b011, 0b110, 0b101});
    auto tdec = prime_decompose(tri);
    CHECK(tdec.height == 2);
    CHECK(tdec.primes.size() == 3);

    CHECK_THROWS_AS(prime_decompose(MonomialIdeal(letters(2), {})), UnsupportedInputError);
    CHECK_THROWS_AS(prime_decompose(MonomialIdeal(letters(2), {from_exps({2, 0})})),
                    UnsupportedInputError);
}

TEST_CASE("prime_decompose equals brute-force transversal enumeration") {
    std::mt19937_64 rng(911);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4); // n <= 5
        auto masks = oracles::random_edge_masks(rng, n, 5);
        if (masks.empty()) continue;
        auto I = oracles::ideal_from_masks(n, masks);
        auto dec = prime_decompose(I);
        std::vector<std::uint64_t> got;
        for (const auto& p : dec.primes) got.push_back(p.support_mask());
        std::sort(got.begin(), got.end());
        CHECK(got == oracles::brute_minimal_transversals(n, masks));
    }
}

TEST_CASE("prime decomposition round-trip: intersection of primes is the ideal") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto masks = oracles::random_edge_masks(rng, n, 6);
        if (masks.empty()) continue;
        auto I = oracles::ideal_from_masks(n, masks);
        auto dec = prime_decompose(I);
        MonomialIdeal acc(letters(n), {Monomial::one(n)});
        for (const auto& p : dec.primes) {
            std::vector<Monomial> gens;
            for (int v : p.support()) gens.push_back(mono(n, std::uint64_t(1) << v));
            acc = intersect(acc, MonomialIdeal(letters(n), gens));
        }
        CHECK(equals(acc, I));
    }
}

TEST_CASE("symbolic_power: m = 1 and the two-prime example") {
    auto tri = oracles::ideal_from_masks(3, {0b011, 0b110, 0b101});
    CHECK(equals(symbolic_power(tri, 1), tri));

    // I = (y, xz) = (x,y) cap (y,z); I^(2) must equal (x,y)^2 cap (y,z)^2
    auto ctx = letters(3);
    MonomialIdeal I(ctx, {from_exps({0, 1, 0}), from_exps({1, 0, 1})});
    MonomialIdeal xy(ctx, {from_exps({1, 0, 0}), from_exps({0, 1, 0})});
    MonomialIdeal yz(ctx, {from_exps({0, 1, 0}), from_exps({0, 0, 1})});
    CHECK(equals(symbolic_power(I, 2), intersect(power(xy, 2), power(yz, 2))));
}

TEST_CASE("symbolic_power matches the lattice-point oracle") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        auto masks = oracles::random_edge_masks(rng, n, 4);
        if (masks.empty()) continue;
        auto I = oracles::ideal_from_masks(n, masks);
        for (int m = 1; m <= 3; ++m)
            CHECK(equals(symbolic_power(I, m), oracles::lattice_symbolic_power(I, m)));
    }
}

TEST_CASE("ordinary sits inside symbolic; products stack (random)") {
    std::mt19937_64 rng(2023);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        auto masks = oracles::random_edge_masks(rng, n, 4);
        if (masks.empty()) continue;
        auto I = oracles::ideal_from_masks(n, masks);
        std::vector<MonomialIdeal> sym{I};
        for (int m = 2; m <= 3; ++m) sym.push_back(symbolic_power(I, m));
        std::vector<MonomialIdeal> ord{I};
        for (int m = 2; m <= 3; ++m) ord.push_back(power(I, m));
        // I^m inside I^(m)
        for (int m = 1; m <= 3; ++m)
            for (const auto& g : ord[m - 1].generators()) CHECK(contains(sym[m - 1], g));
        // I^(m) I^(m') inside I^(m + m') for m + m' <= 3
        for (int m = 1; m <= 2; ++m)
            for (int mp = 1; m + mp <= 3; ++mp) {
                auto prod = multiply(sym[m - 1], sym[mp - 1]);
                for (const auto& g : prod.generators()) CHECK(contains(sym[m + mp - 1], g));
            }
    }
}

TEST_CASE("the worked example: symbolic equals ordinary fails at m = 2") {
    auto q6 = oracles::q6_ideal();
    CHECK(equals(symbolic_power(q6, 1), q6));
    auto sym2 = symbolic_power(q6, 2);
    auto ord2 = power(q6, 2);
    CHECK_FALSE(equals(sym2, ord2));
    // witness: the all-ones monomial lies in I^(2) but not in I^2
    CHECK(contains(sym2, mono(6, 0b111111)));
    CHECK_FALSE(contains(ord2, mono(6, 0b111111)));
}

TEST_CASE("equals") {
    auto ctx = letters(2);
    MonomialIdeal a(ctx, {from_exps({1, 0}), from_exps({1, 1})});
    MonomialIdeal b(ctx, {from_exps({1, 0})});
    CHECK(equals(a, b));
    CHECK_FALSE(equals(b, MonomialIdeal(ctx, {from_exps({0, 1})})));
}

TEST_CASE("substitute implements the 0/1 specialization") {
    auto q6 = oracles::q6_ideal();
    // a -> 0 kills abc and aef
    auto del_a = substitute(q6, {0}, {});
    CHECK(del_a.num_generators() == 2);
    CHECK(contains(del_a, mono(6, 0b011100)));
    CHECK(contains(del_a, mono(6, 0b101010)));
    // a -> 1 shrinks abc, aef; result stays a four-generator antichain
    auto con_a = substitute(q6, {}, {0});
    CHECK(con_a.num_generators() == 4);
    CHECK(contains(con_a, mono(6, 0b000110)));  // bc
    CHECK(contains(con_a, mono(6, 0b110000)));  // ef
    CHECK(contains(con_a, mono(6, 0b011100)));  // cde survives
    CHECK(contains(con_a, mono(6, 0b101010)));  // bdf survives
    // full contraction of an edge gives the unit ideal
    auto unit = substitute(q6, {}, {0, 1, 2});
    CHECK(unit.is_unit());
    CHECK_THROWS_AS(substitute(q6, {0}, {0}), UnsupportedInputError);
}

TEST_CASE("degree_m_on_support generates prime powers in closed form") {
    // (a, b)^3 via compositions: 4 monomials of degree 3
    auto gens = degree_m_on_support(3, {0, 1}, 3);
    CHECK(gens.size() == 4);
    MonomialIdeal closed(letters(3), gens);
    MonomialIdeal ab(letters(3), {from_exps({1, 0, 0}), from_exps({0, 1, 0})});
    CHECK(equals(closed, power(ab, 3)));
}
