#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "idealpack/packing.hpp"
#include "oracles.hpp"

using namespace idealpack;
using oracles::letters;
using oracles::mono;

TEST_CASE("Konig verdicts on the worked examples") {
    auto q6 = oracles::q6_ideal();
    auto kq = is_konig(q6);
    CHECK_FALSE(kq.konig); // ht = 2 but every generator pair shares a variable
    CHECK_FALSE(kq.witness.has_value());

    auto c4 = oracles::ideal_from_masks(4, oracles::cycle_masks(4));
    auto kc = is_konig(c4);
    CHECK(kc.konig);
    REQUIRE(kc.witness.has_value());
    REQUIRE(kc.witness->size() == 2);
    CHECK(((*kc.witness)[0].support_mask() & (*kc.witness)[1].support_mask()) == 0);

    MonomialIdeal x(letters(1), {mono(1, 1)});
    auto kx = is_konig(x);
    CHECK(kx.konig);
    CHECK(kx.witness->size() == 1);

    // degenerate states are vacuously Konig
    CHECK(is_konig(MonomialIdeal(letters(2), {})).konig);
    CHECK(is_konig(MonomialIdeal(letters(2), {Monomial::one(2)})).konig);
}

TEST_CASE("Konig agrees with tau == pi on random instances") {
    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto masks = oracles::random_edge_masks(rng, n, 6);
        if (masks.empty()) continue;
        auto I = oracles::ideal_from_masks(n, masks);
        auto inv = hypergraph_invariants(hypergraph_of(I));
        CHECK(is_konig(I).konig == (inv.tau == inv.pi));
    }
}

TEST_CASE("the worked example fails packing exactly at the empty substitution") {
    auto verdict = is_packed(oracles::q6_ideal());
    CHECK_FALSE(verdict.packed);
    CHECK_FALSE(verdict.konig);
    REQUIRE(verdict.failing_minor.has_value());
    CHECK(verdict.failing_minor->zeros.empty());
    CHECK(verdict.failing_minor->ones.empty());
    CHECK(verdict.minors_checked == 1);

    // every proper substitution minor is Konig
    auto q6 = oracles::q6_ideal();
    long proper = 0;
    for (int code = 1; code < 729; ++code) { // 3^6 patterns, skip the empty one... code 0
        int c = code;
        std::vector<int> zeros, ones;
        for (int v = 0; v < 6; ++v) {
            const int d = c % 3;
            c /= 3;
            if (d == 1) zeros.push_back(v);
            if (d == 2) ones.push_back(v);
        }
        CHECK(is_konig(substitute(q6, zeros, ones)).konig);
        ++proper;
    }
    CHECK(proper == 728);
}

TEST_CASE("the dual of the worked example is packed") {
    auto dual = alexander_dual(oracles::q6_ideal());
    auto verdict = is_packed(dual);
    CHECK(verdict.konig);
    CHECK(verdict.packed);
    CHECK_FALSE(verdict.failing_minor.has_value());
    CHECK(verdict.minors_checked == 729);
    CHECK(verdict.minors_unique <= verdict.minors_checked);
}

TEST_CASE("bipartite edge ideals are packed") {
    std::mt19937_64 rng(1001);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5); // n <= 7
        auto masks = oracles::random_bipartite_masks(rng, n);
        if (masks.empty()) continue;
        auto I = oracles::ideal_from_masks(n, masks);
        auto verdict = is_packed(I);
        CHECK(verdict.packed);
    }
}

TEST_CASE("failing minors re-analyze as non-Konig") {
    std::mt19937_64 rng(777111);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto masks = oracles::random_edge_masks(rng, n, 6);
        if (masks.empty()) continue;
        auto I = oracles::ideal_from_masks(n, masks);
        auto verdict = is_packed(I);
        CHECK(verdict.packed == !verdict.failing_minor.has_value());
        if (verdict.failing_minor) {
            auto witness = substitute(I, verdict.failing_minor->zeros,
                                      verdict.failing_minor->ones);
            CHECK_FALSE(is_konig(witness).konig);
        }
    }
}

TEST_CASE("is_packed guard") {
    Guards tight;
    tight.packing_vertex_cap = 3;
    CHECK_THROWS_AS(is_packed(oracles::q6_ideal(), tight), GuardExceededError);
}

TEST_CASE("symbolic vs ordinary") {
    auto c4 = oracles::ideal_from_masks(4, oracles::cycle_masks(4));
    auto rep = symbolic_equals_ordinary(c4, 3);
    REQUIRE(rep.equal_by_m.size() == 3);
    for (const auto& [m, eq] : rep.equal_by_m) CHECK(eq);
    CHECK_FALSE(rep.first_unequal_m.has_value());

    auto q6rep = symbolic_equals_ordinary(oracles::q6_ideal(), 3);
    CHECK(q6rep.equal_by_m[0].second);        // m = 1 always
    CHECK_FALSE(q6rep.equal_by_m[1].second);  // fails at m = 2
    REQUIRE(q6rep.first_unequal_m == 2);
    REQUIRE(q6rep.witness.has_value());
    CHECK(q6rep.witness->support_mask() == 0b111111); // abcdef
    CHECK(contains(symbolic_power(oracles::q6_ideal(), 2), *q6rep.witness));
    CHECK_FALSE(contains(power(oracles::q6_ideal(), 2), *q6rep.witness));
}

TEST_CASE("exact covers") {
    auto edge = oracles::hypergraph_from_masks(2, {0b11});
    CHECK(exact_cover(edge) == std::vector<int>{0});

    auto c4 = oracles::hypergraph_from_masks(4, oracles::cycle_masks(4));
    auto cover = exact_cover(c4);
    REQUIRE(cover.has_value());
    // a side of the bipartition: meets each of the four edges once
    for (const auto& e : c4.edges) {
        int hits = 0;
        for (int v : e) hits += std::count(cover->begin(), cover->end(), v);
        CHECK(hits == 1);
    }

    // triangle has no exact cover
    auto tri = oracles::hypergraph_from_masks(3, {0b011, 0b110, 0b101});
    CHECK_FALSE(exact_cover(tri).has_value());
}

TEST_CASE("rainbow colorings") {
    auto c4 = oracles::hypergraph_from_masks(4, oracles::cycle_masks(4));
    auto trivial = rainbow_coloring(c4, 1, 1);
    REQUIRE(trivial.has_value());
    for (const auto& colors : trivial->assignment) CHECK(colors == std::vector<int>{0});

    auto two = rainbow_coloring(c4, 2, 1);
    REQUIRE(two.has_value());
    // a proper 2-coloring of the 4-cycle alternates
    CHECK(two->assignment[0] != two->assignment[1]);
    CHECK(two->assignment[0] == two->assignment[2]);

    // C5: no (5:2)-coloring exists (alpha-hat = 5/3 < 5/2 forbids it)
    auto c5 = oracles::hypergraph_from_masks(5, oracles::cycle_masks(5));
    CHECK_FALSE(rainbow_coloring(c5, 5, 2).has_value());

    CHECK_THROWS_AS(rainbow_coloring(c4, 1, 2), UnsupportedInputError);
    Guards tight;
    tight.search_node_cap = 1;
    CHECK_THROWS_AS(rainbow_coloring(c4, 2, 1, tight), GuardExceededError);
}

TEST_CASE("partite lower bound") {
    MonomialIdeal x(letters(1), {mono(1, 1)});
    RainbowColoring one{1, 1, {{0}}};
    CHECK(partite_lower_bound_check(x, one)); // alpha-hat = 1 >= 1

    auto c4 = oracles::ideal_from_masks(4, oracles::cycle_masks(4));
    auto coloring = rainbow_coloring(hypergraph_of(c4), 2, 1);
    REQUIRE(coloring.has_value());
    CHECK(partite_lower_bound_check(c4, *coloring)); // alpha-hat(C4) = 2 >= 2

    RainbowColoring bogus{2, 1, {{0}, {0}, {0}, {0}}}; // color 1 never appears
    CHECK_THROWS_AS(partite_lower_bound_check(c4, bogus), UnsupportedInputError);
}

TEST_CASE("every discovered coloring certifies its lower bound (random)") {
    std::mt19937_64 rng(909090);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        auto masks = oracles::random_edge_masks(rng, n, 5);
        if (masks.empty()) continue;
        auto I = oracles::ideal_from_masks(n, masks);
        const int a = 1 + static_cast<int>(rng() % 3);
        const int b = 1 + static_cast<int>(rng() % a);
        auto coloring = rainbow_coloring(hypergraph_of(I), a, b);
        if (!coloring) continue;
        ++found;
        CHECK(partite_lower_bound_check(I, *coloring));
    }
    CHECK(found > 10); // the property test must actually exercise colorings
}

TEST_CASE("uniform packed hypergraphs: all three conclusions") {
    // smallest case: a single edge {x, y}
    auto edge = oracles::hypergraph_from_masks(2, {0b11});
    auto rep = uniform_packing_theorem_check(edge);
    REQUIRE(rep.applicable);
    CHECK(rep.exact_cover_found);
    CHECK(rep.cover == std::vector<int>{0});
    CHECK(rep.partite_ok);
    CHECK(rep.dual_packed);
    CHECK(rep.ok());

    // bipartite C4
    auto c4 = oracles::hypergraph_from_masks(4, oracles::cycle_masks(4));
    auto rep4 = uniform_packing_theorem_check(c4);
    REQUIRE(rep4.applicable);
    CHECK(rep4.ok());

    // the dual of the worked example is packed but not uniform: skip
    auto dual = hypergraph_of(alexander_dual(oracles::q6_ideal()));
    auto repd = uniform_packing_theorem_check(dual);
    CHECK_FALSE(repd.applicable);
    CHECK(repd.skip_reason == "hypergraph is not uniform");

    // the worked example itself is uniform but not packed: skip
    auto q6h = oracles::hypergraph_from_masks(6, {0b000111, 0b110001, 0b011100, 0b101010});
    auto repq = uniform_packing_theorem_check(q6h);
    CHECK_FALSE(repq.applicable);
    CHECK(repq.skip_reason == "ideal does not satisfy the packing property");
}

TEST_CASE("equidimensional duality agreement") {
    // (x, y) and its dual (xy) are both equidimensional and both packed
    MonomialIdeal I(letters(2), {mono(2, 0b01), mono(2, 0b10)});
    auto rep = equidim_duality_check(I);
    REQUIRE(rep.applicable);
    CHECK(rep.packed);
    CHECK(rep.dual_packed);
    CHECK(rep.agree);

    // the worked example is skipped: not equidimensional
    auto repq = equidim_duality_check(oracles::q6_ideal());
    CHECK_FALSE(repq.applicable);
    CHECK(repq.skip_reason == "ideal is not equidimensional");
}

TEST_CASE("doubly equidimensional instances always agree (exhaustive small scan)") {
    long applicable = 0;
    for_each_canonical_hypergraph(5, 5, [&](const Hypergraph& H) {
        auto I = edge_ideal(H);
        auto rep = equidim_duality_check(I);
        if (!rep.applicable) return;
        ++applicable;
        CHECK(rep.agree);
    });
    CHECK(applicable > 5);
}

TEST_CASE("canonical enumeration counts") {
    // frozen from an exhaustive run; the n <= 3 values are hand-checkable
    const std::vector<long> expected{1, 2, 5, 20, 151};
    for (int n = 1; n <= 5; ++n) {
        long count = 0;
        for_each_canonical_hypergraph(n, 6, [&](const Hypergraph& H) {
            if (H.ctx.size() == n) ++count;
        });
        CHECK(count == expected[n - 1]);
    }
    // every visited instance is a genuine antichain without isolated vertices
    for_each_canonical_hypergraph(4, 4, [&](const Hypergraph& H) {
        std::uint64_t covered = 0;
        for (const auto& e : H.edges)
            for (int v : e) covered |= std::uint64_t(1) << v;
        CHECK(covered + 1 == (std::uint64_t(1) << H.ctx.size()));
    });
}

TEST_CASE("conjecture probes come back clean on small families") {
    // outcomes frozen from exhaustive runs; a finding here would be a bug
    // (or a publication)
    auto q58 = conjecture_probe(ProbeKind::Q58, FamilySpec{4, 6, 3});
    CHECK(q58.instances_enumerated == 28);
    CHECK(q58.instances_tested == 13);
    CHECK_FALSE(q58.counterexample_found());

    auto c57 = conjecture_probe(ProbeKind::C57, FamilySpec{4, 6, 3});
    CHECK(c57.instances_tested == 18);
    CHECK_FALSE(c57.counterexample_found());

    Guards tight;
    tight.family_vertex_cap = 3;
    CHECK_THROWS_AS(conjecture_probe(ProbeKind::Q58, FamilySpec{4, 6, 3}, tight),
                    GuardExceededError);
}
