#include <primedist/constructors.hpp>
#include <primedist/errors.hpp>

#include <doctest.h>

#include "oracles.hpp"
#include "outerplanar_gen.hpp"

#include <algorithm>
#include <set>

using namespace primedist;

namespace {

const Labeling c7_squares{0, 4, 3485, 3124, 2283, 74, 25};

/// Two C_9's sharing vertex 0.
Graph two_c9()
{
    Graph g(17);
    for (int v = 1; v < 8; ++v)
        g.add_edge(v, v + 1);
    for (int v = 9; v < 16; ++v)
        g.add_edge(v, v + 1);
    for (int v : {1, 8, 9, 16})
        g.add_edge(0, v);
    return g;
}

int count_gap(const Labeling &l, Int gap)
{
    int c = 0;
    for (int i = 0; i < l.size(); ++i)
        c += std::llabs(l[i] - l[(i + 1) % l.size()]) == gap;
    return c;
}

}  // namespace

TEST_CASE("label_complete examples")
{
    CHECK(label_complete(5) == Labeling{2, 4, 7, 9, 11});
    CHECK(label_complete(4) == Labeling{2, 4, 7, 9});
    CHECK(label_complete(3) == Labeling{2, 5, 7});
    CHECK_THROWS_AS(label_complete(2), std::invalid_argument);
}

TEST_CASE("label_complete gap bound up to 2^16")
{
    // Labels 2i (i <= h = n/2) and 2i+1 (h < i <= n). Same-side gaps are 2d
    // with d < ceil(n/2); cross gaps are every odd value in [3, 2n-1]. Track
    // the largest Omega over that gap set as n grows.
    const int top = 1 << 16;
    std::vector<int> om(static_cast<std::size_t>(2 * top + 2), 0);
    for (int x = 2; x < static_cast<int>(om.size()); ++x)
        om[x] = oracle::omega(x);
    int max_odd = 0, max_even = 0;
    for (int n = 3; n <= top; ++n) {
        max_odd = std::max({max_odd, om[2 * n - 1], om[2 * n - 3]});
        const int d = (n + 1) / 2 - 1;
        if (d >= 1)
            max_even = std::max(max_even, om[2 * d]);
        REQUIRE(std::max(max_odd, max_even) <= ceil_log2(n) - 1);
    }
    // The gap set above is exactly what label_complete produces.
    for (int n : {3, 4, 5, 6, 7, 8, 9, 16, 17, 31, 32, 33, 64, 100, 255, 256, 257, 1000}) {
        auto l = label_complete(n);
        const int bound = ceil_log2(n) - 1;
        std::set<Int> gaps;
        for (int i = 0; i < n; ++i) {
            REQUIRE(l[i] == 2 * (i + 1) + (2 * (i + 1) > n ? 1 : 0));
            for (int j = i + 1; j < n; ++j) {
                Int gap = std::llabs(l[i] - l[j]);
                REQUIRE(gap > 1);
                REQUIRE(oracle::omega(gap) <= bound);
                gaps.insert(gap);
            }
        }
        std::set<Int> predicted;
        for (Int g = 3; g <= 2 * n - 1; g += 2)
            predicted.insert(g);
        for (Int d = 1; d <= std::max(n / 2 - 1, (n + 1) / 2 - 1); ++d)
            predicted.insert(2 * d);
        CHECK(gaps == predicted);
    }
}

TEST_CASE("label_complete_power fixtures")
{
    CHECK(label_complete_power(6).labeling == Labeling{0, 2, 4, 7, 9, 11});
    CHECK(label_complete_power(6).k == 2);
    CHECK(label_complete_power(4).labeling == Labeling{0, 2, 5, 7});
    CHECK(label_complete_power(4).k == 1);
    CHECK_THROWS_AS(label_complete_power(7), std::invalid_argument);
}

TEST_CASE("label_multipartite_via_ap")
{
    const PrimeAP ap13{4943, 60060, 13};
    REQUIRE(oracle::is_prime(ap13.first));
    for (int i = 0; i < 13; ++i)
        REQUIRE(oracle::is_prime(ap13.term(i)));

    // C_5 coloured (2, 2, 1).
    auto c5 = cycle_graph(5);
    Partition parts{{{0, 2}, {1, 3}, {4}}};
    CHECK(required_ap_length(3, 2) == 13);
    auto l = label_multipartite_via_ap(c5, parts, ap13);
    CHECK(verify_product(c5, l, 2).ok);
    for (auto [u, v] : c5.edges())
        CHECK(oracle::omega(std::llabs(l[u] - l[v])) <= 2);

    auto k2 = complete_graph(2);
    Partition singles{{{0}, {1}}};
    CHECK(required_ap_length(2, 1) == 3);
    auto l2 = label_multipartite_via_ap(k2, singles, PrimeAP{3, 2, 3});
    CHECK(oracle::is_prime(std::llabs(l2[0] - l2[1])));

    Partition improper{{{0, 1}, {2, 3}, {4}}};
    CHECK_THROWS_AS(label_multipartite_via_ap(c5, improper, ap13), std::invalid_argument);
    CHECK_THROWS_AS(label_multipartite_via_ap(c5, parts, PrimeAP{3, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(label_multipartite_via_ap(c5, parts, Int{1000}), BudgetExhausted);
}

TEST_CASE("label_multipartite_via_ap on complete multipartite graphs")
{
    const int sizes[] = {2, 1, 2};
    auto mp = complete_multipartite(sizes);
    auto l = label_multipartite_via_ap(mp.graph, mp.partition, PrimeAP{4943, 60060, 13});
    CHECK(verify_product(mp.graph, l, 2, GapRule::all_pairs).ok);
}

TEST_CASE("label_K11c")
{
    CHECK(label_K11c(1, 100) == Labeling{0, 2, 5});
    CHECK(label_K11c(2, 100) == Labeling{0, 2, 5, 7});
    CHECK(label_K11c(5, 100) == Labeling{0, 2, 5, 7, 13, 19, 31});
    for (int c = 1; c <= 10; ++c) {
        const int sizes[] = {1, 1, c};
        auto g = complete_multipartite(sizes).graph;
        auto l = label_K11c(c, 1000);
        CHECK(oracle::labeling_ok(g, l.values(), oracle::Kind::strict, 1));
    }
    CHECK_THROWS_AS(label_K11c(10, 108), BudgetExhausted);
}

TEST_CASE("label_K122")
{
    auto l = label_K122();
    CHECK(l == Labeling{0, 2, -2, 5, -5});
    const int sizes[] = {1, 2, 2};
    CHECK(verify_power(complete_multipartite(sizes).graph, l, 1).ok);
    CHECK(edge_gap(l, 1, 4) == 7);
    CHECK(edge_gap(l, 1, 2) == 4);
}

TEST_CASE("even cycles")
{
    const Int p237[] = {2, 3, 7};
    CHECK(label_even_cycle_with_primes(p237, 2) == Labeling{0, 4, 13, 62, 58, 49});
    const Int p25[] = {2, 5};
    CHECK(label_even_cycle_with_primes(p25, 1) == Labeling{0, 2, 7, 5});
    const Int bad[] = {2, 3, 3};
    CHECK_THROWS_AS(label_even_cycle_with_primes(bad, 1), std::invalid_argument);

    auto big = label_even_cycle(2, 1, 100);
    for (Int x : big.values())
        CHECK(x >= 0);
    for (int i = 0; i < 4; ++i) {
        Int gap = std::llabs(big[i] - big[(i + 1) % 4]);
        CHECK(gap > 100);
        CHECK(oracle::is_prime(gap));
    }
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto l = label_even_cycle(n, k);
            REQUIRE(oracle::labeling_ok(cycle_graph(2 * n), l.values(), oracle::Kind::strict, k));
        }
}

TEST_CASE("extend_odd_cycle lattice")
{
    const Labeling c3{0, 2, 5};
    for (int j = 1; j <= 5; ++j) {
        auto l1 = extend_odd_cycle(c3, j, 1);
        CHECK(l1.size() == 3 + 2 * j);
        CHECK(oracle::labeling_ok(cycle_graph(3 + 2 * j), l1.values(), oracle::Kind::strict, 1));
        auto l2 = extend_odd_cycle(c7_squares, j, 2);
        CHECK(l2.size() == 7 + 2 * j);
        CHECK(oracle::labeling_ok(cycle_graph(7 + 2 * j), l2.values(), oracle::Kind::strict, 2));
    }
    CHECK_THROWS_AS(extend_odd_cycle(Labeling{0, 2, 6}, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(extend_odd_cycle(c3, 0, 1), std::invalid_argument);
    auto far = extend_odd_cycle(c3, 2, 1, 1000);
    CHECK(oracle::labeling_ok(cycle_graph(7), far.values(), oracle::Kind::strict, 1));
}

TEST_CASE("existence_cycle")
{
    for (int k = 1; k <= 3; ++k) {
        auto e = existence_cycle(k);
        CHECK(e.length % 2 == 1);
        CHECK(e.labeling.size() == e.length);
        CHECK(oracle::labeling_ok(cycle_graph(e.length), e.labeling.values(), oracle::Kind::strict, k));
        CHECK(count_gap(e.labeling, Int{1} << k) == 1);
    }
    CHECK(existence_cycle(1).length == 3);
    CHECK(existence_cycle(2).length == 9);
}

TEST_CASE("Bezout cycles with swapped roles")
{
    auto k1 = bezout_cycle_labels(1, BezoutRole::three_ascends, -2, 4);
    CHECK(k1 == Labeling{0, 3, 6, 9, 12, 10, 5});
    CHECK(verify_strict(cycle_graph(7), k1, 1).ok);
    CHECK_FALSE(find_label_collision(k1));

    auto k2 = bezout_cycle_labels(2, BezoutRole::three_ascends, -2, 6);
    CHECK(k2 == Labeling{0, 9, 18, 27, 36, 45, 54, 50, 25});
    CHECK(verify_strict(cycle_graph(9), k2, 2).ok);
    CHECK_THROWS_AS(bezout_cycle_labels(2, BezoutRole::three_ascends, -2, 5), std::invalid_argument);
}

TEST_CASE("literal coefficients collide for k = 2")
{
    auto [r, s] = literal_bezout_coefficients(2);
    CHECK(r == -11);
    CHECK(s == 4);
    CHECK(9 * r + 25 * s == 1);
    auto l = bezout_cycle_labels(2, BezoutRole::five_ascends, 4 * r, 4 * s);
    CHECK(l.size() == 61);
    auto hit = find_label_collision(l);
    REQUIRE(hit);
    CHECK(*hit == 225);
    CHECK_FALSE(verify_strict(cycle_graph(61), l, 2).ok);
}

TEST_CASE("label_cycle_strict")
{
    auto table = CycleLabelerTable::standard(3);
    CHECK(table.ppc_upper_bound(1) == 3);
    CHECK(table.ppc_upper_bound(2) == 7);

    auto c7 = label_cycle_strict(7, 2, table);
    REQUIRE(c7);
    CHECK(c7->method == CycleMethod::odd_base);
    CHECK(c7->labeling == c7_squares);

    SearchConfig quick;
    quick.label_bound = 200;
    CHECK_FALSE(label_cycle_strict(3, 2, table, quick));

    auto c10 = label_cycle_strict(10, 3, table);
    REQUIRE(c10);
    CHECK(c10->method == CycleMethod::even_formula);
    CHECK(verify_strict(cycle_graph(10), c10->labeling, 3).ok);

    auto c11 = label_cycle_strict(11, 2, table);
    REQUIRE(c11);
    CHECK(c11->method == CycleMethod::odd_extension);
    CHECK(verify_strict(cycle_graph(11), c11->labeling, 2).ok);

    // Below the tabulated base, the bounded search finds C_5 for k = 1.
    auto c5 = label_cycle_strict(5, 1, table);
    REQUIRE(c5);
    CHECK(verify_strict(cycle_graph(5), c5->labeling, 1).ok);
}

TEST_CASE("CycleLabelerTable rejects bad entries")
{
    auto table = CycleLabelerTable::standard(2);
    CHECK_THROWS_AS(table.set(2, {5, Labeling{0, 4, 13, 9, 1}, "bad"}), std::invalid_argument);
    CHECK_THROWS_AS(table.set(1, {4, Labeling{0, 2, 7, 5}, "even"}), std::invalid_argument);
    table.set(1, {5, extend_odd_cycle(Labeling{0, 2, 5}, 1, 1), "test"});
    CHECK(table.ppc_upper_bound(1) == 5);
    CHECK_THROWS_AS(table.entry(9), std::out_of_range);
}

TEST_CASE("label_outerplanar")
{
    auto table = CycleLabelerTable::standard(2);
    auto c9 = cycle_graph(9);
    auto l = label_outerplanar(c9, {}, 1, table);
    CHECK(verify_strict(c9, l, 1).ok);

    auto g = two_c9();
    auto l2 = label_outerplanar(g, {}, 1, table);
    CHECK(oracle::labeling_ok(g, l2.values(), oracle::Kind::strict, 1));

    Graph c4chord = cycle_graph(4);
    c4chord.add_edge(0, 2);
    const OuterplanarEmbedding emb[] = {{{0, 1, 2, 3}, {{0, 2}}}};
    CHECK_THROWS_AS(label_outerplanar(c4chord, emb, 1, table), std::invalid_argument);
    CHECK_THROWS_AS(label_outerplanar(cycle_graph(8), {}, 1, table), std::invalid_argument);
}

TEST_CASE("label_outerplanar on generated graphs")
{
    auto table = CycleLabelerTable::standard(2);
    std::mt19937 rng(31);
    for (int i = 0; i < 10; ++i) {
        auto c = testgen::random_outerplanar(2 + i % 3, 9, rng);
        auto l = label_outerplanar(c.graph, c.blocks, 1, table);
        REQUIRE(oracle::labeling_ok(c.graph, l.values(), oracle::Kind::strict, 1));
    }
    // Forests and trees fall out of the pendant-vertex case.
    auto p = path_graph(6);
    auto lp = label_outerplanar(p, {}, 2, table);
    CHECK(oracle::labeling_ok(p, lp.values(), oracle::Kind::strict, 2));
}
