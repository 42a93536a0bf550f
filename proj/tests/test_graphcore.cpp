#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "streamorder/graphcore.hpp"
#include "streamorder/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace streamorder;

namespace {

Tournament coin_tournament(uint32_t n, Rng& rng) {
    Tournament t(n);
    for (uint32_t u = 0; u + 1 < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) t.set_low_to_high(u, v, rng.coin());
    return t;
}

Digraph digraph_of(const Tournament& t) { return Digraph{t.n(), t.all_edges()}; }

} // namespace

TEST_CASE("pair_index enumerates unordered pairs densely and in order") {
    const uint32_t n = 10;
    uint64_t expect = 0;
    for (uint32_t u = 0; u + 1 < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) CHECK(Tournament::pair_index(u, v, n) == expect++);
    CHECK(expect == (uint64_t)n * (n - 1) / 2);
}

TEST_CASE("tournament edge bits round-trip and orient consistently") {
    Rng rng(11);
    Tournament t = coin_tournament(9, rng);
    for (uint32_t u = 0; u < 9; ++u)
        for (uint32_t v = 0; v < 9; ++v) {
            if (u == v) continue;
            CHECK(t.has_edge(u, v) == !t.has_edge(v, u));
        }
    std::vector<Edge> edges = t.all_edges();
    CHECK(edges.size() == t.pair_count());
    std::set<std::pair<uint32_t, uint32_t>> pairs;
    for (const Edge& e : edges) {
        CHECK(t.has_edge(e.tail, e.head));
        pairs.insert({std::min(e.tail, e.head), std::max(e.tail, e.head)});
    }
    CHECK(pairs.size() == t.pair_count());
}

TEST_CASE("ordering helpers invert each other") {
    Rng rng(5);
    Order pi = random_permutation(12, rng);
    CHECK(is_permutation_of_n(pi));
    auto pos = position_of(pi);
    CHECK(order_from_positions(pos) == pi);
    Order rev = reverse_order(pi);
    CHECK(rev.front() == pi.back());
    CHECK(kendall_distance(pi, rev) == 12ull * 11 / 2);
}

TEST_CASE("a tournament built from an order has no back edges along it") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Order pi = random_permutation(8, rng);
        Tournament t = Tournament::from_order(pi);
        CHECK(count_back_edges(t, pi) == 0);
        CHECK(count_back_edges(t, reverse_order(pi)) == t.pair_count());
        CHECK(is_acyclic_tournament(t));
    }
}

TEST_CASE("back edges of an order-tournament equal the Kendall distance") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        uint32_t n = 2 + (uint32_t)rng.below(6);
        Order pi = random_permutation(n, rng);
        Order sigma = random_permutation(n, rng);
        Tournament t = Tournament::from_order(pi);
        CHECK(count_back_edges(t, sigma) == kendall_distance(pi, sigma));
    }
}

TEST_CASE("tournament and digraph back-edge counts agree") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Tournament t = coin_tournament(7, rng);
        Order sigma = random_permutation(7, rng);
        Digraph g = digraph_of(t);
        CHECK(count_back_edges(t, sigma) == count_back_edges(g, sigma));
        auto set = back_edge_set(g, sigma);
        CHECK(set.size() == count_back_edges(g, sigma));
        auto pos = position_of(sigma);
        for (const Edge& e : set) CHECK(pos[e.head] < pos[e.tail]);
    }
}

TEST_CASE("in-degree acyclicity test matches DFS on every 4-vertex tournament") {
    const uint32_t n = 4;
    for (uint32_t mask = 0; mask < (1u << 6); ++mask) {
        Tournament t(n);
        t.raw_bits()[0] = mask;
        CHECK(is_acyclic_tournament(t) == digraph_is_acyclic(digraph_of(t)));
    }
}

TEST_CASE("topological_order sorts DAGs and rejects cycles") {
    Digraph dag{4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}};
    auto order = topological_order(dag);
    REQUIRE(order.has_value());
    auto pos = position_of(*order);
    for (const Edge& e : dag.edges) CHECK(pos[e.tail] < pos[e.head]);

    Digraph cyc{3, {{0, 1}, {1, 2}, {2, 0}}};
    CHECK(!topological_order(cyc).has_value());
    CHECK(!digraph_is_acyclic(cyc));
}

TEST_CASE("exact minimum back edges: DP matches enumeration and attains its cost") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Tournament t = coin_tournament(6, rng);
        ExactFasResult dp = exact_min_fas(t);
        ExactFasResult brute = exact_min_fas_enumerate(t);
        CHECK(dp.beta == brute.beta);
        CHECK(count_back_edges(t, dp.order) == dp.beta);
        CHECK(count_back_edges(t, brute.order) == brute.beta);
    }
}

TEST_CASE("exact minimum back edges works on sparse digraphs too") {
    Digraph g{5, {{1, 0}, {2, 1}, {3, 2}, {4, 3}, {0, 4}}}; // 5-cycle: one edge must break
    ExactFasResult dp = exact_min_fas(g);
    ExactFasResult brute = exact_min_fas_enumerate(g);
    CHECK(dp.beta == 1);
    CHECK(brute.beta == 1);
    CHECK(count_back_edges(g, dp.order) == 1);

    Digraph dag{4, {{0, 1}, {1, 2}, {2, 3}}};
    CHECK(exact_min_fas(dag).beta == 0);
}

TEST_CASE("exponential solvers enforce their caps") {
    Tournament big(26);
    CHECK_THROWS_AS(exact_min_fas(big), input_error); // default cap is 20
    Tournament t(8);
    CHECK_THROWS_AS(exact_min_fas(t, 6), input_error);
}

TEST_CASE("mediocrity fractions count strict in/out degree windows") {
    // 3-cycle: every vertex has in-degree and out-degree 1.
    Tournament t(3);
    t.set_low_to_high(0, 1, true);  // 0 -> 1
    t.set_low_to_high(1, 2, true);  // 1 -> 2
    t.set_low_to_high(0, 2, false); // 2 -> 0
    CHECK(mediocre_in_fraction(t, 0.2) == doctest::Approx(1.0));
    CHECK(mediocre_out_fraction(t, 0.2) == doctest::Approx(1.0));
    // Transitive triangle: in-degrees 0,1,2 against the window (0.6, 2.4).
    Tournament s = Tournament::from_order({0, 1, 2});
    CHECK(mediocre_in_fraction(s, 0.2) == doctest::Approx(2.0 / 3.0));
    CHECK(mediocre_in_fraction(s, 0.4) == doctest::Approx(0.0)); // window (1.2, 1.8) is empty
}

TEST_CASE("every tournament keeps at least 1-4eps of vertices mediocre") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        Tournament t = coin_tournament(16, rng);
        for (double eps : {0.1, 0.2}) {
            CHECK(mediocre_in_fraction(t, eps) >= 1.0 - 4.0 * eps - 1e-12);
            CHECK(mediocre_out_fraction(t, eps) >= 1.0 - 4.0 * eps - 1e-12);
        }
    }
}

TEST_CASE("kendall distance is a metric on the tested range") {
    Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        Order a = random_permutation(7, rng), b = random_permutation(7, rng),
              c = random_permutation(7, rng);
        CHECK(kendall_distance(a, a) == 0);
        CHECK(kendall_distance(a, b) == kendall_distance(b, a));
        CHECK(kendall_distance(a, c) <= kendall_distance(a, b) + kendall_distance(b, c));
    }
}
