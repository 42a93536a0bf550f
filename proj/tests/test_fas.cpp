#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "streamorder/fas.hpp"
#include "streamorder/streamgen.hpp"

#include <algorithm>

using namespace streamorder;

namespace {

EdgeStream one_pass_of(const Tournament& t) {
    return stream_of(t, StreamOrder::AsGiven, 1, 1);
}

} // namespace

TEST_CASE("the one-pass sketch orderer recovers a planted acyclic order exactly") {
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
        HiddenOrderTournament h = gen_random_acyclic_tournament(6, seed);
        EdgeStream s = one_pass_of(h.tournament);
        FasSketchResult res = fas_one_pass_sketch(s, 0.3, seed * 811, 10, 4.0);
        CHECK(res.order == h.hidden_order); // zero back edges beats every rival
        CHECK(count_back_edges(h.tournament, res.order) == 0);
        CHECK(res.estimated_back_edges <= 0.01);
        CHECK(res.sketch_rows > 3000);  // c=4, accuracy eps/3, failure budget 1/(3*6!)
        CHECK(res.sketch_rows < 3200);
        CHECK(s.meter().passes_used() == 1);
        CHECK(s.meter().sketch_words() == res.sketch_rows);
    }
}

TEST_CASE("the sketch orderer lands within (1+eps) of optimal on random tournaments") {
    int hits = 0;
    for (uint64_t t = 0; t < 10; ++t) {
        Tournament tour = gen_coin_tournament(6, mix64(4242, t, 1));
        EdgeStream s = one_pass_of(tour);
        FasSketchResult res = fas_one_pass_sketch(s, 0.4, mix64(4242, t, 2), 10, 4.0);
        uint64_t back = count_back_edges(tour, res.order);
        uint64_t beta = exact_min_fas(tour).beta;
        if ((double)back <= 1.4 * (double)beta + 1e-9) hits++;
    }
    CHECK(hits >= 8); // failure budget per trial is well under 1/3
}

TEST_CASE("the sketch orderer enforces the tournament promise") {
    HiddenOrderTournament h = gen_random_acyclic_tournament(5, 9);
    std::vector<Edge> edges = h.tournament.all_edges();

    std::vector<Edge> missing(edges.begin(), edges.end() - 1);
    EdgeStream short_stream(missing, 5, StreamOrder::AsGiven, 1, 1);
    CHECK_THROWS_AS(fas_one_pass_sketch(short_stream, 0.3, 1, 10, 1.0), promise_error);

    std::vector<Edge> dup = edges;
    dup.push_back(edges.front());
    EdgeStream dup_stream(dup, 5, StreamOrder::AsGiven, 1, 1);
    CHECK_THROWS_AS(fas_one_pass_sketch(dup_stream, 0.3, 1, 10, 1.0), promise_error);
}

TEST_CASE("the sketch orderer refuses vertex counts beyond its factorial scan cap") {
    Tournament t = gen_coin_tournament(11, 3);
    EdgeStream s = one_pass_of(t);
    CHECK_THROWS_AS(fas_one_pass_sketch(s, 0.3, 1), input_error); // default cap 10
}

TEST_CASE("quicksort emulation sorts planted acyclic tournaments exactly") {
    for (uint64_t seed : {10ull, 20ull, 30ull, 40ull, 50ull}) {
        HiddenOrderTournament h = gen_random_acyclic_tournament(64, seed);
        // c_group = 1 forces a genuine two-round pivot schedule at this size.
        EdgeStream s = stream_of(h.tournament, StreamOrder::AsGiven, 2, seed);
        KwikSortResult res = fas_kwiksort_stream(s, 2, seed * 13, 1.0);
        CHECK(res.order == h.hidden_order);
        CHECK(s.meter().passes_used() <= 2);
    }
}

TEST_CASE("quicksort emulation stays within 3x of optimal on average") {
    uint64_t total_back = 0, total_beta = 0;
    for (uint64_t t = 0; t < 30; ++t) {
        Tournament tour = gen_coin_tournament(7, mix64(777, t, 1));
        EdgeStream s = stream_of(tour, StreamOrder::AsGiven, 2, t);
        KwikSortResult res = fas_kwiksort_stream(s, 2, mix64(777, t, 2));
        total_back += count_back_edges(tour, res.order);
        total_beta += exact_min_fas(tour).beta;
    }
    CHECK(total_beta > 0);
    CHECK((double)total_back <= 3.0 * (double)total_beta);
}

TEST_CASE("a first pivot group covering every vertex resolves everything at once") {
    Tournament tour = gen_coin_tournament(32, 606);
    EdgeStream s = stream_of(tour, StreamOrder::AsGiven, 2, 1);
    // Group size ceil(4 * 32^{1/2} * log2 32) = 114 > 32, so every vertex is a
    // pass-1 pivot and all remaining subproblems are singletons.
    KwikSortResult res = fas_kwiksort_stream(s, 2, 99, 4.0);
    CHECK(res.max_subproblem_after_first_pass == 1);
    CHECK(is_permutation_of_n(res.order));
    CHECK(s.meter().passes_used() <= 2);
    CHECK(res.stored_edges_peak <= tour.pair_count());
}

TEST_CASE("quicksort emulation is deterministic in its seeds") {
    Tournament tour = gen_coin_tournament(24, 5150);
    EdgeStream s1 = stream_of(tour, StreamOrder::AsGiven, 3, 1);
    EdgeStream s2 = stream_of(tour, StreamOrder::AsGiven, 3, 1);
    KwikSortResult a = fas_kwiksort_stream(s1, 3, 88);
    KwikSortResult b = fas_kwiksort_stream(s2, 3, 88);
    CHECK(a.order == b.order);
    CHECK(a.stored_edges_peak == b.stored_edges_peak);
}

TEST_CASE("in-degree ordering sorts transitive tournaments exactly") {
    HiddenOrderTournament h = gen_random_acyclic_tournament(40, 21);
    EdgeStream s = one_pass_of(h.tournament);
    CHECK(fas_by_indegree(s) == h.hidden_order);
    CHECK(s.meter().passes_used() == 1);
}

TEST_CASE("in-degree ordering stays within 5x of optimal") {
    for (uint64_t t = 0; t < 50; ++t) {
        Tournament tour = gen_coin_tournament(7, mix64(31415, t, 1));
        EdgeStream s = one_pass_of(tour);
        Order order = fas_by_indegree(s);
        uint64_t beta = exact_min_fas(tour).beta;
        CHECK(count_back_edges(tour, order) <= 5 * beta);
    }
}

TEST_CASE("in-degree ordering breaks ties by vertex id") {
    // 3-cycle: all in-degrees equal, so the order must be 0,1,2.
    Tournament t(3);
    t.set_low_to_high(0, 1, true);
    t.set_low_to_high(1, 2, true);
    t.set_low_to_high(0, 2, false);
    EdgeStream s = one_pass_of(t);
    CHECK(fas_by_indegree(s) == Order{0, 1, 2});
}

TEST_CASE("the windowed back-edge oracle blurs only near the midpoint") {
    Tournament t = Tournament::from_order({0, 1, 2, 3}); // m = C(4,2)/2 = 3
    CHECK(eps_back_edge_oracle(t, {0, 1, 2, 3}, 0.5) == 0.0);  // far below the window
    CHECK(eps_back_edge_oracle(t, {3, 2, 1, 0}, 0.5) == 6.0);  // far above the window
    Order three_back = {0, 3, 2, 1};
    REQUIRE(count_back_edges(t, three_back) == 3);
    CHECK(eps_back_edge_oracle(t, three_back, 0.5) == 3.0);    // inside: reports m
    Order two_back = {2, 0, 1, 3};
    REQUIRE(count_back_edges(t, two_back) == 2);
    CHECK(eps_back_edge_oracle(t, two_back, 0.5) == 2.0);      // 2 < 2.25: exact
    CHECK(eps_back_edge_oracle(t, two_back, 1.0) == 3.0);      // window widens to (1.5,4.5)
}
