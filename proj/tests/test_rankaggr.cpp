#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "streamorder/rankaggr.hpp"
#include "streamorder/rng.hpp"

#include <algorithm>
#include <sstream>

using namespace streamorder;

namespace {

RankingInstance random_instance(uint32_t n, uint32_t k, uint64_t seed) {
    Rng rng(seed);
    RankingInstance inst;
    inst.n = n;
    for (uint32_t i = 0; i < k; ++i) inst.rankings.push_back(random_permutation(n, rng));
    return inst;
}

// Expand an instance into explicit pair triples, pair by pair in ascending
// pair-index order per ranking — the same feeding order the full-form sketch
// uses, which makes the two accumulator states identical.
std::vector<std::array<uint32_t, 3>> triples_of(const RankingInstance& inst) {
    std::vector<std::array<uint32_t, 3>> out;
    for (uint32_t voter = 0; voter < inst.k(); ++voter) {
        auto pos = position_of(inst.rankings[voter]);
        for (uint32_t u = 0; u + 1 < inst.n; ++u)
            for (uint32_t v = u + 1; v < inst.n; ++v) {
                if (pos[u] < pos[v]) out.push_back({u, v, voter});
                else out.push_back({v, u, voter});
            }
    }
    return out;
}

} // namespace

TEST_CASE("aggregation cost sums Kendall distances to every input") {
    RankingInstance inst;
    inst.n = 4;
    inst.rankings = {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}};
    CHECK(aggr_cost(inst, {0, 1, 2, 3}) == 0);
    CHECK(aggr_cost(inst, {3, 2, 1, 0}) == 3ull * 6); // k * C(n,2)

    RankingInstance single = random_instance(7, 1, 5);
    Rng rng(6);
    Order sigma = random_permutation(7, rng);
    CHECK(aggr_cost(single, sigma) == kendall_distance(single.rankings[0], sigma));
}

TEST_CASE("aggregation cost validates its inputs") {
    RankingInstance empty;
    empty.n = 3;
    CHECK_THROWS_AS(aggr_cost(empty, {0, 1, 2}), input_error);
    RankingInstance bad;
    bad.n = 3;
    bad.rankings = {{0, 1, 1}};
    CHECK_THROWS_AS(aggr_cost(bad, {0, 1, 2}), input_error);
    RankingInstance ok = random_instance(3, 2, 1);
    CHECK_THROWS_AS(aggr_cost(ok, {0, 1}), input_error);
}

TEST_CASE("subset DP matches full enumeration and attains its own cost") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        RankingInstance inst = random_instance(5, 3, mix64(50, seed, 1));
        ExactAggrResult dp = rank_aggr_exact(inst);
        ExactAggrResult brute = rank_aggr_enumerate(inst);
        CHECK(dp.cost == brute.cost);
        CHECK(aggr_cost(inst, dp.order) == dp.cost);
        CHECK(aggr_cost(inst, brute.order) == brute.cost);
    }
}

TEST_CASE("a unanimous instance aggregates to the common ranking at zero cost") {
    Rng rng(77);
    Order sigma = random_permutation(6, rng);
    RankingInstance inst;
    inst.n = 6;
    inst.rankings = {sigma, sigma, sigma};
    ExactAggrResult exact = rank_aggr_exact(inst);
    CHECK(exact.cost == 0);
    CHECK(exact.order == sigma);
}

TEST_CASE("the exponential solvers refuse oversized instances") {
    RankingInstance big = random_instance(13, 1, 3);
    CHECK_THROWS_AS(rank_aggr_exact(big), input_error);       // default cap 12
    RankingInstance mid = random_instance(9, 1, 3);
    CHECK_THROWS_AS(rank_aggr_enumerate(mid), input_error);   // default cap 8
    CHECK_THROWS_AS(rank_aggr_sketch(random_instance(11, 1, 3), 0.3, 1), input_error);
}

TEST_CASE("the sketch aggregator recovers a unanimous ranking exactly") {
    Rng rng(123);
    Order sigma = random_permutation(6, rng);
    RankingInstance inst;
    inst.n = 6;
    inst.rankings = {sigma, sigma, sigma, sigma};
    AggrSketchResult res = rank_aggr_sketch(inst, 0.3, 999, 10, 4.0);
    CHECK(res.order == sigma); // zero residual at sigma, k per pair elsewhere
    CHECK(res.estimated_cost <= 0.01);
    CHECK(res.sketch_rows > 0);
}

TEST_CASE("the sketch aggregator lands within (1+eps) of optimal on most seeds") {
    int hits = 0;
    for (uint64_t seed = 0; seed < 10; ++seed) {
        RankingInstance inst = random_instance(5, 3, mix64(60, seed, 1));
        AggrSketchResult res = rank_aggr_sketch(inst, 0.4, mix64(60, seed, 2), 10, 4.0);
        uint64_t opt = rank_aggr_exact(inst).cost;
        if ((double)aggr_cost(inst, res.order) <= 1.4 * (double)opt + 1e-9) hits++;
    }
    CHECK(hits >= 8);
}

TEST_CASE("feeding the same information as triples reproduces the full-form result") {
    RankingInstance inst = random_instance(5, 4, 2718);
    AggrSketchResult full = rank_aggr_sketch(inst, 0.3, 31337, 10, 4.0);
    AggrSketchResult trip = rank_aggr_sketch_from_triples(inst.n, inst.k(), triples_of(inst),
                                                          0.3, 31337, 10, 4.0);
    CHECK(full.order == trip.order);
    CHECK(full.estimated_cost == trip.estimated_cost); // bitwise-equal accumulators
    CHECK(full.sketch_rows == trip.sketch_rows);
}

TEST_CASE("triples that assert nothing change nothing") {
    std::vector<std::array<uint32_t, 3>> base = {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}};
    std::vector<std::array<uint32_t, 3>> padded = base;
    padded.push_back({2, 1, 0}); // first > second: no update to the count vector
    AggrSketchResult a = rank_aggr_sketch_from_triples(3, 1, base, 0.3, 5, 10, 4.0);
    AggrSketchResult b = rank_aggr_sketch_from_triples(3, 1, padded, 0.3, 5, 10, 4.0);
    CHECK(a.order == b.order);
    CHECK(a.estimated_cost == b.estimated_cost);
    CHECK(a.order == Order{0, 1, 2}); // the asserted pairs form a transitive chain
}

TEST_CASE("triple streams validate their item ids") {
    std::vector<std::array<uint32_t, 3>> bad = {{0, 3, 0}};
    CHECK_THROWS_AS(rank_aggr_sketch_from_triples(3, 1, bad, 0.3, 1, 10, 4.0), input_error);
    CHECK_THROWS_AS(rank_aggr_sketch_from_triples(0, 1, {}, 0.3, 1, 10, 4.0), input_error);
}

TEST_CASE("picking a random input returns one of the inputs, deterministically") {
    RankingInstance inst = random_instance(6, 5, 404);
    Order pick = rank_aggr_pick_random(inst, 11);
    CHECK(std::count(inst.rankings.begin(), inst.rankings.end(), pick) >= 1);
    CHECK(rank_aggr_pick_random(inst, 11) == pick);
    // Across seeds the picks should not all coincide.
    bool varied = false;
    for (uint64_t s = 0; s < 20 && !varied; ++s)
        varied = rank_aggr_pick_random(inst, s) != pick;
    CHECK(varied);
}

TEST_CASE("ranking files round-trip") {
    RankingInstance inst = random_instance(5, 3, 808);
    std::stringstream ss;
    write_rankings(ss, inst);
    LoadedRankings back = read_rankings(ss);
    CHECK(back.n == inst.n);
    CHECK(back.k == inst.k());
    CHECK(!back.is_triples());
    CHECK(back.rankings == inst.rankings);
}

TEST_CASE("triple files parse by token count") {
    std::stringstream ss("4 2\n0 1 0\n2 3 1\n1 3 0\n");
    LoadedRankings lr = read_rankings(ss);
    CHECK(lr.is_triples());
    CHECK(lr.n == 4);
    CHECK(lr.k == 2);
    REQUIRE(lr.triples.size() == 3);
    CHECK(lr.triples[1] == std::array<uint32_t, 3>{2, 3, 1});

    // With n = 3 a line of three tokens is ambiguous; permutation lines win.
    std::stringstream amb("3 2\n0 1 2\n2 1 0\n");
    LoadedRankings as_rankings = read_rankings(amb);
    CHECK(!as_rankings.is_triples());
    CHECK(as_rankings.rankings.size() == 2);

    // Non-permutation first row with n = 3 falls through to triples.
    std::stringstream trip("3 2\n0 1 1\n1 2 0\n");
    CHECK(read_rankings(trip).is_triples());
}

TEST_CASE("malformed ranking files are rejected") {
    auto load = [](const std::string& text) {
        std::stringstream ss(text);
        return read_rankings(ss);
    };
    CHECK_THROWS_AS(load(""), input_error);
    CHECK_THROWS_AS(load("0 1\n"), input_error);
    CHECK_THROWS_AS(load("3 2\n"), input_error);                    // no data lines
    CHECK_THROWS_AS(load("3 2\n0 1 2\n"), input_error);             // k mismatch
    CHECK_THROWS_AS(load("4 1\n0 1 2 2\n"), input_error);           // not a permutation
    CHECK_THROWS_AS(load("4 1\n0 1 2\n0 9 0\n"), input_error);      // triple out of range
    CHECK_THROWS_AS(load("4 1\nzero 1 2 3\n"), input_error);        // non-numeric
    CHECK_THROWS_AS(load("4 1\n0 1\n"), input_error);               // wrong arity
}
