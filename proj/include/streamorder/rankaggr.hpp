#pragma once

// Rank aggregation over k complete rankings of n items: exact Kemeny
// optimization by subset DP, a sketch-based (1+eps) scheme over the pairwise
// count vector, and the pick-a-random-input 2-approximation. Items are vertex
// ids 0..n-1 and aggregate orderings reuse the Order type.

#include "streamorder/graphcore.hpp"
#include "streamorder/l1sketch.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace streamorder {

struct RankingInstance {
    uint32_t n = 0;
    std::vector<Order> rankings;

    uint32_t k() const { return (uint32_t)rankings.size(); }
};

// Total Kendall disagreement of `pi` against every input ranking.
uint64_t aggr_cost(const RankingInstance& inst, const Order& pi);

inline constexpr uint32_t kExactKemenyDefaultCap = 12;

struct ExactAggrResult {
    uint64_t cost = 0;
    Order order;
};

// Subset DP: placing v last among S costs the number of (input, u in S)
// pairs where the input ranks v before u. O(2^n n^2).
ExactAggrResult rank_aggr_exact(const RankingInstance& inst,
                                uint32_t cap = kExactKemenyDefaultCap);

// Brute force over all n! orderings (independent witness for the DP).
ExactAggrResult rank_aggr_enumerate(const RankingInstance& inst, uint32_t cap = 8);

struct AggrSketchResult {
    Order order;
    double estimated_cost = 0.0;
    uint64_t sketch_rows = 0;
};

// Sketches the pairwise vector x indexed by id pairs a < b with
// x_{a,b} = #inputs ranking a before b; for any ordering pi the l1 distance
// to k * (pi's pair indicators) is exactly pi's aggregation cost. Accuracy
// eps/3 per candidate, failure budget 1/(3 * n!), minimizer over all n!
// orderings. Items are fed pair by pair in ascending pair-index order per
// ranking, so re-feeding an ordering reproduces the accumulators exactly.
AggrSketchResult rank_aggr_sketch(const RankingInstance& inst, double eps, uint64_t seed,
                                  uint32_t enum_cap = 10,
                                  double c_rows = kSketchRowConstant);

// Same sketch fed from an explicit stream of (first, second, voter) triples,
// each asserting that the voter ranks `first` before `second`; a triple with
// first > second contributes nothing to the (min,max)-indexed count vector.
AggrSketchResult rank_aggr_sketch_from_triples(uint32_t n, uint32_t k,
                                               const std::vector<std::array<uint32_t, 3>>& triples,
                                               double eps, uint64_t seed,
                                               uint32_t enum_cap = 10,
                                               double c_rows = kSketchRowConstant);

// Return a uniformly random input ranking (2-approximation in expectation).
Order rank_aggr_pick_random(const RankingInstance& inst, uint64_t seed);

// ---------------------------------------------------------------------------
// File format: line 1 "n k"; then either k lines of n items each (complete
// rankings) or lines of 3 items "first second voter" (pair triples). The
// second line's token count disambiguates; with n = 3 a permutation line is
// read as a ranking.
// ---------------------------------------------------------------------------

struct LoadedRankings {
    uint32_t n = 0;
    uint32_t k = 0;
    std::vector<Order> rankings;                     // rankings mode
    std::vector<std::array<uint32_t, 3>> triples;    // triples mode
    bool is_triples() const { return rankings.empty() && !triples.empty(); }
};

LoadedRankings read_rankings(std::istream& is);
void write_rankings(std::ostream& os, const RankingInstance& inst);

} // namespace streamorder
