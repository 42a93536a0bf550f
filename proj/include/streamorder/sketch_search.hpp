#pragma once

// Post-processing shared by the sketch-based orderers: walk every candidate
// ordering of n vertices and return the one whose implied pair-indicator
// vector minimizes the sketch's distance estimate. Candidates are enumerated
// by adjacent transpositions (Steinhaus-Johnson-Trotter), so per step exactly
// one pair column flips orientation; the residual is updated incrementally
// in float scratch and the exact median is recomputed only when a cheap
// count certificate says the candidate could match or beat the incumbent.

#include "streamorder/graphcore.hpp"
#include "streamorder/l1sketch.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace streamorder {

struct OrderSearchResult {
    Order order;            // minimizing ordering (lexicographically smallest on ties)
    double estimate = 0.0;  // median estimate at that ordering
    uint64_t candidates = 0; // orderings examined (n!)
};

// `scale` is the magnitude of a set pair entry in y: 1 for a single
// tournament's indicator vector, k for a k-voter rank-aggregation profile.
OrderSearchResult search_min_estimate_order(const L1Sketch& sketch, uint32_t n, double scale);

// Sparse pair-indicator vector of an ordering, strictly ascending pair index:
// entry (pair_index(u,v), scale) for each id pair u < v with u ordered first.
// Suitable for L1Sketch::estimate_diff and for the double-precision
// cross-check of the float search path.
std::vector<std::pair<uint64_t, double>> order_indicator_vector(const Order& order, double scale);

} // namespace streamorder
