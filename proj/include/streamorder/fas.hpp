#pragma once

// Feedback-arc-set orderers for tournament edge streams: a one-pass
// sketch-based (1+eps) scheme for small n, a multi-pass quicksort-style
// 3-approximation, and the one-pass sort-by-in-degree 5-approximation.

#include "streamorder/graphcore.hpp"
#include "streamorder/l1sketch.hpp"
#include "streamorder/streamgen.hpp"

#include <cstdint>
#include <optional>

namespace streamorder {

struct FasSketchResult {
    Order order;                 // ordering minimizing the estimated back-edge count
    double estimated_back_edges = 0.0;
    uint64_t sketch_rows = 0;
};

// One pass over a tournament stream feeds the pair-indicator vector into an
// l1 sketch with accuracy eps/3 and per-candidate failure budget 1/(3 * n!);
// post-processing scans all n! orderings for the minimizer. The factorial
// scan restricts this to small n, guarded by enum_cap. Throws promise_error
// if the stream is not exactly one edge per vertex pair.
FasSketchResult fas_one_pass_sketch(EdgeStream& stream, double eps, uint64_t sketch_seed,
                                    uint32_t enum_cap = 10,
                                    double c_rows = kSketchRowConstant);

struct KwikSortResult {
    Order order;
    uint64_t max_subproblem_after_first_pass = 0;
    uint64_t stored_edges_peak = 0;
};

// p-pass quicksort emulation on a tournament stream. Pass j draws the next
// min(remaining, ceil(c_group * n^{j/p} * log2 n)) pivots from a seeded pivot
// permutation, stores each pivot's edges into its start-of-pass subproblem,
// then applies the pivots in sequence: vertices beating the pivot go before
// it, the rest after. Unresolved subproblems fall back to id order.
KwikSortResult fas_kwiksort_stream(EdgeStream& stream, uint32_t passes, uint64_t pivot_seed,
                                   double c_group = 4.0);

// One pass, n counters: order vertices by ascending in-degree (ties by id).
Order fas_by_indegree(EdgeStream& stream);

// Back-edge count oracle that only answers precisely away from the midpoint
// m = C(n,2)/2: returns m whenever the true count lies strictly inside
// ((1 - eps/2) m, (1 + eps/2) m), and the exact count otherwise.
double eps_back_edge_oracle(const Tournament& t, const Order& sigma, double eps);

} // namespace streamorder
