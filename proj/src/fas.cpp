#include "streamorder/fas.hpp"

#include "streamorder/ordered_partition.hpp"
#include "streamorder/sketch_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace streamorder {

FasSketchResult fas_one_pass_sketch(EdgeStream& stream, double eps, uint64_t sketch_seed,
                                    uint32_t enum_cap, double c_rows) {
    const uint32_t n = stream.n();
    if (n > enum_cap)
        throw input_error("sketch orderer scans all n! candidates; n exceeds enum cap " +
                          std::to_string(enum_cap));
    const uint64_t pairs = (uint64_t)n * (n - 1) / 2;

    // Accuracy eps/3 per estimate and failure budget delta = 1/(3 * n!),
    // computed in log space so the row count stays finite for any n.
    double log_inv_delta = std::log(3.0) + std::lgamma((double)n + 1.0);
    L1Sketch sketch = L1Sketch::with_log_inv_delta(pairs, eps / 3.0, log_inv_delta,
                                                   sketch_seed, c_rows);
    SpaceMeter& meter = stream.meter();
    meter.set_sketch_words(sketch.rows());

    // Pair-coverage bitmap, kept to enforce the tournament promise.
    std::vector<uint64_t> seen((pairs + 63) / 64, 0);
    meter.add_aux(seen.size());
    uint64_t seen_count = 0;

    stream.begin_pass();
    Edge e;
    while (stream.next_edge(e)) {
        if (e.tail == e.head || e.tail >= n || e.head >= n)
            throw promise_error("tournament stream has an invalid edge");
        uint32_t lo = std::min(e.tail, e.head), hi = std::max(e.tail, e.head);
        uint64_t j = Tournament::pair_index(lo, hi, n);
        if (seen[j >> 6] & (1ull << (j & 63)))
            throw promise_error("tournament stream repeats a vertex pair");
        seen[j >> 6] |= 1ull << (j & 63);
        ++seen_count;
        if (e.tail == lo) sketch.update(j, 1.0); // indicator is 1 when low id beats high id
    }
    if (seen_count != pairs)
        throw promise_error("tournament stream is missing vertex pairs");

    OrderSearchResult best = search_min_estimate_order(sketch, n, 1.0);
    meter.remove_aux(seen.size());
    return FasSketchResult{std::move(best.order), best.estimate, sketch.rows()};
}

KwikSortResult fas_kwiksort_stream(EdgeStream& stream, uint32_t passes, uint64_t pivot_seed,
                                   double c_group) {
    const uint32_t n = stream.n();
    if (passes == 0) throw input_error("kwiksort needs at least one pass");
    SpaceMeter& meter = stream.meter();

    KwikSortResult result;
    if (n <= 1) {
        result.order.assign(n, 0);
        for (uint32_t j = 0; j < passes; ++j) stream.begin_pass();
        return result;
    }

    Rng rng(pivot_seed);
    Order pivot_seq = random_permutation(n, rng);
    const double log2n = std::log2((double)n);

    OrderedPartition part(n);
    size_t next_pivot = 0;

    // dir_to_pivot[slot][u]: 0 unknown, 1 = u -> pivot, 2 = pivot -> u.
    std::vector<std::vector<uint8_t>> dir_to_pivot;
    std::vector<uint32_t> pivot_slot(n);

    for (uint32_t j = 1; j <= passes && next_pivot < n; ++j) {
        uint64_t remaining = n - next_pivot;
        uint64_t want = (uint64_t)std::ceil(c_group * std::pow((double)n, (double)j / passes) * log2n);
        uint64_t take = std::min<uint64_t>(remaining, std::max<uint64_t>(want, 1));
        std::vector<VertexId> group(pivot_seq.begin() + (ptrdiff_t)next_pivot,
                                    pivot_seq.begin() + (ptrdiff_t)(next_pivot + take));
        next_pivot += take;

        std::vector<uint8_t> is_pivot(n, 0);
        dir_to_pivot.assign(group.size(), std::vector<uint8_t>(n, 0));
        for (uint32_t s = 0; s < (uint32_t)group.size(); ++s) {
            is_pivot[group[s]] = 1;
            pivot_slot[group[s]] = s;
        }

        // Store every edge touching a pivot inside that pivot's subproblem as
        // of the start of this pass (one stored edge even when both ends are
        // pivots; the direction is indexed for both).
        uint64_t stored_this_pass = 0;
        stream.begin_pass();
        Edge e;
        while (stream.next_edge(e)) {
            if (part.group_of[e.tail] != part.group_of[e.head]) continue;
            bool keep = false;
            if (is_pivot[e.head]) {
                dir_to_pivot[pivot_slot[e.head]][e.tail] = 1;
                keep = true;
            }
            if (is_pivot[e.tail]) {
                dir_to_pivot[pivot_slot[e.tail]][e.head] = 2;
                keep = true;
            }
            if (keep) {
                meter.add_edges(1);
                ++stored_this_pass;
            }
        }

        // Apply the pass's pivots in sequence order; each splits whatever
        // subproblem currently contains it into before / pivot / after, with
        // the pivot frozen as a singleton between the halves.
        for (VertexId piv : group) {
            uint32_t g = part.group_of[piv];
            std::vector<VertexId>& cur = part.groups[g];
            if (cur.size() <= 1) continue;
            const std::vector<uint8_t>& dir = dir_to_pivot[pivot_slot[piv]];
            std::vector<VertexId> before, after;
            for (VertexId u : cur) {
                if (u == piv) continue;
                if (dir[u] == 1) before.push_back(u);
                else if (dir[u] == 2) after.push_back(u);
                else throw promise_error("tournament stream is missing a pivot pair");
            }
            std::vector<std::vector<VertexId>> pieces;
            if (!before.empty()) pieces.push_back(std::move(before));
            pieces.push_back({piv});
            if (!after.empty()) pieces.push_back(std::move(after));
            part.split(g, std::move(pieces));
        }

        meter.remove_edges(stored_this_pass);
        dir_to_pivot.clear();

        if (j == 1) result.max_subproblem_after_first_pass = part.max_group_size();
    }

    result.order.reserve(n);
    for (auto& g : part.groups) {
        std::sort(g.begin(), g.end()); // unresolved leftovers fall back to id order
        for (VertexId v : g) result.order.push_back(v);
    }
    result.stored_edges_peak = meter.stored_edges_peak();
    return result;
}

Order fas_by_indegree(EdgeStream& stream) {
    const uint32_t n = stream.n();
    std::vector<uint64_t> indeg(n, 0);
    stream.meter().add_aux(n);
    stream.begin_pass();
    Edge e;
    while (stream.next_edge(e)) indeg[e.head]++;
    Order order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return indeg[a] < indeg[b]; });
    stream.meter().remove_aux(n);
    return order;
}

double eps_back_edge_oracle(const Tournament& t, const Order& sigma, double eps) {
    const uint32_t n = t.n();
    double m = (double)n * (n - 1) / 4.0; // half of all pairs
    uint64_t b = count_back_edges(t, sigma);
    if ((double)b > (1.0 - eps / 2.0) * m && (double)b < (1.0 + eps / 2.0) * m) return m;
    return (double)b;
}

} // namespace streamorder
