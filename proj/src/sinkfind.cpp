#include "streamorder/sinkfind.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace streamorder {

namespace {

// Distinct uniform sample of `want` vertex ids out of [0, n), returned sorted.
std::vector<VertexId> sample_distinct(uint32_t n, uint64_t want, Rng& rng, SpaceMeter& meter) {
    std::vector<VertexId> out;
    if (want >= n) {
        out.resize(n);
        for (uint32_t v = 0; v < n; ++v) out[v] = v;
        meter.add_aux(n);
        return out;
    }
    if (want > n / 2) {
        // Partial shuffle; transiently holds n words.
        std::vector<VertexId> all(n);
        for (uint32_t v = 0; v < n; ++v) all[v] = v;
        meter.add_aux(n);
        for (uint64_t i = 0; i < want; ++i)
            std::swap(all[i], all[i + rng.below(n - i)]);
        out.assign(all.begin(), all.begin() + (ptrdiff_t)want);
        std::sort(out.begin(), out.end());
        meter.remove_aux(n - want);
        return out;
    }
    std::unordered_set<VertexId> picked;
    while (picked.size() < want) picked.insert((VertexId)rng.below(n));
    out.assign(picked.begin(), picked.end());
    std::sort(out.begin(), out.end());
    meter.add_aux(want);
    return out;
}

// Position of v in a sorted id vector, or -1.
int64_t sorted_slot(const std::vector<VertexId>& ids, VertexId v) {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) return -1;
    return it - ids.begin();
}

} // namespace

SinkMultipassResult sink_multipass(EdgeStream& stream, uint32_t p, uint64_t seed) {
    const uint32_t n = stream.n();
    if (p == 0) throw input_error("sink tracker needs at least one round");
    SpaceMeter& meter = stream.meter();
    Rng rng(seed);

    uint64_t s = (uint64_t)std::ceil(std::pow((double)n, 1.0 / p) * std::log(3.0 * p));
    s = std::min<uint64_t>(std::max<uint64_t>(s, 1), n);

    SinkMultipassResult result;
    result.rounds = p;
    result.sample_size = s;
    if (n == 1) {
        result.candidate = 0;
        return result;
    }

    std::vector<VertexId> cand = sample_distinct(n, s, rng, meter);
    VertexId best = cand.front();

    for (uint32_t round = 1; round <= p; ++round) {
        // In-degree scan restricted to the candidate set; keep the maximizer
        // (ties to the smallest id, which the sorted scan order gives us).
        std::vector<uint64_t> indeg(cand.size(), 0);
        meter.add_aux(cand.size());
        stream.begin_pass();
        Edge e;
        while (stream.next_edge(e)) {
            int64_t slot = sorted_slot(cand, e.head);
            if (slot >= 0) indeg[(size_t)slot]++;
        }
        size_t best_slot = 0;
        for (size_t i = 1; i < cand.size(); ++i)
            if (indeg[i] > indeg[best_slot]) best_slot = i;
        best = cand[best_slot];
        meter.remove_aux(cand.size());

        if (round == p) break;

        // Reservoir-sample s out-neighbors of the new anchor.
        std::vector<VertexId> reservoir;
        reservoir.reserve(s);
        meter.add_aux(s);
        uint64_t seen = 0;
        stream.begin_pass();
        while (stream.next_edge(e)) {
            if (e.tail != best) continue;
            ++seen;
            if (reservoir.size() < s) {
                reservoir.push_back(e.head);
            } else {
                uint64_t j = rng.below(seen);
                if (j < s) reservoir[j] = e.head;
            }
        }
        meter.remove_aux(s - reservoir.size()); // unused reservoir capacity
        meter.remove_aux(cand.size());          // previous candidate set
        if (reservoir.empty()) {
            // No outgoing edges: the anchor is the sink; keep it as the sole
            // candidate so the remaining rounds re-certify it.
            cand.assign(1, best);
            meter.add_aux(1);
        } else {
            std::sort(reservoir.begin(), reservoir.end());
            cand = std::move(reservoir); // its words stay accounted
        }
    }
    meter.remove_aux(cand.size());

    result.candidate = best;
    return result;
}

const char* to_string(SinkOnePassStatus s) {
    switch (s) {
        case SinkOnePassStatus::ok: return "ok";
        case SinkOnePassStatus::window_not_found: return "window_not_found";
        case SinkOnePassStatus::no_candidate: return "no_candidate";
        case SinkOnePassStatus::below_regime: return "below_regime";
    }
    return "unknown";
}

SinkOnePassResult sink_random_order_onepass(EdgeStream& stream, uint64_t seed,
                                            const SinkOnePassParams& params) {
    const uint32_t n = stream.n();
    const uint64_t m = stream.m();
    SpaceMeter& meter = stream.meter();
    Rng rng(seed);
    SinkOnePassResult result;

    const double log2n = std::log2((double)std::max<uint32_t>(n, 2));
    const uint64_t track = std::min<uint64_t>(n, (uint64_t)std::ceil(params.a * log2n));
    const uint64_t list_cap = (uint64_t)std::ceil(params.cap * log2n);
    const uint64_t window_lo = (uint64_t)std::ceil((params.a - params.a / 10.0) * log2n);
    const uint64_t window_hi = (uint64_t)std::floor((params.a + params.a / 10.0) * log2n);
    const double target = params.a * log2n;

    double ratio = (double)m * params.probe / (2.0 * params.b * n * log2n);
    int64_t k_raw = (ratio > 0.0) ? (int64_t)std::floor(std::log2(ratio)) : 0;
    uint32_t k = (uint32_t)std::max<int64_t>(1, k_raw);
    result.segments = k;

    // Segments and the probe prefix must fit with a nonempty tail after them.
    uint64_t needed = 0;
    for (uint32_t i = 1; i <= k; ++i)
        needed += (uint64_t)std::ceil(params.b * std::pow(2.0, (double)i) * (n - 1) * log2n);
    const uint64_t probe_len = (uint64_t)std::floor((double)m * params.probe);
    needed += probe_len;
    if (needed >= m) {
        result.status = SinkOnePassStatus::below_regime;
        return result;
    }

    std::vector<VertexId> tracked = sample_distinct(n, track, rng, meter); // sorted
    std::vector<std::vector<VertexId>> out_lists(tracked.size());
    std::vector<uint8_t> overflowed(tracked.size(), 0);

    stream.begin_pass();
    Edge e;

    for (uint32_t seg = 1; seg <= k; ++seg) {
        uint64_t seg_len =
            (uint64_t)std::ceil(params.b * std::pow(2.0, (double)seg) * (n - 1) * log2n);
        for (uint64_t t = 0; t < seg_len; ++t) {
            if (!stream.next_edge(e)) {
                result.status = SinkOnePassStatus::below_regime;
                return result;
            }
            int64_t slot = sorted_slot(tracked, e.tail);
            if (slot < 0 || overflowed[(size_t)slot]) continue;
            auto& list = out_lists[(size_t)slot];
            list.push_back(e.head);
            meter.add_aux(1);
            if (list.size() > list_cap) {
                meter.remove_aux(list.size());
                list.clear();
                list.shrink_to_fit();
                overflowed[(size_t)slot] = 1;
            }
        }

        // Jump to the out-list closest to the target size within the window.
        int64_t chosen = -1;
        uint64_t chosen_gap = 0;
        for (size_t i = 0; i < tracked.size(); ++i) {
            if (overflowed[i]) continue;
            uint64_t sz = out_lists[i].size();
            if (sz < window_lo || sz > window_hi) continue;
            uint64_t gap = (uint64_t)std::llround(std::fabs((double)sz - target));
            if (chosen < 0 || gap < chosen_gap) {
                chosen = (int64_t)i;
                chosen_gap = gap;
            }
        }
        if (chosen < 0) {
            result.status = SinkOnePassStatus::window_not_found;
            return result;
        }

        std::vector<VertexId> next = std::move(out_lists[(size_t)chosen]);
        for (size_t i = 0; i < out_lists.size(); ++i)
            if ((int64_t)i != chosen) meter.remove_aux(out_lists[i].size());
        meter.remove_aux(tracked.size()); // replaced by the list we kept
        std::sort(next.begin(), next.end());
        tracked = std::move(next);
        out_lists.assign(tracked.size(), {});
        overflowed.assign(tracked.size(), 0);
    }

    // Probe prefix: flag every head reached in one step from the tracked set.
    std::vector<uint8_t> flagged(n, 0);
    meter.add_aux(n);
    for (uint64_t t = 0; t < probe_len; ++t) {
        if (!stream.next_edge(e)) {
            result.status = SinkOnePassStatus::below_regime;
            return result;
        }
        if (sorted_slot(tracked, e.tail) >= 0) flagged[e.head] = 1;
    }

    // Tail: any flagged vertex with an outgoing edge is not the sink.
    bool saw_tail = false;
    while (stream.next_edge(e)) {
        saw_tail = true;
        if (flagged[e.tail]) flagged[e.tail] = 0;
    }
    if (!saw_tail) {
        result.status = SinkOnePassStatus::below_regime;
        return result;
    }

    for (uint32_t v = 0; v < n; ++v) {
        if (flagged[v]) {
            result.candidate = v;
            result.status = SinkOnePassStatus::ok;
            meter.remove_aux(n);
            meter.remove_aux(tracked.size());
            return result;
        }
    }
    result.status = SinkOnePassStatus::no_candidate;
    return result;
}

} // namespace streamorder
