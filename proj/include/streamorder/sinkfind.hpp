#pragma once

// Sink finding in acyclic-tournament edge streams: a (2p-1)-pass tracker that
// narrows a candidate set by in-degree maxima and out-neighbor sampling, and
// a one-pass algorithm for randomly ordered streams that grows chains of
// out-neighbor lists and confirms a survivor against the stream tail.

#include "streamorder/graphcore.hpp"
#include "streamorder/streamgen.hpp"

#include <cstdint>
#include <vector>

namespace streamorder {

struct SinkMultipassResult {
    VertexId candidate = 0;
    uint32_t rounds = 0;        // p
    uint64_t sample_size = 0;   // s per round
};

// Round i scans for in-degrees over the current candidate set and keeps the
// maximizer v_i (ties to the smallest id), then reservoir-samples
// s = min(n, ceil(n^{1/p} * ln(3p))) of v_i's out-neighbors as the next
// candidate set; an empty sample certifies v_i as the sink. Uses 2p-1 passes.
// With p = 1 the candidate set is all of V and the answer is exact.
SinkMultipassResult sink_multipass(EdgeStream& stream, uint32_t p, uint64_t seed);

struct SinkOnePassParams {
    double a = 200.0;    // tracked-set size multiplier, |S| = a log2 n
    double b = 100.0;    // segment length multiplier
    double cap = 220.0;  // per-vertex out-list overflow cap, cap * log2 n
    double probe = 1e-3; // fraction of the stream used to collect candidates
};

enum class SinkOnePassStatus {
    ok,
    window_not_found, // no tracked vertex had an out-list in the target window
    no_candidate,     // every probed candidate showed an outgoing edge
    below_regime,     // stream too short for segments + probe + nonempty tail
};

struct SinkOnePassResult {
    SinkOnePassStatus status = SinkOnePassStatus::ok;
    VertexId candidate = 0; // valid when status == ok
    uint32_t segments = 0;  // k
};

const char* to_string(SinkOnePassStatus s);

// Single pass over a randomly ordered acyclic-tournament stream. Segment i
// ingests b * 2^i * (n-1) * log2 n edges while recording out-neighbor lists
// for the tracked set (lists clear and mark themselves once past
// cap * log2 n entries); the tracked set then jumps to the out-list whose
// size lands closest to a * log2 n within +-10%. After
// k = max(1, floor(log2(m * probe / (2 b n log2 n)))) segments, a probe
// prefix of floor(m * probe) edges flags heads reached from the tracked set
// and the remaining tail eliminates any flagged vertex seen with an outgoing
// edge; the smallest surviving id is reported as the sink.
SinkOnePassResult sink_random_order_onepass(EdgeStream& stream, uint64_t seed,
                                            const SinkOnePassParams& params = {});

} // namespace streamorder
