#include "streamorder/toposort.hpp"

#include "streamorder/ordered_partition.hpp"
#include "streamorder/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace streamorder {

std::optional<Order> toposort_tournament_stream(EdgeStream& stream) {
    const uint32_t n = stream.n();
    std::vector<uint32_t> indeg(n, 0);
    stream.meter().add_aux(n);
    stream.begin_pass();
    Edge e;
    while (stream.next_edge(e)) {
        if (e.head >= n || e.tail >= n || e.head == e.tail)
            throw promise_error("tournament stream has an invalid edge");
        indeg[e.head]++;
    }
    stream.meter().remove_aux(n);

    // Acyclic iff the in-degrees hit every value in {0, ..., n-1} once; the
    // in-degree is then the position.
    std::vector<uint8_t> hit(n, 0);
    for (uint32_t v = 0; v < n; ++v) {
        if (indeg[v] >= n || hit[indeg[v]]) return std::nullopt;
        hit[indeg[v]] = 1;
    }
    Order order(n);
    for (uint32_t v = 0; v < n; ++v) order[indeg[v]] = v;
    return order;
}

bool tournament_acyclic_onepass(EdgeStream& stream) {
    return toposort_tournament_stream(stream).has_value();
}

const char* to_string(PlantDagStatus s) {
    switch (s) {
        case PlantDagStatus::ok: return "ok";
        case PlantDagStatus::unclassified: return "unclassified";
        case PlantDagStatus::phase_limit: return "phase_limit";
        case PlantDagStatus::ambiguous: return "ambiguous";
    }
    return "unknown";
}

namespace {

struct Bitmap {
    std::vector<uint64_t> w;
    explicit Bitmap(uint32_t n) : w(((size_t)n + 63) / 64, 0) {}
    bool test(uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(uint32_t i) { w[i >> 6] |= 1ull << (i & 63); }
    uint64_t words() const { return (uint64_t)w.size(); }
};

// Topological order of the subgraph on `members` with the given edges;
// nullopt unless it is unique (exactly one ready vertex at every step).
std::optional<std::vector<VertexId>> unique_topo(const std::vector<VertexId>& members,
                                                 const std::vector<Edge>& edges) {
    const uint32_t k = (uint32_t)members.size();
    std::unordered_map<VertexId, uint32_t> local;
    local.reserve(k * 2);
    for (uint32_t i = 0; i < k; ++i) local.emplace(members[i], i);

    std::vector<std::vector<uint32_t>> adj(k);
    std::vector<uint32_t> indeg(k, 0);
    for (const Edge& e : edges) {
        uint32_t a = local.at(e.tail), b = local.at(e.head);
        adj[a].push_back(b);
        indeg[b]++;
    }

    std::vector<uint32_t> ready;
    for (uint32_t i = 0; i < k; ++i)
        if (indeg[i] == 0) ready.push_back(i);

    std::vector<VertexId> out;
    out.reserve(k);
    while (!ready.empty()) {
        if (ready.size() != 1) return std::nullopt; // more than one valid next vertex
        uint32_t cur = ready.back();
        ready.pop_back();
        out.push_back(members[cur]);
        for (uint32_t nb : adj[cur])
            if (--indeg[nb] == 0) ready.push_back(nb);
    }
    if (out.size() != k) return std::nullopt; // cycle
    return out;
}

struct PivotState {
    VertexId v;
    uint32_t home; // group index at phase start
    Bitmap left, right;           // growing in/out reach sets
    Bitmap left_prev, right_prev; // frozen layer the current hop tests against
    Bitmap in_u;                  // unclassified set, fixed after the second hop
    std::vector<Edge> u_edges;
    uint64_t u_size = 0;

    PivotState(VertexId v_, uint32_t home_, uint32_t n)
        : v(v_), home(home_), left(n), right(n), left_prev(n), right_prev(n), in_u(n) {}
};

} // namespace

PlantDagResult toposort_plantdag_largeq(EdgeStream& stream, double q, uint64_t seed,
                                        double c_pivots, uint32_t phase_limit) {
    const uint32_t n = stream.n();
    if (q <= 0.0 || q > 1.0) throw input_error("edge density q must lie in (0,1]");
    SpaceMeter& meter = stream.meter();
    Rng rng(seed);
    PlantDagResult result;

    if (n <= 1) {
        result.order.assign(n, 0);
        return result;
    }

    const double threshold = std::max(2.0, 1.0 / (q * q));
    const uint64_t pivots_per_group =
        std::max<uint64_t>(1, (uint64_t)std::ceil(c_pivots * std::log2((double)n)));

    OrderedPartition part(n);

    auto any_large = [&]() {
        for (const auto& g : part.groups)
            if ((double)g.size() > threshold) return true;
        return false;
    };

    while (any_large()) {
        if (result.phases >= phase_limit) {
            result.status = PlantDagStatus::phase_limit;
            return result;
        }
        result.phases++;

        // Freeze the block structure for the whole phase.
        std::vector<uint32_t> home = part.group_of;
        std::vector<std::vector<VertexId>> home_members = part.groups;
        meter.add_aux(n);

        std::vector<PivotState> pivots;
        std::vector<std::vector<uint32_t>> pivots_of_group(home_members.size());
        for (uint32_t g = 0; g < (uint32_t)home_members.size(); ++g) {
            const auto& members = home_members[g];
            if ((double)members.size() <= threshold) continue;
            std::unordered_set<VertexId> seen;
            for (uint64_t t = 0; t < pivots_per_group; ++t) {
                VertexId v = members[rng.below(members.size())];
                if (!seen.insert(v).second) continue; // drawn with replacement, kept once
                pivots_of_group[g].push_back((uint32_t)pivots.size());
                pivots.emplace_back(v, g, n);
                meter.add_aux(5 * pivots.back().left.words());
            }
        }

        // Hop passes: direct neighbors, then one extra hop per pass; the last
        // pass also stores edges between each pivot's unclassified vertices.
        uint64_t stored_this_phase = 0;
        for (uint32_t hop = 1; hop <= 3; ++hop) {
            if (hop > 1) {
                for (PivotState& p : pivots) {
                    p.left_prev = p.left;
                    p.right_prev = p.right;
                }
            }
            if (hop == 3) {
                for (PivotState& p : pivots) {
                    for (VertexId u : home_members[p.home]) {
                        if (u == p.v || p.left.test(u) || p.right.test(u)) continue;
                        p.in_u.set(u);
                        p.u_size++;
                    }
                    result.max_unclassified = std::max(result.max_unclassified, p.u_size);
                }
            }

            stream.begin_pass();
            Edge e;
            while (stream.next_edge(e)) {
                if (home[e.tail] != home[e.head]) continue;
                for (uint32_t slot : pivots_of_group[home[e.tail]]) {
                    PivotState& p = pivots[slot];
                    if (hop == 1) {
                        if (e.head == p.v) p.left.set(e.tail);
                        else if (e.tail == p.v) p.right.set(e.head);
                        continue;
                    }
                    if (e.tail != p.v && e.head != p.v) {
                        if (p.left_prev.test(e.head)) p.left.set(e.tail);
                        if (p.right_prev.test(e.tail)) p.right.set(e.head);
                        if (hop == 3 && p.in_u.test(e.tail) && p.in_u.test(e.head)) {
                            p.u_edges.push_back(e);
                            meter.add_edges(1);
                            stored_this_phase++;
                        }
                    }
                }
            }
        }

        // Closure along the stored unclassified-set edges, then the
        // completeness check against the pivot's home block.
        for (PivotState& p : pivots) {
            bool changed = true;
            while (changed) {
                changed = false;
                for (const Edge& e : p.u_edges) {
                    if (p.left.test(e.head) && !p.left.test(e.tail)) {
                        p.left.set(e.tail);
                        changed = true;
                    }
                    if (p.right.test(e.tail) && !p.right.test(e.head)) {
                        p.right.set(e.head);
                        changed = true;
                    }
                }
            }
            for (VertexId u : home_members[p.home]) {
                if (u == p.v) continue;
                bool l = p.left.test(u), r = p.right.test(u);
                if (l == r) { // unplaced, or contradictory placement
                    result.status = PlantDagStatus::unclassified;
                    return result;
                }
            }
        }

        // Apply pivots in draw order; each splits its current block.
        for (const PivotState& p : pivots) {
            uint32_t g = part.group_of[p.v];
            const std::vector<VertexId>& cur = part.groups[g];
            if (cur.size() <= 1) continue;
            std::vector<VertexId> before, after;
            for (VertexId u : cur) {
                if (u == p.v) continue;
                if (p.left.test(u)) before.push_back(u);
                else after.push_back(u);
            }
            std::vector<std::vector<VertexId>> pieces;
            if (!before.empty()) pieces.push_back(std::move(before));
            pieces.push_back({p.v});
            if (!after.empty()) pieces.push_back(std::move(after));
            part.split(g, std::move(pieces));
        }

        for (const PivotState& p : pivots) meter.remove_aux(5 * p.left.words());
        meter.remove_edges(stored_this_phase);
        meter.remove_aux(n);
    }

    // Gather pass: store each remaining block's internal edges and sort them.
    std::vector<std::vector<Edge>> block_edges(part.groups.size());
    uint64_t gathered = 0;
    stream.begin_pass();
    Edge e;
    while (stream.next_edge(e)) {
        uint32_t g = part.group_of[e.tail];
        if (g != part.group_of[e.head] || part.groups[g].size() < 2) continue;
        block_edges[g].push_back(e);
        meter.add_edges(1);
        gathered++;
    }

    result.order.reserve(n);
    for (uint32_t g = 0; g < (uint32_t)part.groups.size(); ++g) {
        if (part.groups[g].size() < 2) {
            for (VertexId v : part.groups[g]) result.order.push_back(v);
            continue;
        }
        auto sorted = unique_topo(part.groups[g], block_edges[g]);
        if (!sorted) {
            result.status = PlantDagStatus::ambiguous;
            result.order.clear();
            return result;
        }
        result.order.insert(result.order.end(), sorted->begin(), sorted->end());
    }
    meter.remove_edges(gathered);
    result.stored_edges_peak = meter.stored_edges_peak();
    return result;
}

PlantDagResult toposort_plantdag_smallq(EdgeStream& stream, double q, double c_window) {
    const uint32_t n = stream.n();
    if (q <= 0.0 || q > 1.0) throw input_error("edge density q must lie in (0,1]");
    SpaceMeter& meter = stream.meter();
    PlantDagResult result;

    if (n <= 1) {
        result.order.assign(n, 0);
        return result;
    }

    std::vector<uint32_t> indeg(n, 0);
    meter.add_aux(n);
    stream.begin_pass();
    Edge e;
    while (stream.next_edge(e)) indeg[e.head]++;

    // Planted-path in-degrees concentrate around their position; an edge of
    // the path connects endpoints with nearly equal in-degree, so a window of
    // a few standard deviations keeps the whole path.
    const double window = 3.0 * std::sqrt(c_window * (double)n * q * std::log((double)n));

    std::vector<Edge> retained;
    stream.begin_pass();
    while (stream.next_edge(e)) {
        double gap = std::fabs((double)indeg[e.tail] - (double)indeg[e.head]);
        if (gap <= window) {
            retained.push_back(e);
            meter.add_edges(1);
        }
    }

    std::vector<VertexId> members(n);
    std::iota(members.begin(), members.end(), VertexId{0});
    auto sorted = unique_topo(members, retained);
    meter.remove_edges(retained.size());
    meter.remove_aux(n);
    if (!sorted) {
        result.status = PlantDagStatus::ambiguous;
        return result;
    }
    result.order = std::move(*sorted);
    result.stored_edges_peak = meter.stored_edges_peak();
    return result;
}

PlantDagResult toposort_plantdag(EdgeStream& stream, double q, uint64_t seed) {
    const double cutoff = std::pow((double)std::max<uint32_t>(stream.n(), 2), -1.0 / 3.0);
    if (q >= cutoff) return toposort_plantdag_largeq(stream, q, seed);
    return toposort_plantdag_smallq(stream, q);
}

namespace {

// Stamp-marked DFS helpers over the retained adjacency of the reduction pass.
struct ReachScratch {
    std::vector<uint32_t> mark;
    uint32_t stamp = 0;
    std::vector<VertexId> stack;

    explicit ReachScratch(uint32_t n) : mark(n, 0) {}
    uint32_t fresh() { return ++stamp; }
};

} // namespace

TransReduceResult transitive_reduction_order(EdgeStream& stream) {
    const uint32_t n = stream.n();
    SpaceMeter& meter = stream.meter();
    TransReduceResult result;

    std::vector<std::unordered_set<VertexId>> out(n), in(n);
    ReachScratch fwd(n), bwd(n);
    meter.add_aux(2ull * n); // DFS stamp arrays

    auto reaches = [&](VertexId src, VertexId dst) {
        uint32_t s = fwd.fresh();
        fwd.stack.assign(1, src);
        fwd.mark[src] = s;
        while (!fwd.stack.empty()) {
            VertexId x = fwd.stack.back();
            fwd.stack.pop_back();
            if (x == dst) return true;
            for (VertexId y : out[x]) {
                if (fwd.mark[y] != s) {
                    fwd.mark[y] = s;
                    fwd.stack.push_back(y);
                }
            }
        }
        return false;
    };

    stream.begin_pass();
    Edge e;
    while (stream.next_edge(e)) {
        if (e.tail >= n || e.head >= n || e.tail == e.head)
            throw promise_error("dag stream has an invalid edge");
        if (out[e.tail].count(e.head)) continue; // duplicate arrival
        if (reaches(e.tail, e.head)) continue;   // already implied

        out[e.tail].insert(e.head);
        in[e.head].insert(e.tail);
        meter.add_edges(1);

        // Mark descendants of the new head (forward), then walk ancestors of
        // the new tail (backward) evicting retained edges the new edge covers.
        uint32_t ds = fwd.fresh();
        fwd.stack.assign(1, e.head);
        fwd.mark[e.head] = ds;
        while (!fwd.stack.empty()) {
            VertexId x = fwd.stack.back();
            fwd.stack.pop_back();
            for (VertexId y : out[x]) {
                if (fwd.mark[y] != ds) {
                    fwd.mark[y] = ds;
                    fwd.stack.push_back(y);
                }
            }
        }
        uint32_t as = bwd.fresh();
        bwd.stack.assign(1, e.tail);
        bwd.mark[e.tail] = as;
        std::vector<VertexId> ancestors{e.tail};
        while (!bwd.stack.empty()) {
            VertexId x = bwd.stack.back();
            bwd.stack.pop_back();
            for (VertexId y : in[x]) {
                if (bwd.mark[y] != as) {
                    bwd.mark[y] = as;
                    bwd.stack.push_back(y);
                    ancestors.push_back(y);
                }
            }
        }
        for (VertexId u : ancestors) {
            std::vector<VertexId> drop;
            for (VertexId v : out[u]) {
                if (fwd.mark[v] == ds && !(u == e.tail && v == e.head)) drop.push_back(v);
            }
            for (VertexId v : drop) {
                out[u].erase(v);
                in[v].erase(u);
                meter.remove_edges(1);
            }
        }
    }
    meter.remove_aux(2ull * n);
    result.stored_edges_peak = meter.stored_edges_peak();

    // The retained graph should now be a single source-to-sink path.
    if (n == 0) {
        result.ok = true;
        return result;
    }
    VertexId start = n; // invalid
    for (uint32_t v = 0; v < n; ++v) {
        if (out[v].size() > 1 || in[v].size() > 1) return result;
        if (in[v].empty()) {
            if (start != n) return result; // two sources
            start = v;
        }
    }
    if (start == n) return result;
    Order order;
    order.reserve(n);
    VertexId cur = start;
    for (;;) {
        order.push_back(cur);
        if (out[cur].empty()) break;
        cur = *out[cur].begin();
    }
    if (order.size() != n) return result;
    result.ok = true;
    result.order = std::move(order);
    return result;
}

bool shortpath_within(EdgeStream& stream, VertexId source, VertexId target, uint32_t passes) {
    const uint32_t n = stream.n();
    if (source >= n || target >= n) throw input_error("path endpoints out of range");
    if (source == target) return true;
    if (passes == 0) throw input_error("path test needs at least one pass");

    const uint32_t limit = 2 * passes + 1; // certifies paths up to 2p + 2 edges
    const uint32_t inf = limit + 2;
    std::vector<uint32_t> dist_s(n, inf), dist_t(n, inf);
    dist_s[source] = 0;
    dist_t[target] = 0;
    stream.meter().add_aux(2ull * n);

    Edge e;
    for (uint32_t pass = 0; pass < passes; ++pass) {
        stream.begin_pass();
        while (stream.next_edge(e)) {
            if (dist_s[e.tail] + dist_t[e.head] <= limit) {
                stream.meter().remove_aux(2ull * n);
                return true;
            }
            dist_s[e.head] = std::min(dist_s[e.head], std::min(dist_s[e.tail] + 1, inf));
            dist_t[e.tail] = std::min(dist_t[e.tail], std::min(dist_t[e.head] + 1, inf));
        }
    }
    stream.meter().remove_aux(2ull * n);
    return false;
}

} // namespace streamorder
