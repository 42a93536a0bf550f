#include "streamorder/rankaggr.hpp"

#include "streamorder/rng.hpp"
#include "streamorder/sketch_search.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace streamorder {

namespace {

void validate_instance(const RankingInstance& inst) {
    if (inst.n == 0) throw input_error("ranking instance has no items");
    if (inst.rankings.empty()) throw input_error("ranking instance has no rankings");
    for (const Order& r : inst.rankings)
        if (r.size() != inst.n || !is_permutation_of_n(r))
            throw input_error("ranking is not a permutation of the items");
}

// before_cnt[v][u] = number of inputs ranking v before u.
std::vector<std::vector<uint32_t>> before_counts(const RankingInstance& inst) {
    std::vector<std::vector<uint32_t>> cnt(inst.n, std::vector<uint32_t>(inst.n, 0));
    for (const Order& r : inst.rankings) {
        std::vector<uint32_t> pos = position_of(r);
        for (uint32_t v = 0; v < inst.n; ++v)
            for (uint32_t u = 0; u < inst.n; ++u)
                if (v != u && pos[v] < pos[u]) cnt[v][u]++;
    }
    return cnt;
}

double log_inv_delta_for(uint32_t n) {
    return std::log(3.0) + std::lgamma((double)n + 1.0);
}

} // namespace

uint64_t aggr_cost(const RankingInstance& inst, const Order& pi) {
    validate_instance(inst);
    if (pi.size() != inst.n || !is_permutation_of_n(pi))
        throw input_error("aggregate ordering is not a permutation of the items");
    uint64_t total = 0;
    for (const Order& r : inst.rankings) total += kendall_distance(r, pi);
    return total;
}

ExactAggrResult rank_aggr_exact(const RankingInstance& inst, uint32_t cap) {
    validate_instance(inst);
    const uint32_t n = inst.n;
    if (n > cap || n > 25)
        throw input_error("exact aggregation is exponential in n; n exceeds cap " +
                          std::to_string(std::min(cap, 25u)));
    auto cnt = before_counts(inst);

    const uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    std::vector<uint64_t> f((size_t)full + 1, 0);
    std::vector<uint8_t> choice((size_t)full + 1, 0);
    for (uint32_t mask = 1; mask <= full; ++mask) {
        uint64_t best = UINT64_MAX;
        uint8_t best_v = 0;
        for (uint32_t v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            uint32_t rest = mask & ~(1u << v);
            // v placed after every u in rest: each input ranking v before u disagrees.
            uint64_t w = f[rest];
            for (uint32_t u = 0; u < n; ++u)
                if (rest >> u & 1) w += cnt[v][u];
            if (w < best) {
                best = w;
                best_v = (uint8_t)v;
            }
        }
        f[mask] = best;
        choice[mask] = best_v;
    }

    ExactAggrResult result;
    result.cost = f[full];
    result.order.resize(n);
    uint32_t mask = full;
    for (uint32_t i = n; i-- > 0;) {
        uint8_t v = choice[mask];
        result.order[i] = v;
        mask &= ~(1u << v);
    }
    return result;
}

ExactAggrResult rank_aggr_enumerate(const RankingInstance& inst, uint32_t cap) {
    validate_instance(inst);
    const uint32_t n = inst.n;
    if (n > cap || n > 10)
        throw input_error("aggregation enumeration is factorial in n; n exceeds cap " +
                          std::to_string(std::min(cap, 10u)));
    Order pi(n);
    std::iota(pi.begin(), pi.end(), 0u);
    ExactAggrResult result;
    result.cost = UINT64_MAX;
    do {
        uint64_t c = aggr_cost(inst, pi);
        if (c < result.cost) {
            result.cost = c;
            result.order = pi;
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return result;
}

namespace {

AggrSketchResult finish_sketch(L1Sketch&& sketch, uint32_t n, uint32_t k) {
    OrderSearchResult best = search_min_estimate_order(sketch, n, (double)k);
    AggrSketchResult result;
    result.order = std::move(best.order);
    result.estimated_cost = best.estimate;
    result.sketch_rows = sketch.rows();
    return result;
}

} // namespace

AggrSketchResult rank_aggr_sketch(const RankingInstance& inst, double eps, uint64_t seed,
                                  uint32_t enum_cap, double c_rows) {
    validate_instance(inst);
    const uint32_t n = inst.n;
    if (n > enum_cap)
        throw input_error("sketch aggregation scans all n! candidates; n exceeds enum cap " +
                          std::to_string(enum_cap));
    const uint64_t pairs = (uint64_t)n * (n - 1) / 2;
    L1Sketch sketch = L1Sketch::with_log_inv_delta(pairs, eps / 3.0, log_inv_delta_for(n),
                                                   seed, c_rows);
    // Each ranking contributes its pair indicators in ascending pair-index
    // order, the same canonical order used when a candidate is fed back.
    for (const Order& r : inst.rankings)
        for (const auto& [index, value] : order_indicator_vector(r, 1.0))
            sketch.update(index, value);
    return finish_sketch(std::move(sketch), n, inst.k());
}

AggrSketchResult rank_aggr_sketch_from_triples(uint32_t n, uint32_t k,
                                               const std::vector<std::array<uint32_t, 3>>& triples,
                                               double eps, uint64_t seed,
                                               uint32_t enum_cap, double c_rows) {
    if (n == 0 || k == 0) throw input_error("triple stream needs n > 0 and k > 0");
    if (n > enum_cap)
        throw input_error("sketch aggregation scans all n! candidates; n exceeds enum cap " +
                          std::to_string(enum_cap));
    const uint64_t pairs = (uint64_t)n * (n - 1) / 2;
    L1Sketch sketch = L1Sketch::with_log_inv_delta(pairs, eps / 3.0, log_inv_delta_for(n),
                                                   seed, c_rows);
    for (const auto& t : triples) {
        if (t[0] >= n || t[1] >= n || t[0] == t[1] || t[2] >= k)
            throw input_error("pair triple out of range");
        if (t[0] < t[1]) sketch.update(Tournament::pair_index(t[0], t[1], n), 1.0);
        // first > second leaves the (min,max) count untouched
    }
    return finish_sketch(std::move(sketch), n, k);
}

Order rank_aggr_pick_random(const RankingInstance& inst, uint64_t seed) {
    validate_instance(inst);
    Rng rng(seed);
    return inst.rankings[rng.below(inst.rankings.size())];
}

LoadedRankings read_rankings(std::istream& is) {
    LoadedRankings out;
    std::string line;
    if (!std::getline(is, line)) throw input_error("ranking file is empty");
    {
        std::istringstream head(line);
        if (!(head >> out.n >> out.k) || out.n == 0 || out.k == 0)
            throw input_error("ranking file header must be 'n k' with both positive");
    }

    std::vector<std::vector<uint32_t>> rows;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<uint32_t> toks;
        uint32_t x;
        while (ls >> x) toks.push_back(x);
        if (!ls.eof() && ls.fail())
            throw input_error("ranking file has a non-numeric token");
        if (!toks.empty()) rows.push_back(std::move(toks));
    }
    if (rows.empty()) throw input_error("ranking file has no data lines");

    bool ranking_mode = rows.front().size() == out.n;
    if (ranking_mode && out.n == 3) {
        // A 3-item instance makes ranking and triple lines the same width;
        // resolve the collision in favor of rankings only for permutation rows.
        Order probe(rows.front().begin(), rows.front().end());
        if (!is_permutation_of_n(probe)) ranking_mode = false;
    }
    if (ranking_mode) {
        if (rows.size() != out.k)
            throw input_error("ranking file must have exactly k ranking lines");
        for (auto& r : rows) {
            Order o(r.begin(), r.end());
            if (!is_permutation_of_n(o))
                throw input_error("ranking line is not a permutation of 0..n-1");
            out.rankings.push_back(std::move(o));
        }
        return out;
    }

    for (auto& r : rows) {
        if (r.size() != 3)
            throw input_error("ranking file lines must have n items or 3 items");
        if (r[0] >= out.n || r[1] >= out.n || r[0] == r[1] || r[2] >= out.k)
            throw input_error("pair triple out of range");
        out.triples.push_back({r[0], r[1], r[2]});
    }
    return out;
}

void write_rankings(std::ostream& os, const RankingInstance& inst) {
    validate_instance(inst);
    os << inst.n << ' ' << inst.k() << '\n';
    for (const Order& r : inst.rankings) {
        for (uint32_t i = 0; i < inst.n; ++i) os << r[i] << (i + 1 == inst.n ? '\n' : ' ');
    }
}

} // namespace streamorder
