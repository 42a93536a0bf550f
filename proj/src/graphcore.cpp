#include "streamorder/graphcore.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace streamorder {

bool is_permutation_of_n(const Order& order) {
    std::vector<char> seen(order.size(), 0);
    for (VertexId v : order) {
        if (v >= order.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<uint32_t> position_of(const Order& order) {
    std::vector<uint32_t> pos(order.size());
    for (uint32_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    return pos;
}

Order order_from_positions(const std::vector<uint32_t>& pos) {
    Order order(pos.size());
    for (uint32_t v = 0; v < pos.size(); ++v) order[pos[v]] = v;
    return order;
}

Order reverse_order(Order order) {
    std::reverse(order.begin(), order.end());
    return order;
}

// ---------------------------------------------------------------------------
// Tournament
// ---------------------------------------------------------------------------

Tournament::Tournament(uint32_t n) : n_(n), bits_((pair_count() + 63) / 64, 0) {
    if (n == 0) throw input_error("tournament needs at least one vertex");
}

void Tournament::set_low_to_high(uint32_t u, uint32_t v, bool value) {
    uint64_t idx = pair_index(u, v);
    uint64_t mask = 1ULL << (idx & 63);
    if (value) bits_[idx >> 6] |= mask;
    else bits_[idx >> 6] &= ~mask;
}

std::vector<Edge> Tournament::all_edges() const {
    std::vector<Edge> edges;
    edges.reserve(pair_count());
    for (uint32_t u = 0; u + 1 < n_; ++u)
        for (uint32_t v = u + 1; v < n_; ++v)
            edges.push_back(low_to_high(u, v) ? Edge{u, v} : Edge{v, u});
    return edges;
}

std::vector<uint32_t> Tournament::in_degrees() const {
    std::vector<uint32_t> deg(n_, 0);
    for (uint32_t u = 0; u + 1 < n_; ++u)
        for (uint32_t v = u + 1; v < n_; ++v)
            deg[low_to_high(u, v) ? v : u]++;
    return deg;
}

Tournament Tournament::from_order(const Order& order) {
    if (!is_permutation_of_n(order)) throw input_error("not a permutation");
    Tournament t((uint32_t)order.size());
    std::vector<uint32_t> pos = position_of(order);
    for (uint32_t u = 0; u + 1 < t.n_; ++u)
        for (uint32_t v = u + 1; v < t.n_; ++v)
            t.set_low_to_high(u, v, pos[u] < pos[v]);
    return t;
}

// ---------------------------------------------------------------------------
// Digraph
// ---------------------------------------------------------------------------

std::vector<std::vector<VertexId>> Digraph::out_adjacency() const {
    std::vector<std::vector<VertexId>> adj(n);
    for (const Edge& e : edges) adj[e.tail].push_back(e.head);
    return adj;
}

std::vector<std::vector<VertexId>> Digraph::in_adjacency() const {
    std::vector<std::vector<VertexId>> adj(n);
    for (const Edge& e : edges) adj[e.head].push_back(e.tail);
    return adj;
}

// ---------------------------------------------------------------------------
// Back edges and Kendall distance
// ---------------------------------------------------------------------------

static void check_order_size(size_t n, const Order& order) {
    if (order.size() != n) throw input_error("ordering size mismatch");
    if (!is_permutation_of_n(order)) throw input_error("ordering is not a permutation");
}

uint64_t count_back_edges(const Tournament& t, const Order& order) {
    check_order_size(t.n(), order);
    std::vector<uint32_t> pos = position_of(order);
    uint64_t count = 0;
    for (uint32_t u = 0; u + 1 < t.n(); ++u)
        for (uint32_t v = u + 1; v < t.n(); ++v) {
            // edge a->b is a back edge iff pos[b] < pos[a]
            if (t.low_to_high(u, v) ? pos[v] < pos[u] : pos[u] < pos[v]) count++;
        }
    return count;
}

uint64_t count_back_edges(const Digraph& g, const Order& order) {
    check_order_size(g.n, order);
    std::vector<uint32_t> pos = position_of(order);
    uint64_t count = 0;
    for (const Edge& e : g.edges)
        if (pos[e.head] < pos[e.tail]) count++;
    return count;
}

std::vector<Edge> back_edge_set(const Digraph& g, const Order& order) {
    check_order_size(g.n, order);
    std::vector<uint32_t> pos = position_of(order);
    std::vector<Edge> back;
    for (const Edge& e : g.edges)
        if (pos[e.head] < pos[e.tail]) back.push_back(e);
    return back;
}

std::vector<Edge> back_edge_set(const Tournament& t, const Order& order) {
    Digraph g{t.n(), t.all_edges()};
    return back_edge_set(g, order);
}

uint64_t kendall_distance(const Order& a, const Order& b) {
    if (a.size() != b.size()) throw input_error("ordering size mismatch");
    check_order_size(a.size(), a);
    check_order_size(b.size(), b);
    std::vector<uint32_t> pa = position_of(a), pb = position_of(b);
    uint64_t count = 0;
    uint32_t n = (uint32_t)a.size();
    for (uint32_t u = 0; u + 1 < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            if ((pa[u] < pa[v]) != (pb[u] < pb[v])) count++;
    return count;
}

// ---------------------------------------------------------------------------
// Acyclicity
// ---------------------------------------------------------------------------

bool is_acyclic_tournament(const Tournament& t) {
    std::vector<uint32_t> deg = t.in_degrees();
    std::vector<char> seen(t.n(), 0);
    for (uint32_t d : deg) {
        if (d >= t.n() || seen[d]) return false;
        seen[d] = 1;
    }
    return true; // multiset of in-degrees is exactly {0..n-1}
}

bool digraph_is_acyclic(const Digraph& g) {
    return topological_order(g).has_value();
}

std::optional<Order> topological_order(const Digraph& g) {
    std::vector<uint32_t> indeg(g.n, 0);
    auto adj = g.out_adjacency();
    for (const Edge& e : g.edges) indeg[e.head]++;
    std::vector<VertexId> ready;
    for (uint32_t v = 0; v < g.n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    Order order;
    order.reserve(g.n);
    while (!ready.empty()) {
        VertexId v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (VertexId w : adj[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    if (order.size() != g.n) return std::nullopt;
    return order;
}

// ---------------------------------------------------------------------------
// Exact minimum feedback arc set
// ---------------------------------------------------------------------------

static ExactFasResult exact_min_fas_masks(uint32_t n, const std::vector<uint64_t>& outmask,
                                          uint32_t cap) {
    if (n > cap) throw input_error("exact_min_fas: vertex count above cap");
    if (n > 25) throw input_error("exact_min_fas: vertex count too large for subset DP");
    size_t total = size_t{1} << n;
    std::vector<uint32_t> f(total, 0);
    std::vector<uint8_t> choice(total, 0);
    for (size_t s = 1; s < total; ++s) {
        uint32_t best = UINT32_MAX;
        uint8_t best_v = 0;
        uint64_t rest = s;
        while (rest) {
            uint32_t v = (uint32_t)std::countr_zero(rest);
            rest &= rest - 1;
            uint64_t without = s & ~(uint64_t{1} << v);
            // v placed last within s: its out-edges into the rest go backwards
            uint32_t cost = f[without] + (uint32_t)std::popcount(outmask[v] & without);
            if (cost < best) {
                best = cost;
                best_v = (uint8_t)v;
            }
        }
        f[s] = best;
        choice[s] = best_v;
    }
    ExactFasResult result;
    result.beta = f[total - 1];
    result.order.resize(n);
    uint64_t s = total - 1;
    for (uint32_t slot = n; slot-- > 0;) {
        uint8_t v = choice[s];
        result.order[slot] = v;
        s &= ~(uint64_t{1} << v);
    }
    return result;
}

ExactFasResult exact_min_fas(const Tournament& t, uint32_t cap) {
    std::vector<uint64_t> outmask(t.n(), 0);
    for (uint32_t u = 0; u + 1 < t.n(); ++u)
        for (uint32_t v = u + 1; v < t.n(); ++v) {
            if (t.low_to_high(u, v)) outmask[u] |= uint64_t{1} << v;
            else outmask[v] |= uint64_t{1} << u;
        }
    return exact_min_fas_masks(t.n(), outmask, cap);
}

ExactFasResult exact_min_fas(const Digraph& g, uint32_t cap) {
    std::vector<uint64_t> outmask(g.n, 0);
    for (const Edge& e : g.edges) outmask[e.tail] |= uint64_t{1} << e.head;
    return exact_min_fas_masks(g.n, outmask, cap);
}

ExactFasResult exact_min_fas_enumerate(const Digraph& g) {
    if (g.n > 10) throw input_error("exact_min_fas_enumerate: too many vertices");
    Order order(g.n);
    std::iota(order.begin(), order.end(), 0);
    ExactFasResult best;
    best.beta = UINT64_MAX;
    do {
        uint64_t cost = count_back_edges(g, order);
        if (cost < best.beta) {
            best.beta = cost;
            best.order = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

ExactFasResult exact_min_fas_enumerate(const Tournament& t) {
    Digraph g{t.n(), t.all_edges()};
    return exact_min_fas_enumerate(g);
}

// ---------------------------------------------------------------------------
// Degree "mediocrity"
// ---------------------------------------------------------------------------

double mediocre_in_fraction(const Tournament& t, double eps) {
    std::vector<uint32_t> deg = t.in_degrees();
    double n = (double)t.n();
    uint32_t good = 0;
    for (uint32_t d : deg)
        if ((double)d > eps * n && (double)d < (1.0 - eps) * n) good++;
    return (double)good / n;
}

double mediocre_out_fraction(const Tournament& t, double eps) {
    std::vector<uint32_t> deg = t.in_degrees();
    double n = (double)t.n();
    uint32_t good = 0;
    for (uint32_t d_in : deg) {
        uint32_t d = t.n() - 1 - d_in;
        if ((double)d > eps * n && (double)d < (1.0 - eps) * n) good++;
    }
    return (double)good / n;
}

} // namespace streamorder
