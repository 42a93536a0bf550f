#include "streamorder/streamgen.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace streamorder {

// ---------------------------------------------------------------------------
// EdgeStream
// ---------------------------------------------------------------------------

EdgeStream::EdgeStream(std::vector<Edge> edges, uint32_t n, StreamOrder policy,
                       uint64_t seed, uint32_t pass_budget)
    : edges_(std::move(edges)), n_(n), policy_(policy), rng_(seed),
      pass_budget_(pass_budget) {
    if (pass_budget == 0) throw stream_error("pass budget must be at least 1");
    if (policy_ == StreamOrder::FixedShuffle) shuffle_vec(edges_, rng_);
}

void EdgeStream::begin_pass() {
    if (meter_.passes_used() >= pass_budget_)
        throw stream_error("pass budget exhausted");
    if (policy_ == StreamOrder::PerPassShuffle) shuffle_vec(edges_, rng_);
    meter_.note_pass();
    cursor_ = 0;
    in_pass_ = true;
}

bool EdgeStream::next_edge(Edge& out) {
    if (!in_pass_) throw stream_error("next_edge before begin_pass");
    if (cursor_ >= edges_.size()) {
        in_pass_ = false;
        return false;
    }
    out = edges_[cursor_++];
    return true;
}

EdgeStream stream_of(const Digraph& g, StreamOrder policy, uint32_t pass_budget,
                     uint64_t seed) {
    return EdgeStream(g.edges, g.n, policy, seed, pass_budget);
}

EdgeStream stream_of(const Tournament& t, StreamOrder policy, uint32_t pass_budget,
                     uint64_t seed) {
    return EdgeStream(t.all_edges(), t.n(), policy, seed, pass_budget);
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

HiddenOrderTournament gen_random_acyclic_tournament(uint32_t n, uint64_t seed) {
    Rng rng(seed);
    HiddenOrderTournament out;
    out.hidden_order = random_permutation(n, rng);
    out.tournament = Tournament::from_order(out.hidden_order);
    return out;
}

Tournament gen_coin_tournament(uint32_t n, uint64_t seed) {
    Tournament t(n);
    Rng rng(seed);
    // Fill whole words at a time, then zero the tail so raw-bit equality
    // coincides with tournament equality.
    for (uint64_t& w : t.raw_bits()) w = rng.next_u64();
    uint64_t tail = t.pair_count() % 64;
    if (tail != 0 && !t.raw_bits().empty()) t.raw_bits().back() &= (1ULL << tail) - 1;
    return t;
}

PlantedInstance gen_plantdag(uint32_t n, double q, uint64_t seed) {
    if (n < 2) throw input_error("planted DAG needs at least two vertices");
    if (q < 0.0 || q > 1.0) throw input_error("edge probability must lie in [0,1]");
    Rng rng(seed);
    PlantedInstance inst;
    inst.q = q;
    inst.hidden_order = random_permutation(n, rng);
    inst.graph.n = n;
    for (uint32_t i = 0; i + 1 < n; ++i)
        inst.graph.edges.push_back({inst.hidden_order[i], inst.hidden_order[i + 1]});
    for (uint32_t i = 0; i + 2 < n; ++i)
        for (uint32_t j = i + 2; j < n; ++j)
            if (rng.unit_open() < q)
                inst.graph.edges.push_back({inst.hidden_order[i], inst.hidden_order[j]});
    return inst;
}

// ---------------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------------

void write_edge_list(std::ostream& os, const Digraph& g, const Order* hidden_order) {
    os << g.n << ' ' << g.edges.size() << '\n';
    for (const Edge& e : g.edges) os << e.tail << ' ' << e.head << '\n';
    if (hidden_order) {
        os << "# order";
        for (VertexId v : *hidden_order) os << ' ' << v;
        os << '\n';
    }
}

LoadedInstance read_edge_list(std::istream& is) {
    LoadedInstance out;
    std::string line;
    uint64_t declared = 0;
    if (!std::getline(is, line)) throw input_error("empty edge-list input");
    {
        std::istringstream header(line);
        if (!(header >> out.graph.n >> declared)) throw input_error("bad edge-list header");
        out.graph.edges.reserve(declared);
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream comment(line.substr(1));
            std::string tag;
            comment >> tag;
            if (tag == "order") {
                Order order;
                uint32_t v;
                while (comment >> v) order.push_back(v);
                if (order.size() != out.graph.n || !is_permutation_of_n(order))
                    throw input_error("bad planted-order comment");
                out.hidden_order = std::move(order);
            }
            continue;
        }
        std::istringstream row(line);
        Edge e;
        if (!(row >> e.tail >> e.head)) throw input_error("bad edge line: " + line);
        if (e.tail == e.head || e.tail >= out.graph.n || e.head >= out.graph.n)
            throw input_error("edge endpoints out of range: " + line);
        out.graph.edges.push_back(e);
    }
    if (out.graph.edges.size() != declared)
        throw input_error("edge count does not match the declared m");
    return out;
}

Tournament tournament_from_digraph(const Digraph& g) {
    Tournament t(g.n);
    std::vector<char> seen((size_t)t.pair_count(), 0);
    for (const Edge& e : g.edges) {
        uint32_t u = std::min(e.tail, e.head), v = std::max(e.tail, e.head);
        uint64_t idx = t.pair_index(u, v);
        if (seen[idx]) throw promise_error("duplicated pair in claimed tournament");
        seen[idx] = 1;
        t.set_low_to_high(u, v, e.tail < e.head);
    }
    for (char s : seen)
        if (!s) throw promise_error("missing pair in claimed tournament");
    return t;
}

} // namespace streamorder
