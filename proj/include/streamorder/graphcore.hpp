#pragma once

// Core combinatorial types: vertices, edges, orderings, tournaments, general
// digraphs, plus the exact primitives everything else is checked against
// (back-edge counting, Kendall distance, in-degree acyclicity test, exact
// minimum feedback arc set by subset DP and by brute-force enumeration).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace streamorder {

using VertexId = uint32_t;

struct Edge {
    VertexId tail = 0; // edge direction tail -> head
    VertexId head = 0;
    friend bool operator==(const Edge& a, const Edge& b) {
        return a.tail == b.tail && a.head == b.head;
    }
};

// An ordering is a permutation of {0..n-1} given as the sequence of vertices:
// order[i] = vertex at position i. position_of() gives the inverse view
// (vertex -> rank), which is what the back-edge definition consumes.
using Order = std::vector<VertexId>;

bool is_permutation_of_n(const Order& order);
std::vector<uint32_t> position_of(const Order& order); // pos[v] = rank of v
Order order_from_positions(const std::vector<uint32_t>& pos);
Order reverse_order(Order order);

// ---------------------------------------------------------------------------
// Tournament: one directed edge per unordered pair, stored as packed bits
// over the pair index (u < v); bit set means u -> v.
// ---------------------------------------------------------------------------

class Tournament {
public:
    Tournament() = default;
    explicit Tournament(uint32_t n);

    uint32_t n() const { return n_; }
    uint64_t pair_count() const { return (uint64_t)n_ * (n_ - 1) / 2; }

    // Dense layout shared with the sketch vector indexing.
    static uint64_t pair_index(uint32_t u, uint32_t v, uint32_t n) {
        // requires u < v < n
        return (uint64_t)u * n - (uint64_t)u * (u + 1) / 2 + (v - u - 1);
    }
    uint64_t pair_index(uint32_t u, uint32_t v) const { return pair_index(u, v, n_); }

    bool low_to_high(uint32_t u, uint32_t v) const { // u < v; true iff u -> v
        uint64_t idx = pair_index(u, v);
        return (bits_[idx >> 6] >> (idx & 63)) & 1u;
    }
    void set_low_to_high(uint32_t u, uint32_t v, bool value);

    bool has_edge(uint32_t tail, uint32_t head) const {
        if (tail < head) return low_to_high(tail, head);
        return !low_to_high(head, tail);
    }

    std::vector<Edge> all_edges() const; // ascending pair-index order
    std::vector<uint32_t> in_degrees() const;

    // The acyclic tournament whose topological order is `order`:
    // u -> v iff u precedes v.
    static Tournament from_order(const Order& order);

    const std::vector<uint64_t>& raw_bits() const { return bits_; }
    std::vector<uint64_t>& raw_bits() { return bits_; }

private:
    uint32_t n_ = 0;
    std::vector<uint64_t> bits_;
};

// ---------------------------------------------------------------------------
// General digraph: vertex count + edge list (no self-loops, no duplicates).
// ---------------------------------------------------------------------------

struct Digraph {
    uint32_t n = 0;
    std::vector<Edge> edges;

    std::vector<std::vector<VertexId>> out_adjacency() const;
    std::vector<std::vector<VertexId>> in_adjacency() const;
};

// ---------------------------------------------------------------------------
// Exact primitives.
// ---------------------------------------------------------------------------

// Back edges of `order`: edges whose head precedes its tail.
uint64_t count_back_edges(const Tournament& t, const Order& order);
uint64_t count_back_edges(const Digraph& g, const Order& order);
std::vector<Edge> back_edge_set(const Digraph& g, const Order& order);
std::vector<Edge> back_edge_set(const Tournament& t, const Order& order);

// Number of vertex pairs the two orderings rank oppositely.
uint64_t kendall_distance(const Order& a, const Order& b);

// A tournament is acyclic iff its in-degree multiset is exactly {0..n-1}.
bool is_acyclic_tournament(const Tournament& t);

// DFS-based cycle test, the independent oracle for the in-degree test.
bool digraph_is_acyclic(const Digraph& g);
std::optional<Order> topological_order(const Digraph& g); // Kahn; nullopt on cycle

// Exact minimum feedback arc set over all orderings, by subset DP:
// f(S) = min over v in S of f(S \ v) + |{u in S \ v : (v,u) in E}| (v last).
// O(2^n * n) time with per-vertex out-masks; capped because of that blow-up.
struct ExactFasResult {
    uint64_t beta = 0;
    Order order; // attains beta
};
inline constexpr uint32_t kExactFasDefaultCap = 20;
ExactFasResult exact_min_fas(const Tournament& t, uint32_t cap = kExactFasDefaultCap);
ExactFasResult exact_min_fas(const Digraph& g, uint32_t cap = kExactFasDefaultCap);

// Brute force over all n! orderings; cross-check oracle for the DP.
ExactFasResult exact_min_fas_enumerate(const Digraph& g);
ExactFasResult exact_min_fas_enumerate(const Tournament& t);

// Fraction of vertices whose in-degree lies strictly inside (eps*n, (1-eps)*n);
// same for out-degree. Every tournament satisfies fraction >= 1 - 4*eps.
double mediocre_in_fraction(const Tournament& t, double eps);
double mediocre_out_fraction(const Tournament& t, double eps);

struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace streamorder
