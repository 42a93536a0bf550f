#pragma once

// Instance generators and the metered multi-pass edge-stream engine that all
// streaming algorithms consume. A stream replays its edge sequence pass by
// pass under one of three order policies; the attached SpaceMeter tracks what
// an algorithm chose to keep and how many passes it burned.

#include "streamorder/graphcore.hpp"
#include "streamorder/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace streamorder {

struct stream_error : std::runtime_error {
    explicit stream_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an input violates an algorithm's promise (e.g. a claimed
// tournament stream with a duplicated pair).
struct promise_error : std::runtime_error {
    explicit promise_error(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// SpaceMeter: stored items are counted in "words" (one edge = one item, one
// sketch coordinate = one word); peaks are monotone.
// ---------------------------------------------------------------------------

class SpaceMeter {
public:
    void add_edges(uint64_t k) {
        edges_now_ += k;
        if (edges_now_ > stored_edges_peak_) stored_edges_peak_ = edges_now_;
    }
    void remove_edges(uint64_t k) { edges_now_ -= k; }
    void clear_edges() { edges_now_ = 0; }

    void add_aux(uint64_t words) {
        aux_now_ += words;
        if (aux_now_ > aux_words_) aux_words_ = aux_now_;
    }
    void remove_aux(uint64_t words) { aux_now_ -= words; }

    void set_sketch_words(uint64_t words) { sketch_words_ = words; }
    void note_pass() { passes_used_++; }

    uint64_t stored_edges_now() const { return edges_now_; }
    uint64_t stored_edges_peak() const { return stored_edges_peak_; }
    uint64_t sketch_words() const { return sketch_words_; }
    uint64_t aux_words() const { return aux_words_; } // peak auxiliary words
    uint32_t passes_used() const { return passes_used_; }

    // Peak of everything the algorithm held at once, in items.
    uint64_t total_items_peak() const {
        uint64_t peak = stored_edges_peak_ + sketch_words_ + aux_words_;
        return peak;
    }

private:
    uint64_t edges_now_ = 0;
    uint64_t stored_edges_peak_ = 0;
    uint64_t sketch_words_ = 0;
    uint64_t aux_now_ = 0;
    uint64_t aux_words_ = 0;
    uint32_t passes_used_ = 0;
};

// ---------------------------------------------------------------------------
// EdgeStream
// ---------------------------------------------------------------------------

enum class StreamOrder {
    AsGiven,         // same sequence every pass
    FixedShuffle,    // one seeded shuffle at construction, replayed every pass
    PerPassShuffle,  // independent seeded shuffle at every begin_pass
};

class EdgeStream {
public:
    EdgeStream(std::vector<Edge> edges, uint32_t n, StreamOrder policy,
               uint64_t seed, uint32_t pass_budget);

    uint32_t n() const { return n_; }
    uint64_t m() const { return edges_.size(); }
    uint32_t pass_budget() const { return pass_budget_; }

    void begin_pass(); // throws stream_error once the budget is exhausted
    bool next_edge(Edge& out); // false at end of pass
    bool in_pass() const { return in_pass_; }

    SpaceMeter& meter() { return meter_; }
    const SpaceMeter& meter() const { return meter_; }

private:
    std::vector<Edge> edges_;
    uint32_t n_;
    StreamOrder policy_;
    Rng rng_;
    uint32_t pass_budget_;
    SpaceMeter meter_;
    uint64_t cursor_ = 0;
    bool in_pass_ = false;
};

EdgeStream stream_of(const Digraph& g, StreamOrder policy, uint32_t pass_budget,
                     uint64_t seed);
EdgeStream stream_of(const Tournament& t, StreamOrder policy, uint32_t pass_budget,
                     uint64_t seed);

// ---------------------------------------------------------------------------
// Generators (pure functions of parameters + seed)
// ---------------------------------------------------------------------------

// Acyclic tournament consistent with a uniformly random hidden order.
struct HiddenOrderTournament {
    Tournament tournament;
    Order hidden_order;
};
HiddenOrderTournament gen_random_acyclic_tournament(uint32_t n, uint64_t seed);

// Every pair oriented by an independent fair coin.
Tournament gen_coin_tournament(uint32_t n, uint64_t seed);

// Random DAG with a planted Hamiltonian path: pick a hidden order pi, keep the
// n-1 consecutive edges always, keep every other forward pair independently
// with probability q.
struct PlantedInstance {
    Digraph graph;
    Order hidden_order;
    double q = 0.0;
};
PlantedInstance gen_plantdag(uint32_t n, double q, uint64_t seed);

// ---------------------------------------------------------------------------
// Edge-list file format: line 1 "n m", then m lines "tail head"; instances
// with a planted order append a final comment "# order v0 v1 ...".
// ---------------------------------------------------------------------------

void write_edge_list(std::ostream& os, const Digraph& g, const Order* hidden_order);
struct LoadedInstance {
    Digraph graph;
    std::optional<Order> hidden_order;
};
LoadedInstance read_edge_list(std::istream& is);

// Interprets a digraph as a tournament; throws promise_error on a missing or
// duplicated pair.
Tournament tournament_from_digraph(const Digraph& g);

} // namespace streamorder
