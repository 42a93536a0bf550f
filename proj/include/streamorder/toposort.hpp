#pragma once

// Topological ordering from edge streams: the one-pass in-degree sorter for
// tournaments, two recoverers for DAGs with a planted Hamiltonian path (a
// pivot/closure scheme for denser instances, an in-degree window filter for
// sparse ones, and a density dispatcher), a transitive-reduction orderer for
// randomly ordered streams, and a bounded-hop s-t reachability tester.

#include "streamorder/graphcore.hpp"
#include "streamorder/streamgen.hpp"

#include <cstdint>
#include <optional>

namespace streamorder {

// One pass, n counters: a tournament is acyclic iff its in-degrees are a
// permutation of {0, ..., n-1}, and then ascending in-degree is the unique
// topological order. Returns nullopt for a cyclic tournament.
std::optional<Order> toposort_tournament_stream(EdgeStream& stream);
bool tournament_acyclic_onepass(EdgeStream& stream);

enum class PlantDagStatus {
    ok,
    unclassified,  // some pivot's closure left vertices unplaced
    phase_limit,   // refinement did not converge within the phase budget
    ambiguous,     // a stored subgraph had more than one topological order
};

const char* to_string(PlantDagStatus s);

struct PlantDagResult {
    PlantDagStatus status = PlantDagStatus::ok;
    Order order;                    // valid when status == ok
    uint32_t phases = 0;            // refinement phases run
    uint64_t max_unclassified = 0;  // largest per-pivot unclassified set
    uint64_t stored_edges_peak = 0;
};

// Denser planted instances (roughly q >= n^{-1/3}). Repeats three-pass
// phases: every block larger than max(2, q^-2) draws ceil(c_pivots * log2 n)
// random pivots; pass one records each pivot's in/out neighbors inside its
// block, passes two and three grow them by one hop each, and pass three also
// stores edges between the pivot's still-unclassified vertices. Closure along
// those stored edges finishes the before/after split and the pivots are
// applied in sequence. A final pass stores each small block's internal edges
// and topological sorting them (unique thanks to the planted chain) emits the
// order.
PlantDagResult toposort_plantdag_largeq(EdgeStream& stream, double q, uint64_t seed,
                                        double c_pivots = 4.0, uint32_t phase_limit = 32);

// Sparser planted instances: pass one takes in-degrees, pass two keeps only
// edges whose endpoint in-degrees differ by at most 3 * sqrt(c_window * n * q
// * ln n), and the retained subgraph is topologically sorted (unique thanks
// to the planted chain).
PlantDagResult toposort_plantdag_smallq(EdgeStream& stream, double q, double c_window = 4.0);

// Density dispatcher: largeq when q >= n^{-1/3}, smallq otherwise.
PlantDagResult toposort_plantdag(EdgeStream& stream, double q, uint64_t seed);

struct TransReduceResult {
    bool ok = false;       // retained graph ended as a single Hamiltonian path
    Order order;           // valid when ok
    uint64_t stored_edges_peak = 0;
};

// One pass over a randomly ordered DAG stream that maintains a
// transitively-irreducible retained subgraph: an arriving edge is dropped if
// already implied, otherwise inserted, and insertion evicts every retained
// edge it makes redundant (tail among the new tail's ancestors, head among
// the new head's descendants). For a DAG whose reduction is a Hamiltonian
// path the retained graph converges to that path, which is the order.
TransReduceResult transitive_reduction_order(EdgeStream& stream);

// p passes over a (usually per-pass reshuffled) DAG stream, relaxing
// distance-from-source and distance-to-target labels one edge at a time;
// reports true as soon as an edge certifies a source-to-target path of
// length at most 2p + 2. One-sided: a true answer is always correct.
bool shortpath_within(EdgeStream& stream, VertexId source, VertexId target, uint32_t passes);

} // namespace streamorder
