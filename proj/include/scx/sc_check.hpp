#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "scx/condense.hpp"
#include "scx/graph.hpp"
#include "scx/reduce.hpp"

namespace scx {

// Monotone tallies of work actually performed, never estimates. These are
// the currency of every complexity claim: wall time is reported elsewhere
// but never asserted.
struct WorkCounters {
    std::uint64_t dfs_vertex_visits = 0;
    std::uint64_t dfs_edge_explorations = 0;
    std::uint64_t reduction_edges_touched = 0;
    std::uint64_t sources_processed = 0;

    std::uint64_t total() const {
        return dfs_vertex_visits + dfs_edge_explorations + reduction_edges_touched +
               sources_processed;
    }
};

enum class WitnessKind {
    NonCycleScc,
    ParallelCondensationEdges,
    MultiEdgeAfterReduction,
    ConvergingDfsPaths,
};

// Two parallel edges survived the degree-1 contraction, connecting this
// ordered pair of reduced vertices.
struct MultiEdgeAfterReduction {
    VertexId tail = kNoVertex, head = kNoVertex;
};

// A source-rooted DFS reached `meet` twice: path_a is the tree path to the
// exploring vertex extended by the offending edge, path_b the tree path to
// `meet`. Both are simple paths from `source` to `meet` in reduced
// coordinates and differ in their final edge.
struct ConvergingDfsPaths {
    VertexId source = kNoVertex, meet = kNoVertex;
    std::vector<VertexId> path_a, path_b;
};

// Certificate of non-single-connectedness. NonCycleScc and
// ParallelCondensationEdges speak original-graph coordinates; the other two
// speak reduced-graph coordinates and carry origin_map (reduced id ->
// sorted original vertex set) for translation. Full lifting of reduced
// witnesses to original-graph paths is out of scope.
struct NotScWitness {
    std::variant<NonCycleScc, ParallelCondensationEdges, MultiEdgeAfterReduction,
                 ConvergingDfsPaths>
        detail;
    std::vector<std::vector<VertexId>> origin_map;

    WitnessKind kind() const { return static_cast<WitnessKind>(detail.index()); }
};

struct ScVerdict {
    bool singly_connected = true;
    std::optional<NotScWitness> witness;
    WorkCounters counters;
    // Sources/sinks of the reduced graph (0 before reduction happens) and
    // the live edge count of the checked input; c * (s*t + m) bounds
    // counters.total().
    std::uint32_t source_count = 0;
    std::uint32_t sink_count = 0;
    std::uint64_t input_edge_count = 0;
    // Vertices discovered by each source DFS, in source order.
    std::vector<std::uint32_t> per_source_visits;
};

// One DFS per source of rg.dag (ascending id, successors in list order),
// aborting the instant an explored edge reaches a vertex already visited in
// the current DFS. Visited marks are epoch stamps, so nothing is cleared
// between sources. Requires rg.has_multi_edge == false and a dag that is
// acyclic, simple and free of degree-1 vertices (throws ContractError).
ScVerdict sources_dfs_check(const ReducedGraph& rg);

// Full decision for an arbitrary directed multigraph: condensation stage
// (early rejects), degree-1 contraction (multi-edge reject), then the
// source DFS sweep, with merged counters and witnesses translated to
// original coordinates via origin_map.
ScVerdict is_singly_connected(const DirectedGraph& g);

// Baseline: a DFS from every live vertex of an acyclic input, rejecting on
// any forward or cross edge. Same verdict as the refined check on equal
// inputs; counters record the quadratic work for comparison.
ScVerdict naive_quadratic_check(const DirectedGraph& dag);

// Re-derives a witness's claim from the original graph alone: degree facts
// for NonCycleScc, edge pairs for ParallelCondensationEdges, >= 2 edges
// between the origin classes for MultiEdgeAfterReduction, and edge-by-edge
// existence, simplicity and a distinct final hop for ConvergingDfsPaths.
// Used by every printing path and by the test suites.
bool validate_witness(const DirectedGraph& original, const ScVerdict& verdict);

}  // namespace scx
