#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "scx/graph.hpp"
#include "scx/scc.hpp"

namespace scx {

// The component graph of g after contracting every strongly connected
// component: a simple DAG whose vertex ids are the component ids of
// strongly_connected_components (so every dag edge goes from a higher id to
// a lower one). Dag edges appear in the order of the original edges that
// induced them.
struct Condensation {
    DirectedGraph dag;
    std::vector<VertexId> component_of;          // original vertex -> component
    std::vector<std::vector<VertexId>> members;  // component -> sorted originals
};

// Some component with >= 2 vertices (or with two self-loops) is not a
// single directed cycle: `vertex` has within-component indegree or
// outdegree >= 2. Any such component already carries two distinct paths.
struct NonCycleScc {
    VertexId component = kNoVertex;
    VertexId vertex = kNoVertex;
    std::uint32_t internal_indegree = 0;
    std::uint32_t internal_outdegree = 0;
};

// Two distinct original edges connect the same ordered pair of distinct
// components; given as (tail, head) pairs of the original graph.
struct ParallelCondensationEdges {
    VertexId comp_tail = kNoVertex, comp_head = kNoVertex;
    std::array<std::pair<VertexId, VertexId>, 2> original_edges;
};

using CondenseResult = std::variant<Condensation, NonCycleScc, ParallelCondensationEdges>;

// Contracts strongly connected components, rejecting as soon as the input
// is provably not singly-connected at this stage. Checks components in
// ascending id (members in ascending order, indegree before outdegree),
// then scans original edges in insertion order for parallel condensation
// edges, so the returned reject is deterministic.
//
// Convention: pairs (v, v) are judged by "at most one simple cycle through
// v". A single self-loop therefore forms a valid cycle component of length
// 1; two self-loops reject.
CondenseResult condense(const DirectedGraph& g);

}  // namespace scx
