#pragma once

#include <vector>

#include "scx/graph.hpp"

namespace scx {

// Strongly connected components of the live part of g.
//
// Component ids are assigned in completion order of an iterative Tarjan
// run with roots scanned in ascending vertex id and successors taken in
// list order. That order is a reverse topological order of the component
// graph: every inter-component edge goes from a higher component id to a
// lower one. Member lists are sorted ascending. Both facts are fixed and
// relied on by callers.
struct SccResult {
    std::vector<VertexId> component_of;            // kNoVertex for dead vertices
    std::vector<std::vector<VertexId>> members;    // component id -> sorted vertices
};

SccResult strongly_connected_components(const DirectedGraph& g);

}  // namespace scx
