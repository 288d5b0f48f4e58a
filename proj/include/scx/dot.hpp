#pragma once

#include <map>
#include <string>

#include "scx/graph.hpp"

namespace scx {

// Renders the graph in DOT syntax. One edge statement per live edge instance
// (parallel edges repeat), ascending tail then list order. Vertices present
// in `labels` get a node statement with that label; isolated live vertices
// always get a bare node statement so they stay visible.
std::string to_dot(const DirectedGraph& g,
                   const std::map<VertexId, std::string>* labels = nullptr);

}  // namespace scx
