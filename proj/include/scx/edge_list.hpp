#pragma once

#include <iosfwd>
#include <string>

#include "scx/graph.hpp"

namespace scx {

// Edge-list text format:
//   - lines starting with '#' are comments and may appear anywhere,
//   - the first non-comment line is the header "n m",
//   - followed by exactly m non-comment lines "u v" with 0 <= u,v < n.
// Anything after the m-th edge line is ignored, which lets sidecar data
// (mappings, annotations) ride in the same stream. Parse failures raise
// ParseError with the offending 1-based line number.
DirectedGraph parse_directed_edge_list(std::istream& in);

// Same format read as an undirected simple graph: "u v" means {u, v};
// self-loops and duplicate edges are rejected with their line number.
UndirectedGraph parse_undirected_edge_list(std::istream& in);

// Canonical writer: header "n m", then one "u v" line per live edge,
// ascending tail and list order within a tail, single spaces, LF endings.
// Parsing the output reproduces the edge multiset exactly.
std::string serialize_edge_list(const DirectedGraph& g);
std::string serialize_edge_list(const UndirectedGraph& g);

}  // namespace scx
