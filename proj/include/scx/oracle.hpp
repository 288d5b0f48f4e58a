#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scx/graph.hpp"

namespace scx {

// Saturating path/cycle tally: the decision problem never needs more than
// "two or more".
enum class PathCount { Zero, One, TwoOrMore };

// Exhaustive backtracking count of simple paths from `from` to `to`,
// treating parallel edges as distinct paths, halting at 2. Exponential in
// the worst case; refuses graphs with more than `guard` live vertices.
// Requires from != to.
PathCount count_simple_paths_capped(const DirectedGraph& g, VertexId from, VertexId to,
                                    std::size_t guard = 16);

// Number of simple cycles through v, capped at 2. A self-loop is a cycle of
// length 1; parallel edges give distinct cycles.
PathCount count_simple_cycles_through_capped(const DirectedGraph& g, VertexId v,
                                             std::size_t guard = 16);

// Two distinct witnesses against single connectedness, as explicit vertex
// sequences. For a path witness both run from `from` to `to`; for a cycle
// witness both start and end at `from`. Two parallel edges produce two
// witnesses with identical vertex sequences.
struct OracleWitness {
    bool is_cycle = false;
    VertexId from = kNoVertex, to = kNoVertex;
    std::vector<VertexId> path_a, path_b;
};

struct OracleVerdict {
    bool singly_connected = true;
    std::optional<OracleWitness> witness;
};

// Definition-level decision: true iff every ordered pair of distinct live
// vertices has at most one simple path and every vertex lies on at most one
// simple cycle. Enumerates paths per start vertex in breadth-first order
// with saturating per-endpoint counters, so the work is polynomial: if no
// counter reaches 2, a start vertex spawns fewer than n paths. The first
// counter to reach 2 (ascending start vertex, then discovery order) fixes
// the witness deterministically.
OracleVerdict oracle_singly_connected(const DirectedGraph& g, std::size_t guard = 16);

}  // namespace scx
