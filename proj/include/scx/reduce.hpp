#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scx/graph.hpp"

namespace scx {

// One contraction step: `removed` was merged into `into` (its unique
// predecessor or unique successor), in input-graph ids.
struct Contraction {
    enum class Kind { IntoPredecessor, IntoSuccessor };
    Kind kind;
    VertexId removed = kNoVertex;
    VertexId into = kNoVertex;
};

// The input DAG with every indegree-1 and outdegree-1 vertex contracted
// away, compacted to dense ids.
struct ReducedGraph {
    DirectedGraph dag;                           // parallel edges retained
    std::vector<std::vector<VertexId>> origin;   // reduced id -> sorted input ids
    std::uint32_t source_count = 0;              // indegree-0 vertices of dag
    std::uint32_t sink_count = 0;                // outdegree-0 vertices of dag
    bool has_multi_edge = false;                 // set by one final scan
    std::uint64_t edges_touched = 0;             // work counter, see below
    std::vector<Contraction> trace;
};

// Contracts to a fixpoint: while some live vertex has indegree exactly 1,
// splice its successor list into its unique predecessor and delete it;
// symmetrically for outdegree-1 vertices. Candidates are processed in
// ascending vertex id (a vertex with both degrees 1 is merged into its
// predecessor). Because eliminating one vertex can push a neighbor to
// degree 1, the worklist re-enqueues the surviving endpoint of each deleted
// edge and runs until no vertex qualifies; the two single passes alone
// would not reach the advertised fixpoint.
//
// Parallel edges arising during contraction are kept; has_multi_edge is set
// by one final scan. When it is false the result has no vertex of indegree
// or outdegree 1 and no parallel edges.
//
// edges_touched counts edge-record operations only (locate, unlink, splice,
// merge-chain hops, final-scan visits); it is O(m) in total and zero for
// edgeless inputs. Precondition validation scans are not counted.
//
// Requires an acyclic simple input (the condensation output); throws
// ContractError otherwise. Takes ownership of the input.
ReducedGraph reduce_degree_one(DirectedGraph dag);

// Test hook: applies only the first `max_contractions` steps of the same
// deterministic schedule and returns the surviving graph with its original
// ids (contracted vertices dead). Same preconditions.
DirectedGraph contract_prefix(DirectedGraph dag, std::size_t max_contractions);

// Recounts indegree-0 / outdegree-0 vertices of rg.dag. Matches
// (rg.source_count, rg.sink_count); (0, 0) for the empty graph.
std::pair<std::uint32_t, std::uint32_t> count_sources_sinks(const ReducedGraph& rg);

// Shared precondition check: throws ContractError unless the live part of g
// is acyclic and simple (no self-loops, no parallel edges).
void require_acyclic_simple(const DirectedGraph& g, const char* who);

}  // namespace scx
