#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scx/errors.hpp"

namespace scx {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = 0xffffffffu;
inline constexpr EdgeId kNoEdge = 0xffffffffu;

// Mutable directed multigraph over dense integer vertex ids.
//
// Parallel edges and self-loops are first-class: indegree/outdegree count
// multiplicity, and nothing deduplicates edges. Adjacency is stored as
// circular doubly-linked lists of edge records threaded through per-vertex
// sentinels, one list for successors and one for predecessors, so that
//   - deleting an edge is O(1),
//   - splicing one vertex's whole successor (or predecessor) list into
//     another's is O(1).
// Deleting a vertex marks a liveness flag; ids stay stable until compact().
//
// The splice operations move edges between lists WITHOUT rewriting the
// stored tail/head fields of the moved edges, so after a splice the stored
// endpoints of moved edges are no longer authoritative; callers that splice
// (the degree-1 contraction) must track merges themselves. Every other
// mutation keeps stored endpoints exact.
//
// Concurrency: a graph is a single-writer value. Once construction and
// mutation are done it may be read from any number of threads.
class DirectedGraph {
public:
    DirectedGraph() = default;
    explicit DirectedGraph(std::size_t vertex_count);

    VertexId add_vertex();
    EdgeId add_edge(VertexId tail, VertexId head);

    // Total ids ever allocated (live and dead).
    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t live_vertex_count() const { return live_vertices_; }
    // Live edges.
    std::size_t edge_count() const { return live_edges_; }
    std::size_t edge_record_count() const { return edges_.size(); }

    bool vertex_alive(VertexId v) const { return verts_[v].alive; }
    bool edge_alive(EdgeId e) const { return edges_[e].alive; }

    std::uint32_t outdegree(VertexId v) const { return verts_[v].outdeg; }
    std::uint32_t indegree(VertexId v) const { return verts_[v].indeg; }

    // Stored endpoint fields. Exact unless the edge was moved by a splice.
    VertexId edge_tail(EdgeId e) const { return edges_[e].tail; }
    VertexId edge_head(EdgeId e) const { return edges_[e].head; }

    // Successor/predecessor list traversal. first_* returns kNoEdge when the
    // list is empty; next_* returns kNoEdge after the last element. Order is
    // insertion order, with spliced runs appended at the end.
    EdgeId first_out(VertexId v) const { return deref(verts_[v].out_next); }
    EdgeId next_out(EdgeId e) const { return deref(out_next_[e]); }
    EdgeId first_in(VertexId v) const { return deref(verts_[v].in_next); }
    EdgeId next_in(EdgeId e) const { return deref(in_next_[e]); }

    template <typename F>
    void for_each_out_edge(VertexId v, F&& f) const {
        for (EdgeId e = first_out(v); e != kNoEdge; e = next_out(e)) f(e);
    }
    template <typename F>
    void for_each_in_edge(VertexId v, F&& f) const {
        for (EdgeId e = first_in(v); e != kNoEdge; e = next_in(e)) f(e);
    }

    // Deletes an edge whose stored endpoints are authoritative.
    void delete_edge(EdgeId e);
    // Deletes an edge given the vertices whose lists currently hold it
    // (required after splices have moved it).
    void delete_edge(EdgeId e, VertexId out_owner, VertexId in_owner);

    // Marks a vertex dead. The vertex must have no incident live edges.
    void delete_vertex(VertexId v);

    // Moves every edge of `from`'s successor list to the end of `into`'s in
    // O(1) and transfers the outdegree. Stored tails are not rewritten.
    void splice_out_edges(VertexId from, VertexId into);
    // Same for predecessor lists / indegree / stored heads.
    void splice_in_edges(VertexId from, VertexId into);

    // Rebuilds a dense graph from the live vertices and edges, plus the
    // old-id -> new-id map (kNoVertex for dead vertices). Requires stored
    // endpoints to be authoritative (no splice has happened).
    std::pair<DirectedGraph, std::vector<VertexId>> compact() const;

private:
    // Link values address either an edge (plain id) or the sentinel of a
    // vertex (id | kSentinel).
    static constexpr std::uint32_t kSentinel = 0x80000000u;

    struct VertexRec {
        std::uint32_t out_next, out_prev, in_next, in_prev;
        std::uint32_t outdeg = 0, indeg = 0;
        bool alive = true;
    };
    struct EdgeRec {
        VertexId tail, head;
        bool alive = true;
    };

    EdgeId deref(std::uint32_t link) const {
        return (link & kSentinel) ? kNoEdge : link;
    }

    std::uint32_t& next_ref(bool out, std::uint32_t node) {
        if (node & kSentinel) {
            VertexRec& vr = verts_[node & ~kSentinel];
            return out ? vr.out_next : vr.in_next;
        }
        return out ? out_next_[node] : in_next_[node];
    }
    std::uint32_t& prev_ref(bool out, std::uint32_t node) {
        if (node & kSentinel) {
            VertexRec& vr = verts_[node & ~kSentinel];
            return out ? vr.out_prev : vr.in_prev;
        }
        return out ? out_prev_[node] : in_prev_[node];
    }

    void unlink(bool out, EdgeId e);
    void append(bool out, VertexId v, EdgeId e);
    void splice(bool out, VertexId from, VertexId into);

    std::vector<VertexRec> verts_;
    std::vector<EdgeRec> edges_;
    std::vector<std::uint32_t> out_next_, out_prev_, in_next_, in_prev_;
    std::size_t live_vertices_ = 0;
    std::size_t live_edges_ = 0;
};

// Simple undirected graph: no self-loops, no duplicate edges. Edges are
// stored normalized as (min, max) in insertion order.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(std::size_t vertex_count) : n_(vertex_count) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    bool has_edge(VertexId a, VertexId b) const;
    // Throws ContractError on self-loops, duplicates, or out-of-range ids.
    void add_edge(VertexId a, VertexId b);

private:
    std::size_t n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

// New graph with every live edge (u,v) turned into (v,u). Vertex liveness is
// preserved. Applying it twice restores the original edge multiset.
DirectedGraph reverse(const DirectedGraph& g);

// Sorted multiset of live (tail, head) pairs; the canonical form used to
// compare graphs structurally. Stored endpoints must be authoritative.
std::vector<std::pair<VertexId, VertexId>> edge_multiset(const DirectedGraph& g);

}  // namespace scx
