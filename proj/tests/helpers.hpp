#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "scx/generators.hpp"
#include "scx/graph.hpp"

namespace scx::test {

inline DirectedGraph build(std::size_t n,
                           std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    DirectedGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline UndirectedGraph build_undirected(
    std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    UndirectedGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// The running example DAG: 8 vertices, 10 edges, two ways from 0 to 7
// (directly and through 1), so contraction ends with a parallel pair.
inline DirectedGraph sample_dag() {
    return build(8, {{0, 1},
                     {1, 2},
                     {3, 1},
                     {2, 4},
                     {3, 6},
                     {2, 5},
                     {6, 5},
                     {7, 4},
                     {0, 7},
                     {1, 7}});
}

// sample_dag() after merging vertex 2 into vertex 1: 7 live vertices,
// 9 edges.
inline DirectedGraph sample_dag_contracted_once() {
    DirectedGraph g = build(8, {{0, 1},
                                {3, 1},
                                {1, 4},
                                {3, 6},
                                {1, 5},
                                {6, 5},
                                {7, 4},
                                {0, 7},
                                {1, 7}});
    g.delete_vertex(2);
    return g;
}

// The 4-cycle v0-v1-v3-v2-v0 used by the gadget examples; minimum vertex
// cover size 2.
inline UndirectedGraph cycle4_undirected() {
    return build_undirected(4, {{0, 1}, {1, 3}, {2, 3}, {0, 2}});
}

// All digraphs on n vertices with 0/1 adjacency including self-loops,
// enumerated as the 2^(n^2) bit patterns.
template <typename F>
void for_each_binary_digraph(std::size_t n, F&& fn) {
    const std::size_t bits = n * n;
    for (std::uint64_t code = 0; code < (1ull << bits); ++code) {
        DirectedGraph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (code & (1ull << (i * n + j)))
                    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
        fn(g);
    }
}

// All digraphs on n vertices with per-pair multiplicity 0, 1 or 2
// (self-loops included): 3^(n^2) graphs.
template <typename F>
void for_each_ternary_digraph(std::size_t n, F&& fn) {
    const std::size_t cells = n * n;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        DirectedGraph g(n);
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                int mult = static_cast<int>(c % 3);
                c /= 3;
                for (int k = 0; k < mult; ++k)
                    g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
            }
        fn(g);
    }
}

// All labeled DAGs on n vertices: every off-diagonal 0/1 adjacency pattern
// filtered by acyclicity (the filter lives in the caller's hands via the
// returned flag to keep this enumerator dumb).
template <typename F>
void for_each_labeled_dag(std::size_t n, F&& fn) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) pairs.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    for (std::uint64_t code = 0; code < (1ull << pairs.size()); ++code) {
        DirectedGraph g(n);
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (code & (1ull << b)) g.add_edge(pairs[b].first, pairs[b].second);
        // cheap acyclicity filter: count peelable vertices
        std::vector<std::uint32_t> indeg(n);
        std::vector<VertexId> ready;
        std::size_t seen = 0;
        for (VertexId v = 0; v < n; ++v) {
            indeg[v] = g.indegree(v);
            if (indeg[v] == 0) ready.push_back(v);
        }
        while (!ready.empty()) {
            VertexId v = ready.back();
            ready.pop_back();
            ++seen;
            g.for_each_out_edge(v, [&](EdgeId e) {
                if (--indeg[g.edge_head(e)] == 0) ready.push_back(g.edge_head(e));
            });
        }
        if (seen == n) fn(g);
    }
}

// Random multigraph with self-loops and parallel edges, sized for oracle
// comparison corpora.
inline DirectedGraph random_multigraph(SplitMix64& rng, std::size_t max_n) {
    std::size_t n = 1 + rng.next() % max_n;
    std::size_t m = rng.next() % (2 * n + 2);
    DirectedGraph g(n);
    for (std::size_t i = 0; i < m; ++i)
        g.add_edge(static_cast<VertexId>(rng.next() % n),
                   static_cast<VertexId>(rng.next() % n));
    return g;
}

// Random undirected simple graph for the hardness corpora.
inline UndirectedGraph random_undirected(SplitMix64& rng, std::size_t n) {
    UndirectedGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.next() & 1)
                g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return g;
}

}  // namespace scx::test
