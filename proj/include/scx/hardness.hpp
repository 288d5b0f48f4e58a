#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scx/graph.hpp"

namespace scx {

// A vertex-cover gadget instance: the constructed acyclic digraph plus the
// maps from original vertices/edges to gadget ids.
//
// Edge-removal flavor: vertex v gets v' = 2v, v'' = 2v + 1 and the spine
// edge (v', v''); edge e_i = {v, w} gets e' = 2n + 2i, e'' = 2n + 2i + 1 and
// the four edges (e', v'), (e', w'), (v'', e''), (w'', e''). Sizes come out
// to 2n + 2m vertices and n + 4m edges. Deleting spine edges of a cover
// breaks every e' -> e'' path pair.
//
// Vertex-removal flavor: v maps to the single v' = v; edge e_i gets
// e' = n + 2i, e'' = n + 2i + 1 and edges (e', v'), (e', w'), (v', e''),
// (w', e''): n + 2m vertices, 4m edges.
struct ReductionArtifact {
    DirectedGraph gadget;
    // v -> (v', v''); the second entry is kNoVertex for the vertex-removal
    // flavor.
    std::vector<std::pair<VertexId, VertexId>> vertex_gadget;
    std::vector<std::pair<VertexId, VertexId>> edge_gadget;  // e -> (e', e'')
    std::vector<EdgeId> spine_edges;  // v -> gadget edge (v', v''); empty for VSC
};

ReductionArtifact reduce_vc_to_esc(const UndirectedGraph& g);
ReductionArtifact reduce_vc_to_vsc(const UndirectedGraph& g);

// Result of an exact minimization. `chosen` is the deterministic minimum:
// smallest cardinality, then lexicographically smallest sorted member list
// (the enumeration order guarantees this). `certificate` reports an
// independent re-check of feasibility: edge coverage for vertex cover, the
// definition-level path-counting oracle for the connectivity solvers.
struct ExactSolution {
    std::vector<std::uint32_t> chosen;
    std::size_t size = 0;
    bool certificate = false;
};

// Smallest vertex set touching every edge. Refuses more than
// `guard_vertices` vertices.
ExactSolution exact_min_vertex_cover(const UndirectedGraph& g, std::size_t guard_vertices = 20);

// Smallest edge set whose removal leaves the graph singly-connected.
// Candidate feasibility uses the fast checker; the returned solution is
// re-certified by the oracle. Guards refuse larger instances; callers with
// structurally bounded inputs (gadgets of small covers) may raise them.
ExactSolution exact_min_esc(const DirectedGraph& g, std::size_t guard_edges = 20,
                            std::size_t guard_vertices = 16);

// Smallest vertex set whose removal (with incident edges) leaves the graph
// singly-connected.
ExactSolution exact_min_vsc(const DirectedGraph& g, std::size_t guard_vertices = 16);

}  // namespace scx
