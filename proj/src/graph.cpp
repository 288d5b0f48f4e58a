#include "scx/graph.hpp"

#include <algorithm>

namespace scx {

DirectedGraph::DirectedGraph(std::size_t vertex_count) {
    verts_.reserve(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) add_vertex();
}

VertexId DirectedGraph::add_vertex() {
    VertexId v = static_cast<VertexId>(verts_.size());
    std::uint32_t self = v | kSentinel;
    verts_.push_back(VertexRec{self, self, self, self, 0, 0, true});
    ++live_vertices_;
    return v;
}

EdgeId DirectedGraph::add_edge(VertexId tail, VertexId head) {
    if (tail >= verts_.size() || head >= verts_.size())
        throw ContractError("add_edge: vertex id out of range");
    if (!verts_[tail].alive || !verts_[head].alive)
        throw ContractError("add_edge: endpoint is dead");
    EdgeId e = static_cast<EdgeId>(edges_.size());
    edges_.push_back(EdgeRec{tail, head, true});
    out_next_.push_back(0);
    out_prev_.push_back(0);
    in_next_.push_back(0);
    in_prev_.push_back(0);
    append(true, tail, e);
    append(false, head, e);
    ++verts_[tail].outdeg;
    ++verts_[head].indeg;
    ++live_edges_;
    return e;
}

void DirectedGraph::append(bool out, VertexId v, EdgeId e) {
    std::uint32_t sent = v | kSentinel;
    std::uint32_t last = prev_ref(out, sent);
    next_ref(out, last) = e;
    prev_ref(out, e) = last;
    next_ref(out, e) = sent;
    prev_ref(out, sent) = e;
}

void DirectedGraph::unlink(bool out, EdgeId e) {
    std::uint32_t p = prev_ref(out, e);
    std::uint32_t n = next_ref(out, e);
    next_ref(out, p) = n;
    prev_ref(out, n) = p;
}

void DirectedGraph::delete_edge(EdgeId e) {
    delete_edge(e, edges_[e].tail, edges_[e].head);
}

void DirectedGraph::delete_edge(EdgeId e, VertexId out_owner, VertexId in_owner) {
    if (!edges_[e].alive) throw ContractError("delete_edge: edge already dead");
    unlink(true, e);
    unlink(false, e);
    --verts_[out_owner].outdeg;
    --verts_[in_owner].indeg;
    edges_[e].alive = false;
    --live_edges_;
}

void DirectedGraph::delete_vertex(VertexId v) {
    VertexRec& vr = verts_[v];
    if (!vr.alive) throw ContractError("delete_vertex: vertex already dead");
    if (vr.outdeg != 0 || vr.indeg != 0)
        throw ContractError("delete_vertex: vertex still has incident edges");
    vr.alive = false;
    --live_vertices_;
}

void DirectedGraph::splice(bool out, VertexId from, VertexId into) {
    if (from == into) throw ContractError("splice: source equals destination");
    std::uint32_t fsent = from | kSentinel;
    std::uint32_t first = next_ref(out, fsent);
    if (first & kSentinel) return;  // nothing to move
    std::uint32_t last = prev_ref(out, fsent);
    std::uint32_t isent = into | kSentinel;
    std::uint32_t itail = prev_ref(out, isent);
    next_ref(out, itail) = first;
    prev_ref(out, first) = itail;
    next_ref(out, last) = isent;
    prev_ref(out, isent) = last;
    next_ref(out, fsent) = fsent;
    prev_ref(out, fsent) = fsent;
}

void DirectedGraph::splice_out_edges(VertexId from, VertexId into) {
    splice(true, from, into);
    verts_[into].outdeg += verts_[from].outdeg;
    verts_[from].outdeg = 0;
}

void DirectedGraph::splice_in_edges(VertexId from, VertexId into) {
    splice(false, from, into);
    verts_[into].indeg += verts_[from].indeg;
    verts_[from].indeg = 0;
}

std::pair<DirectedGraph, std::vector<VertexId>> DirectedGraph::compact() const {
    std::vector<VertexId> remap(verts_.size(), kNoVertex);
    DirectedGraph out;
    for (VertexId v = 0; v < verts_.size(); ++v)
        if (verts_[v].alive) remap[v] = out.add_vertex();
    for (VertexId v = 0; v < verts_.size(); ++v) {
        if (!verts_[v].alive) continue;
        for_each_out_edge(v, [&](EdgeId e) {
            out.add_edge(remap[edges_[e].tail], remap[edges_[e].head]);
        });
    }
    return {std::move(out), std::move(remap)};
}

bool UndirectedGraph::has_edge(VertexId a, VertexId b) const {
    if (a > b) std::swap(a, b);
    return std::find(edges_.begin(), edges_.end(), std::make_pair(a, b)) != edges_.end();
}

void UndirectedGraph::add_edge(VertexId a, VertexId b) {
    if (a >= n_ || b >= n_) throw ContractError("add_edge: vertex id out of range");
    if (a == b) throw ContractError("add_edge: self-loop in undirected graph");
    if (a > b) std::swap(a, b);
    if (has_edge(a, b)) throw ContractError("add_edge: duplicate undirected edge");
    edges_.emplace_back(a, b);
}

DirectedGraph reverse(const DirectedGraph& g) {
    DirectedGraph out(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_record_count(); ++e)
        if (g.edge_alive(e)) out.add_edge(g.edge_head(e), g.edge_tail(e));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!g.vertex_alive(v)) out.delete_vertex(v);
    return out;
}

std::vector<std::pair<VertexId, VertexId>> edge_multiset(const DirectedGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_record_count(); ++e)
        if (g.edge_alive(e)) out.emplace_back(g.edge_tail(e), g.edge_head(e));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace scx
