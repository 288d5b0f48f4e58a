#include "scx/reduce.hpp"

#include <queue>
#include <string>

namespace scx {

namespace {

bool is_acyclic(const DirectedGraph& g) {
    // Kahn peeling over the live part.
    std::vector<std::uint32_t> indeg(g.vertex_count());
    std::vector<VertexId> ready;
    std::size_t seen = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!g.vertex_alive(v)) continue;
        indeg[v] = g.indegree(v);
        if (indeg[v] == 0) ready.push_back(v);
    }
    while (!ready.empty()) {
        VertexId v = ready.back();
        ready.pop_back();
        ++seen;
        g.for_each_out_edge(v, [&](EdgeId e) {
            VertexId h = g.edge_head(e);
            if (--indeg[h] == 0) ready.push_back(h);
        });
    }
    return seen == g.live_vertex_count();
}

bool is_simple(const DirectedGraph& g) {
    std::vector<VertexId> mark(g.vertex_count(), kNoVertex);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!g.vertex_alive(v)) continue;
        bool bad = false;
        g.for_each_out_edge(v, [&](EdgeId e) {
            VertexId h = g.edge_head(e);
            if (h == v || mark[h] == v) bad = true;
            mark[h] = v;
        });
        if (bad) return false;
    }
    return true;
}

// Degree-1 contraction driver. Stored endpoint fields of spliced edges go
// stale; merged_into chains (with path compression) recover the live owner.
struct Reducer {
    DirectedGraph g;
    std::vector<VertexId> merged_into;
    std::uint64_t touched = 0;
    std::vector<Contraction> trace;
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<VertexId>> work;

    explicit Reducer(DirectedGraph graph)
        : g(std::move(graph)), merged_into(g.vertex_count(), kNoVertex) {}

    VertexId resolve(VertexId x) {
        if (merged_into[x] == kNoVertex) return x;
        VertexId root = x;
        while (merged_into[root] != kNoVertex) {
            root = merged_into[root];
            ++touched;
        }
        while (merged_into[x] != root) {
            VertexId next = merged_into[x];
            merged_into[x] = root;
            x = next;
        }
        return root;
    }

    void enqueue_if_degree_one(VertexId v) {
        if (g.vertex_alive(v) && (g.indegree(v) == 1 || g.outdegree(v) == 1)) work.push(v);
    }

    void run(std::size_t max_contractions) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) enqueue_if_degree_one(v);
        std::size_t steps = 0;
        while (!work.empty() && steps < max_contractions) {
            VertexId v = work.top();
            work.pop();
            if (!g.vertex_alive(v)) continue;
            if (g.indegree(v) == 1) {
                // Merge v into its unique predecessor u: v's successors
                // become u's, edge (u, v) disappears.
                EdgeId e = g.first_in(v);
                ++touched;
                VertexId u = resolve(g.edge_tail(e));
                g.delete_edge(e, u, v);
                ++touched;
                g.splice_out_edges(v, u);
                ++touched;
                merged_into[v] = u;
                g.delete_vertex(v);
                trace.push_back({Contraction::Kind::IntoPredecessor, v, u});
                ++steps;
                enqueue_if_degree_one(u);
            } else if (g.outdegree(v) == 1) {
                // Mirror image: merge v into its unique successor w.
                EdgeId e = g.first_out(v);
                ++touched;
                VertexId w = resolve(g.edge_head(e));
                g.delete_edge(e, v, w);
                ++touched;
                g.splice_in_edges(v, w);
                ++touched;
                merged_into[v] = w;
                g.delete_vertex(v);
                trace.push_back({Contraction::Kind::IntoSuccessor, v, w});
                ++steps;
                enqueue_if_degree_one(w);
            }
            // else: stale worklist entry
        }
    }
};

}  // namespace

void require_acyclic_simple(const DirectedGraph& g, const char* who) {
    if (!is_acyclic(g)) throw ContractError(std::string(who) + ": input graph is not acyclic");
    if (!is_simple(g))
        throw ContractError(std::string(who) + ": input graph has self-loops or parallel edges");
}

ReducedGraph reduce_degree_one(DirectedGraph dag) {
    require_acyclic_simple(dag, "reduce_degree_one");
    Reducer r(std::move(dag));
    r.run(static_cast<std::size_t>(-1));

    ReducedGraph out;
    out.trace = std::move(r.trace);

    // Compact live vertices to dense ids and resolve every input vertex to
    // the class it was merged into.
    const std::size_t n = r.g.vertex_count();
    std::vector<VertexId> remap(n, kNoVertex);
    for (VertexId v = 0; v < n; ++v)
        if (r.g.vertex_alive(v)) {
            remap[v] = static_cast<VertexId>(out.origin.size());
            out.origin.emplace_back();
        }
    for (VertexId v = 0; v < n; ++v) out.origin[remap[r.resolve(v)]].push_back(v);

    // Rebuild the surviving graph, resolving stale heads, and detect
    // parallel edges in the same pass.
    out.dag = DirectedGraph(out.origin.size());
    std::vector<VertexId> mark(out.origin.size(), kNoVertex);
    for (VertexId v = 0; v < n; ++v) {
        if (!r.g.vertex_alive(v)) continue;
        VertexId nv = remap[v];
        r.g.for_each_out_edge(v, [&](EdgeId e) {
            ++r.touched;
            VertexId nh = remap[r.resolve(r.g.edge_head(e))];
            if (mark[nh] == nv) out.has_multi_edge = true;
            mark[nh] = nv;
            out.dag.add_edge(nv, nh);
        });
    }
    for (VertexId v = 0; v < out.dag.vertex_count(); ++v) {
        if (out.dag.indegree(v) == 0) ++out.source_count;
        if (out.dag.outdegree(v) == 0) ++out.sink_count;
    }
    out.edges_touched = r.touched;
    return out;
}

DirectedGraph contract_prefix(DirectedGraph dag, std::size_t max_contractions) {
    require_acyclic_simple(dag, "contract_prefix");
    Reducer r(std::move(dag));
    r.run(max_contractions);

    DirectedGraph out(r.g.vertex_count());
    for (VertexId v = 0; v < r.g.vertex_count(); ++v) {
        if (!r.g.vertex_alive(v)) continue;
        r.g.for_each_out_edge(v, [&](EdgeId e) {
            out.add_edge(v, r.resolve(r.g.edge_head(e)));
        });
    }
    for (VertexId v = 0; v < r.g.vertex_count(); ++v)
        if (!r.g.vertex_alive(v)) out.delete_vertex(v);
    return out;
}

std::pair<std::uint32_t, std::uint32_t> count_sources_sinks(const ReducedGraph& rg) {
    std::uint32_t s = 0, t = 0;
    for (VertexId v = 0; v < rg.dag.vertex_count(); ++v) {
        if (!rg.dag.vertex_alive(v)) continue;
        if (rg.dag.indegree(v) == 0) ++s;
        if (rg.dag.outdegree(v) == 0) ++t;
    }
    return {s, t};
}

}  // namespace scx
