#include "scx/condense.hpp"

#include <unordered_map>

namespace scx {

CondenseResult condense(const DirectedGraph& g) {
    SccResult scc = strongly_connected_components(g);
    const std::size_t comp_count = scc.members.size();

    // Every nontrivial component must be a single directed cycle: each
    // member with within-component indegree and outdegree exactly 1. For a
    // singleton the within-degree is its self-loop count, and one self-loop
    // is a cycle of length 1.
    for (VertexId c = 0; c < comp_count; ++c) {
        const auto& members = scc.members[c];
        for (VertexId v : members) {
            std::uint32_t win = 0, wout = 0;
            g.for_each_in_edge(v, [&](EdgeId e) {
                if (scc.component_of[g.edge_tail(e)] == c) ++win;
            });
            g.for_each_out_edge(v, [&](EdgeId e) {
                if (scc.component_of[g.edge_head(e)] == c) ++wout;
            });
            bool ok = members.size() >= 2 ? (win == 1 && wout == 1) : win <= 1;
            if (!ok) return NonCycleScc{c, v, win, wout};
        }
    }

    // Two original edges between the same ordered component pair mean two
    // paths between those components.
    std::unordered_map<std::uint64_t, EdgeId> seen;
    seen.reserve(g.edge_count());
    Condensation cond;
    cond.dag = DirectedGraph(comp_count);
    cond.component_of = std::move(scc.component_of);
    cond.members = std::move(scc.members);
    for (EdgeId e = 0; e < g.edge_record_count(); ++e) {
        if (!g.edge_alive(e)) continue;
        VertexId ct = cond.component_of[g.edge_tail(e)];
        VertexId ch = cond.component_of[g.edge_head(e)];
        if (ct == ch) continue;  // intra-component (cycle) edge
        std::uint64_t key = (static_cast<std::uint64_t>(ct) << 32) | ch;
        auto [it, inserted] = seen.emplace(key, e);
        if (!inserted) {
            EdgeId e0 = it->second;
            return ParallelCondensationEdges{
                ct, ch,
                {std::make_pair(g.edge_tail(e0), g.edge_head(e0)),
                 std::make_pair(g.edge_tail(e), g.edge_head(e))}};
        }
        cond.dag.add_edge(ct, ch);
    }
    return cond;
}

}  // namespace scx
