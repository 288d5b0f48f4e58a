#include "scx/scc.hpp"

#include <algorithm>

namespace scx {

SccResult strongly_connected_components(const DirectedGraph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::uint32_t kUnvisited = 0xffffffffu;

    SccResult result;
    result.component_of.assign(n, kNoVertex);

    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::uint32_t next_index = 0;

    struct Frame {
        VertexId v;
        EdgeId edge;  // out-edge being explored, kNoEdge when exhausted
    };
    std::vector<Frame> frames;

    for (VertexId root = 0; root < n; ++root) {
        if (!g.vertex_alive(root) || index[root] != kUnvisited) continue;

        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        frames.push_back({root, g.first_out(root)});

        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge != kNoEdge) {
                EdgeId e = f.edge;
                f.edge = g.next_out(e);
                VertexId w = g.edge_head(e);
                if (index[w] == kUnvisited) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, g.first_out(w)});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
                continue;
            }
            VertexId v = f.v;
            frames.pop_back();
            if (!frames.empty())
                lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
            if (lowlink[v] == index[v]) {
                std::vector<VertexId> comp;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                VertexId id = static_cast<VertexId>(result.members.size());
                for (VertexId m : comp) result.component_of[m] = id;
                result.members.push_back(std::move(comp));
            }
        }
    }
    return result;
}

}  // namespace scx
