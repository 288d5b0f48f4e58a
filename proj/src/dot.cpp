#include "scx/dot.hpp"

#include <sstream>

namespace scx {

std::string to_dot(const DirectedGraph& g, const std::map<VertexId, std::string>* labels) {
    std::ostringstream out;
    out << "digraph {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!g.vertex_alive(v)) continue;
        if (labels && labels->count(v)) {
            out << "  " << v << " [label=\"" << labels->at(v) << "\"]\n";
        } else if (g.outdegree(v) == 0 && g.indegree(v) == 0) {
            out << "  " << v << "\n";
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!g.vertex_alive(v)) continue;
        g.for_each_out_edge(v, [&](EdgeId e) {
            out << "  " << g.edge_tail(e) << " -> " << g.edge_head(e) << "\n";
        });
    }
    out << "}\n";
    return out.str();
}

}  // namespace scx
