#include "scx/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace scx {
namespace {

void check_guard(const DirectedGraph& g, std::size_t guard, const char* what) {
    if (guard > 64) throw GuardError(std::string(what) + ": guard above 64 unsupported");
    if (g.vertex_count() > guard)
        throw GuardError(std::string(what) + ": graph has " +
                         std::to_string(g.vertex_count()) + " vertices, guard is " +
                         std::to_string(guard));
}

// Backtracking enumeration shared by the two capped counters. Counts
// extensions of `path` that end at `target` (paths) or close back to
// `start` via an edge (cycles), stopping at 2.
struct Backtracker {
    const DirectedGraph& g;
    VertexId target;
    std::uint64_t visited = 0;
    int found = 0;

    void dfs(VertexId at) {
        for (EdgeId e = g.first_out(at); e != kNoEdge && found < 2; e = g.next_out(e)) {
            VertexId h = g.edge_head(e);
            if (h == target) {
                ++found;
                continue;
            }
            if (visited & (1ull << h)) continue;
            visited |= 1ull << h;
            dfs(h);
            visited &= ~(1ull << h);
        }
    }
};

PathCount to_count(int found) {
    if (found >= 2) return PathCount::TwoOrMore;
    return found == 1 ? PathCount::One : PathCount::Zero;
}

}  // namespace

PathCount count_simple_paths_capped(const DirectedGraph& g, VertexId from, VertexId to,
                                    std::size_t guard) {
    if (from == to) throw ContractError("count_simple_paths_capped: from == to");
    check_guard(g, guard, "count_simple_paths_capped");
    Backtracker bt{g, to};
    bt.visited = 1ull << from;
    bt.dfs(from);
    return to_count(bt.found);
}

PathCount count_simple_cycles_through_capped(const DirectedGraph& g, VertexId v,
                                             std::size_t guard) {
    check_guard(g, guard, "count_simple_cycles_through_capped");
    Backtracker bt{g, v};
    bt.visited = 1ull << v;
    bt.dfs(v);
    return to_count(bt.found);
}

OracleVerdict oracle_singly_connected(const DirectedGraph& g, std::size_t guard) {
    check_guard(g, guard, "oracle_singly_connected");
    const std::size_t n = g.vertex_count();

    for (VertexId start = 0; start < n; ++start) {
        if (!g.vertex_alive(start)) continue;

        // count[w] tallies simple paths start->w; count[start] tallies
        // simple cycles through start. first[w] remembers the first path.
        std::vector<int> count(n, 0);
        std::vector<std::vector<VertexId>> first(n);
        std::deque<std::vector<VertexId>> queue;

        auto arrive = [&](const std::vector<VertexId>& prefix,
                          VertexId w) -> std::optional<OracleWitness> {
            std::vector<VertexId> path = prefix;
            path.push_back(w);
            if (++count[w] >= 2) {
                OracleWitness wit;
                wit.is_cycle = (w == start);
                wit.from = start;
                wit.to = w;
                wit.path_a = first[w];
                wit.path_b = std::move(path);
                return wit;
            }
            first[w] = path;
            if (w != start) queue.push_back(std::move(path));
            return std::nullopt;
        };

        std::vector<VertexId> root{start};
        for (EdgeId e = g.first_out(start); e != kNoEdge; e = g.next_out(e)) {
            if (auto wit = arrive(root, g.edge_head(e)))
                return {false, std::move(wit)};
        }
        while (!queue.empty()) {
            std::vector<VertexId> path = std::move(queue.front());
            queue.pop_front();
            VertexId at = path.back();
            for (EdgeId e = g.first_out(at); e != kNoEdge; e = g.next_out(e)) {
                VertexId h = g.edge_head(e);
                if (h != start &&
                    std::find(path.begin(), path.end(), h) != path.end())
                    continue;  // not simple
                if (auto wit = arrive(path, h)) return {false, std::move(wit)};
            }
        }
    }
    return {true, std::nullopt};
}

}  // namespace scx
