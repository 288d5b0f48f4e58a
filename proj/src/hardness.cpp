#include "scx/hardness.hpp"

#include <string>

#include "scx/oracle.hpp"
#include "scx/sc_check.hpp"

namespace scx {

namespace {

// k-combinations of {0, .., count-1} in lexicographic order; fn returns
// true to accept (stops the sweep). Combined with the outer loop over
// ascending k this yields the deterministic minimum.
template <typename F>
bool for_each_combination(std::size_t count, std::size_t k, F&& fn) {
    std::vector<std::uint32_t> combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = static_cast<std::uint32_t>(i);
    if (k > count) return false;
    while (true) {
        if (fn(combo)) return true;
        // advance to next combination
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (combo[i] != i + count - k) {
                ++combo[i];
                for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
        if (k == 0) return false;
    }
}

}  // namespace

ReductionArtifact reduce_vc_to_esc(const UndirectedGraph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    ReductionArtifact art;
    art.gadget = DirectedGraph(2 * n + 2 * m);
    art.vertex_gadget.reserve(n);
    art.edge_gadget.reserve(m);
    art.spine_edges.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        VertexId vp = static_cast<VertexId>(2 * v);
        VertexId vpp = static_cast<VertexId>(2 * v + 1);
        art.vertex_gadget.emplace_back(vp, vpp);
        art.spine_edges.push_back(art.gadget.add_edge(vp, vpp));
    }
    for (std::size_t i = 0; i < m; ++i) {
        auto [v, w] = g.edges()[i];
        VertexId ep = static_cast<VertexId>(2 * n + 2 * i);
        VertexId epp = static_cast<VertexId>(2 * n + 2 * i + 1);
        art.edge_gadget.emplace_back(ep, epp);
        art.gadget.add_edge(ep, art.vertex_gadget[v].first);
        art.gadget.add_edge(ep, art.vertex_gadget[w].first);
        art.gadget.add_edge(art.vertex_gadget[v].second, epp);
        art.gadget.add_edge(art.vertex_gadget[w].second, epp);
    }
    return art;
}

ReductionArtifact reduce_vc_to_vsc(const UndirectedGraph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    ReductionArtifact art;
    art.gadget = DirectedGraph(n + 2 * m);
    art.vertex_gadget.reserve(n);
    art.edge_gadget.reserve(m);
    for (std::size_t v = 0; v < n; ++v)
        art.vertex_gadget.emplace_back(static_cast<VertexId>(v), kNoVertex);
    for (std::size_t i = 0; i < m; ++i) {
        auto [v, w] = g.edges()[i];
        VertexId ep = static_cast<VertexId>(n + 2 * i);
        VertexId epp = static_cast<VertexId>(n + 2 * i + 1);
        art.edge_gadget.emplace_back(ep, epp);
        art.gadget.add_edge(ep, art.vertex_gadget[v].first);
        art.gadget.add_edge(ep, art.vertex_gadget[w].first);
        art.gadget.add_edge(art.vertex_gadget[v].first, epp);
        art.gadget.add_edge(art.vertex_gadget[w].first, epp);
    }
    return art;
}

ExactSolution exact_min_vertex_cover(const UndirectedGraph& g, std::size_t guard_vertices) {
    const std::size_t n = g.vertex_count();
    if (n > guard_vertices)
        throw GuardError("exact_min_vertex_cover: " + std::to_string(n) +
                         " vertices exceeds guard " + std::to_string(guard_vertices));
    ExactSolution sol;
    for (std::size_t k = 0; k <= n; ++k) {
        bool found = for_each_combination(n, k, [&](const std::vector<std::uint32_t>& combo) {
            std::uint64_t mask = 0;
            for (std::uint32_t v : combo) mask |= 1ull << v;
            for (const auto& [a, b] : g.edges())
                if (!(mask & (1ull << a)) && !(mask & (1ull << b))) return false;
            sol.chosen = combo;
            return true;
        });
        if (found) break;
    }
    sol.size = sol.chosen.size();
    // independent re-check of coverage
    sol.certificate = true;
    for (const auto& [a, b] : g.edges()) {
        bool covered = false;
        for (std::uint32_t v : sol.chosen) covered |= (v == a || v == b);
        sol.certificate = sol.certificate && covered;
    }
    return sol;
}

ExactSolution exact_min_esc(const DirectedGraph& g, std::size_t guard_edges,
                            std::size_t guard_vertices) {
    if (g.edge_count() > guard_edges)
        throw GuardError("exact_min_esc: " + std::to_string(g.edge_count()) +
                         " edges exceeds guard " + std::to_string(guard_edges));
    if (g.vertex_count() > guard_vertices)
        throw GuardError("exact_min_esc: " + std::to_string(g.vertex_count()) +
                         " vertices exceeds guard " + std::to_string(guard_vertices));

    std::vector<EdgeId> live;
    for (EdgeId e = 0; e < g.edge_record_count(); ++e)
        if (g.edge_alive(e)) live.push_back(e);

    ExactSolution sol;
    auto residual = [&](const std::vector<std::uint32_t>& combo) {
        DirectedGraph r = g;
        for (std::uint32_t i : combo) r.delete_edge(live[i]);
        return r;
    };
    for (std::size_t k = 0; k <= live.size(); ++k) {
        bool found =
            for_each_combination(live.size(), k, [&](const std::vector<std::uint32_t>& combo) {
                if (!is_singly_connected(residual(combo)).singly_connected) return false;
                sol.chosen.clear();
                for (std::uint32_t i : combo) sol.chosen.push_back(live[i]);
                return true;
            });
        if (found) break;
    }
    sol.size = sol.chosen.size();
    std::vector<std::uint32_t> combo_back;
    for (std::size_t i = 0; i < live.size(); ++i)
        for (std::uint32_t c : sol.chosen)
            if (live[i] == c) combo_back.push_back(static_cast<std::uint32_t>(i));
    sol.certificate = oracle_singly_connected(residual(combo_back), 64).singly_connected;
    return sol;
}

ExactSolution exact_min_vsc(const DirectedGraph& g, std::size_t guard_vertices) {
    if (g.vertex_count() > guard_vertices)
        throw GuardError("exact_min_vsc: " + std::to_string(g.vertex_count()) +
                         " vertices exceeds guard " + std::to_string(guard_vertices));

    std::vector<VertexId> live;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.vertex_alive(v)) live.push_back(v);

    // Induced subgraph on the survivors, relabeled densely.
    auto residual = [&](const std::vector<std::uint32_t>& combo) {
        std::vector<bool> removed(g.vertex_count(), false);
        for (std::uint32_t i : combo) removed[live[i]] = true;
        std::vector<VertexId> remap(g.vertex_count(), kNoVertex);
        std::size_t kept = 0;
        for (VertexId v : live)
            if (!removed[v]) remap[v] = static_cast<VertexId>(kept++);
        DirectedGraph r(kept);
        for (VertexId v : live) {
            if (removed[v]) continue;
            g.for_each_out_edge(v, [&](EdgeId e) {
                VertexId h = g.edge_head(e);
                if (!removed[h]) r.add_edge(remap[v], remap[h]);
            });
        }
        return r;
    };

    ExactSolution sol;
    for (std::size_t k = 0; k <= live.size(); ++k) {
        bool found =
            for_each_combination(live.size(), k, [&](const std::vector<std::uint32_t>& combo) {
                if (!is_singly_connected(residual(combo)).singly_connected) return false;
                sol.chosen.clear();
                for (std::uint32_t i : combo) sol.chosen.push_back(live[i]);
                return true;
            });
        if (found) break;
    }
    sol.size = sol.chosen.size();
    std::vector<std::uint32_t> combo_back;
    for (std::size_t i = 0; i < live.size(); ++i)
        for (std::uint32_t c : sol.chosen)
            if (live[i] == c) combo_back.push_back(static_cast<std::uint32_t>(i));
    sol.certificate = oracle_singly_connected(residual(combo_back), 64).singly_connected;
    return sol;
}

}  // namespace scx
