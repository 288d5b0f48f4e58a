#include "scx/generators.hpp"

#include <string>

namespace scx {

DirectedGraph butterfly(unsigned d) {
    if (d < 1 || d > 20)
        throw GuardError("butterfly: dimension must be in [1, 20], got " + std::to_string(d));
    const std::uint64_t cols = 1ull << d;
    DirectedGraph g(static_cast<std::size_t>(cols * (d + 1)));
    auto id = [cols](unsigned level, std::uint64_t column) {
        return static_cast<VertexId>(level * cols + column);
    };
    for (unsigned level = 1; level <= d; ++level) {
        for (std::uint64_t c = 0; c < cols; ++c) {
            g.add_edge(id(level, c), id(level - 1, c));
            g.add_edge(id(level, c), id(level - 1, c ^ (1ull << (level - 1))));
        }
    }
    return g;
}

DirectedGraph simple_cycle(std::size_t n) {
    if (n < 1) throw ContractError("simple_cycle: need at least one vertex");
    DirectedGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
    return g;
}

DirectedGraph random_dag(std::size_t n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    DirectedGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.chance(p)) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return g;
}

DirectedGraph random_digraph(std::size_t n, double p, std::uint64_t seed,
                             bool allow_self_loops) {
    SplitMix64 rng(seed);
    DirectedGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j && !allow_self_loops) continue;
            if (rng.chance(p)) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    return g;
}

}  // namespace scx
