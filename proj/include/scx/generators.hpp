#pragma once

#include <cstdint>

#include "scx/graph.hpp"

namespace scx {

// SplitMix64: the fixed, portable PRNG behind every seeded generator.
// Identical seeds give identical graphs on every platform, which outranks
// statistical sophistication here.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // true with probability p, by thresholding one 64-bit draw
    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return static_cast<double>(next()) < p * 18446744073709551616.0;
    }
};

// Butterfly network of dimension d: levels 0..d, 2^d columns per level,
// vertex (level, column) has id level * 2^d + column. Edges run downward
// from level l to level l-1: (l, c) -> (l-1, c) straight, then
// (l, c) -> (l-1, c xor 2^(l-1)) cross, emitted in ascending tail order.
// Sources are the 2^d top-level vertices, sinks the 2^d bottom-level ones;
// n = 2^d (d+1), m = 2^(d+1) d. Requires 1 <= d <= 20.
DirectedGraph butterfly(unsigned d);

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0; n = 1 gives one self-loop.
// Requires n >= 1.
DirectedGraph simple_cycle(std::size_t n);

// G(n, p) over the pairs i < j only, each edge i -> j included
// independently with probability p, pairs drawn in lexicographic order.
DirectedGraph random_dag(std::size_t n, double p, std::uint64_t seed);

// G(n, p) over all ordered pairs in lexicographic order; self-loops only
// when allowed.
DirectedGraph random_digraph(std::size_t n, double p, std::uint64_t seed,
                             bool allow_self_loops = false);

}  // namespace scx
