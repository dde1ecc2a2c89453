#pragma once

// Shared instance builders for the test zoo.

#include <cstdint>
#include <vector>

#include "cohcfg/colored_graph.hpp"

namespace zoo {

using cohcfg::Color;
using cohcfg::ColoredGraph;

inline ColoredGraph thin_cyclic(std::size_t n) {
    std::vector<Color> c(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] = static_cast<Color>((j + n - i) % n);
    return ColoredGraph(n, std::move(c));
}

inline ColoredGraph pentagon() {
    const std::size_t n = 5;
    std::vector<Color> c(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t d = std::min((i + n - j) % n, (j + n - i) % n);
            c[i * n + j] = d == 0 ? 0 : (d == 1 ? 1 : 2);
        }
    return ColoredGraph(n, std::move(c));
}

// the coherent configuration of two fibers of sizes a and b (a, b >= 2):
// per-fiber diagonal and off-diagonal classes plus the two between-fiber
// classes; this is inv(Sym(a) x Sym(b))
inline ColoredGraph union_of_fibers(std::size_t a, std::size_t b) {
    const std::size_t n = a + b;
    std::vector<Color> c(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool ia = i < a, ja = j < a;
            if (i == j)
                c[i * n + j] = ia ? 0 : 1;
            else if (ia && ja)
                c[i * n + j] = 2;
            else if (!ia && !ja)
                c[i * n + j] = 3;
            else
                c[i * n + j] = ia ? 4 : 5;
        }
    return ColoredGraph(n, std::move(c));
}

// diagonal / edge / non-edge coloring of the disjoint union of two cliques
inline ColoredGraph two_cliques(std::size_t a, std::size_t b) {
    const std::size_t n = a + b;
    std::vector<Color> c(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                c[i * n + j] = 0;
            else if ((i < a) == (j < a))
                c[i * n + j] = 1; // same clique: adjacent
            else
                c[i * n + j] = 2;
        }
    return ColoredGraph(n, std::move(c));
}

// a fixed scrambling permutation of 0..n-1 (deterministic LCG-driven shuffle)
inline std::vector<std::uint32_t> scramble(std::size_t n, std::uint64_t seed) {
    std::vector<std::uint32_t> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = static_cast<std::uint32_t>(i);
    std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    for (std::size_t i = n; i > 1; --i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        const std::size_t j = (state >> 33) % i;
        std::swap(f[i - 1], f[j]);
    }
    return f;
}

} // namespace zoo
