#ifndef TETRIS_TESTS_FIXTURES_HPP
#define TETRIS_TESTS_FIXTURES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "tetris/graph.hpp"
#include "tetris/rng.hpp"

namespace fixtures {

using Edge = std::pair<std::uint64_t, std::uint64_t>;

inline tetris::Graph from(const std::vector<Edge>& edges) {
    return tetris::Graph::from_edges(edges);
}

inline tetris::Graph k3() { return from({{0, 1}, {0, 2}, {1, 2}}); }

inline tetris::Graph k4() {
    return from({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline tetris::Graph p4() { return from({{0, 1}, {1, 2}, {2, 3}}); }

// Two triangles {0,1,2} and {2,3,4} sharing vertex 2.
inline tetris::Graph bowtie() {
    return from({{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Center 0 with `leaves` spokes.
inline tetris::Graph star(std::uint32_t leaves) {
    std::vector<Edge> edges;
    for (std::uint32_t i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return from(edges);
}

// K4 on {0..3} plus the pendant edge {3,4}: irregular degrees and
// non-bipartite, handy for stationarity checks.
inline tetris::Graph kite() {
    return from({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

// Plain quadratic G(n,p) sampler, independent of the library generator.
inline tetris::Graph random_gnp(std::uint32_t n, double p,
                                std::uint64_t seed) {
    tetris::Rng rng(seed);
    std::vector<Edge> edges;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.push_back({u, v});
    if (edges.empty()) edges.push_back({0, 1});
    return from(edges);
}

} // namespace fixtures

#endif // TETRIS_TESTS_FIXTURES_HPP
