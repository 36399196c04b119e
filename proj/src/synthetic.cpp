#include "tetris/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "tetris/rng.hpp"
#include "tetris/stats.hpp"

namespace tetris {

namespace {

using RawEdge = std::pair<std::uint64_t, std::uint64_t>;

// Pair index -> (i, j) over the upper triangle of an n x n grid.
RawEdge unrank_pair(std::uint64_t idx, std::uint32_t n) {
    // Row i owns (n-1-i) pairs; walk rows until idx falls inside.
    std::uint64_t i = 0;
    std::uint64_t remaining = idx;
    while (remaining >= n - 1 - i) {
        remaining -= n - 1 - i;
        ++i;
    }
    return {i, i + 1 + remaining};
}

std::vector<VertexId> component_representatives(const Graph& g) {
    const std::uint64_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<VertexId> reps;
    std::vector<VertexId> queue;
    for (VertexId start = 0; start < n; ++start) {
        if (seen[start]) continue;
        reps.push_back(start);
        seen[start] = true;
        queue.assign(1, start);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (VertexId w : g.neighbors(queue[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
    }
    return reps;
}

} // namespace

Graph gnp_graph(std::uint32_t n, double p, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gnp needs at least two vertices");
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must be in (0,1]");

    Rng rng(seed);
    std::vector<RawEdge> edges;
    const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    // Geometric skips between successes instead of a Bernoulli roll per
    // pair.
    const double log_q = std::log1p(-p);
    std::uint64_t idx = 0;
    while (true) {
        if (p < 1.0) {
            const double u = rng.unit();
            idx += static_cast<std::uint64_t>(
                std::floor(std::log1p(-u) / log_q));
        }
        if (idx >= total) break;
        edges.push_back(unrank_pair(idx, n));
        ++idx;
    }
    if (edges.empty()) edges.push_back({0, 1});  // keep the graph non-empty
    return Graph::from_edges(edges);
}

Graph connected_gnp_graph(std::uint32_t n, double p, std::uint64_t seed,
                          int max_attempts) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g = gnp_graph(n, p, derive_seed(seed, attempt));
        if (g.vertex_count() == n && is_connected(g)) return g;
    }
    throw std::runtime_error("no connected G(n,p) sample found; raise p");
}

Graph preferential_attachment_graph(std::uint32_t n,
                                    std::uint32_t edges_per_vertex,
                                    double triad_probability,
                                    std::uint64_t seed) {
    const std::uint32_t k = edges_per_vertex;
    if (k < 2) throw std::invalid_argument("need at least 2 edges per vertex");
    if (n <= k) throw std::invalid_argument("need more vertices than degree");
    if (!(triad_probability >= 0.0 && triad_probability <= 1.0))
        throw std::invalid_argument("triad probability must be in [0,1]");

    Rng rng(seed);
    std::vector<RawEdge> edges;
    // Degree-proportional sampling via the repeated-endpoint list.
    std::vector<VertexId> endpoint_pool;
    std::vector<std::vector<VertexId>> adj(n);
    auto add_edge = [&](VertexId a, VertexId b) {
        edges.push_back({a, b});
        adj[a].push_back(b);
        adj[b].push_back(a);
        endpoint_pool.push_back(a);
        endpoint_pool.push_back(b);
    };
    auto linked = [&](VertexId a, VertexId b) {
        const auto& la = adj[a].size() < adj[b].size() ? adj[a] : adj[b];
        const VertexId target = adj[a].size() < adj[b].size() ? b : a;
        return std::find(la.begin(), la.end(), target) != la.end();
    };

    // Seed clique on the first k+1 vertices.
    for (VertexId a = 0; a <= k; ++a)
        for (VertexId b = a + 1; b <= k; ++b) add_edge(a, b);

    for (VertexId v = k + 1; v < n; ++v) {
        VertexId last_target = 0;
        for (std::uint32_t j = 0; j < k; ++j) {
            VertexId target = 0;
            bool found = false;
            // Triad step: close a triangle through the previous target.
            if (j > 0 && rng.unit() < triad_probability) {
                for (int tries = 0; tries < 8; ++tries) {
                    const auto& cand = adj[last_target];
                    target = cand[rng.below(cand.size())];
                    if (target != v && !linked(v, target)) {
                        found = true;
                        break;
                    }
                }
            }
            while (!found) {
                target = endpoint_pool[rng.below(endpoint_pool.size())];
                if (target != v && !linked(v, target)) found = true;
            }
            add_edge(v, target);
            last_target = target;
        }
    }
    return Graph::from_edges(edges);
}

Graph community_graph(std::uint32_t n, std::uint32_t block_size,
                      double p_within, double p_cross, std::uint64_t seed) {
    if (block_size < 3 || n < 2 * block_size)
        throw std::invalid_argument("need at least two blocks of size >= 3");
    if (!(p_within > 0.0 && p_within <= 1.0))
        throw std::invalid_argument("within-block probability out of range");
    if (!(p_cross >= 0.0 && p_cross <= 1.0))
        throw std::invalid_argument("cross probability out of range");

    Rng rng(seed);
    std::vector<RawEdge> edges;
    const std::uint32_t blocks = n / block_size;
    auto block_of = [&](std::uint32_t v) {
        return std::min(v / block_size, blocks - 1);
    };

    // Dense blocks; the last block absorbs the remainder vertices.
    for (std::uint32_t b = 0; b < blocks; ++b) {
        const std::uint32_t lo = b * block_size;
        const std::uint32_t hi =
            (b + 1 == blocks) ? n : (b + 1) * block_size;
        for (std::uint32_t u = lo; u < hi; ++u)
            for (std::uint32_t v = u + 1; v < hi; ++v)
                if (rng.unit() < p_within) edges.push_back({u, v});
    }

    // Sparse global links so the walk mixes across blocks.
    for (std::uint32_t u = 0; u < n; ++u) {
        if (rng.unit() >= p_cross) continue;
        VertexId v = static_cast<VertexId>(rng.below(n));
        while (v == u || block_of(v) == block_of(u))
            v = static_cast<VertexId>(rng.below(n));
        edges.push_back({u, v});
    }

    // Pull in vertices that drew no edge, then bridge any leftover
    // components so the seed's walk can reach the whole graph.
    std::unordered_set<std::uint64_t> present;
    for (const auto& [a, b] : edges) {
        present.insert(a);
        present.insert(b);
    }
    for (std::uint32_t v = 0; v < n; ++v)
        if (!present.contains(v)) edges.push_back({v, v == 0 ? 1u : 0u});

    Graph g = Graph::from_edges(edges);
    auto reps = component_representatives(g);
    if (reps.size() > 1) {
        for (std::size_t i = 1; i < reps.size(); ++i)
            edges.push_back({reps[0], reps[i]});
        g = Graph::from_edges(edges);
    }
    return g;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    const std::uint64_t n = g.vertex_count();
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : g.neighbors(v))
            if (v < w) out << v << ' ' << w << '\n';
}

} // namespace tetris
