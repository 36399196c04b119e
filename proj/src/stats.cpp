#include "tetris/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tetris {

std::uint64_t GraphStats::assigned_count(VertexId u, VertexId v) const {
    if (!graph_)
        throw std::logic_error(
            "assigned counts not available (stats loaded from cache)");
    if (!graph_->has_edge(u, v))
        throw std::invalid_argument("assigned_count: not an edge");
    auto it = assigned_.find(edge_key(u, v));
    return it == assigned_.end() ? 0 : it->second;
}

namespace {

// Out-neighborhoods oriented from the degree-order-smaller endpoint to
// the larger one; every triangle appears exactly once as a directed
// wedge out of its smallest vertex.
struct OrientedGraph {
    std::vector<std::uint64_t> offsets;
    std::vector<VertexId> targets;  // sorted per source

    std::span<const VertexId> out(VertexId v) const {
        return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
};

OrientedGraph orient_by_degree(const Graph& g) {
    const std::uint64_t n = g.vertex_count();
    OrientedGraph og;
    og.offsets.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : g.neighbors(v))
            if (g.precedes(v, w)) ++og.offsets[v + 1];
    for (std::uint64_t v = 0; v < n; ++v) og.offsets[v + 1] += og.offsets[v];
    og.targets.resize(og.offsets.back());
    std::vector<std::uint64_t> cursor(og.offsets.begin(),
                                      og.offsets.end() - 1);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : g.neighbors(v))
            if (g.precedes(v, w)) og.targets[cursor[v]++] = w;
    // CSR adjacency is sorted already, so each out list is sorted too.
    return og;
}

} // namespace

void for_each_triangle(
    const Graph& g,
    const std::function<void(VertexId, VertexId, VertexId)>& fn) {
    const OrientedGraph og = orient_by_degree(g);
    const std::uint64_t n = g.vertex_count();
    for (VertexId a = 0; a < n; ++a) {
        auto out_a = og.out(a);
        for (VertexId b : out_a) {
            auto out_b = og.out(b);
            std::size_t i = 0, j = 0;
            while (i < out_a.size() && j < out_b.size()) {
                if (out_a[i] < out_b[j]) ++i;
                else if (out_a[i] > out_b[j]) ++j;
                else {
                    // a precedes b, and both precede the common
                    // out-neighbor, so the order is (a, b, out_a[i]).
                    fn(a, b, out_a[i]);
                    ++i;
                    ++j;
                }
            }
        }
    }
}

std::uint32_t compute_degeneracy(const Graph& g) {
    const std::uint64_t n = g.vertex_count();
    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }

    // Min-degree peeling with bucket lists.
    std::vector<std::vector<VertexId>> buckets(max_deg + 1);
    for (VertexId v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
    std::vector<bool> removed(n, false);
    std::uint32_t degeneracy = 0;
    std::uint64_t processed = 0;
    std::uint32_t cur = 0;
    while (processed < n) {
        while (cur <= max_deg && buckets[cur].empty()) ++cur;
        if (cur > max_deg) break;
        VertexId v = buckets[cur].back();
        buckets[cur].pop_back();
        if (removed[v] || deg[v] != cur) continue;  // stale entry
        removed[v] = true;
        ++processed;
        degeneracy = std::max(degeneracy, cur);
        for (VertexId w : g.neighbors(v)) {
            if (removed[w]) continue;
            --deg[w];
            buckets[deg[w]].push_back(w);
            if (deg[w] < cur) cur = deg[w];
        }
    }
    return degeneracy;
}

GraphStats compute_stats(const Graph& g) {
    GraphStats s;
    s.graph_ = &g;
    s.vertex_count = g.vertex_count();
    s.edge_count = g.edge_count();

    const std::uint64_t n = g.vertex_count();
    for (VertexId v = 0; v < n; ++v) {
        const std::uint64_t d = g.degree(v);
        s.wedge_count += d * (d - 1) / 2;
        for (VertexId w : g.neighbors(v))
            if (v < w)
                s.degree_sum_over_edges +=
                    std::min(g.degree(v), g.degree(w));
    }

    for_each_triangle(g, [&](VertexId a, VertexId b, VertexId) {
        ++s.triangle_count;
        const std::uint64_t t = ++s.assigned_[edge_key(a, b)];
        s.max_assigned_count = std::max(s.max_assigned_count, t);
    });

    s.degeneracy = compute_degeneracy(g);
    s.connected = is_connected(g);
    return s;
}

bool is_connected(const Graph& g) {
    const std::uint64_t n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<VertexId> queue{0};
    seen[0] = true;
    std::uint64_t reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (VertexId w : g.neighbors(queue[head])) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == n;
}

} // namespace tetris
