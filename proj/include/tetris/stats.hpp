#ifndef TETRIS_STATS_HPP
#define TETRIS_STATS_HPP

#include <cstdint>
#include <functional>
#include <unordered_map>

#include "tetris/graph.hpp"

namespace tetris {

// Ground-truth structural statistics of a graph. Triangles are counted
// by degree-ordered forward counting; each triangle is assigned to the
// edge joining its two smallest vertices under the degree order, and
// the per-edge assigned counts are retained.
class GraphStats {
public:
    std::uint64_t vertex_count = 0;           // n
    std::uint64_t edge_count = 0;             // m
    std::uint64_t triangle_count = 0;         // total triangles
    std::uint64_t degree_sum_over_edges = 0;  // sum over edges of min endpoint degree
    std::uint64_t wedge_count = 0;            // sum over vertices of C(d,2)
    std::uint64_t max_assigned_count = 0;     // max per-edge assigned triangles
    std::uint32_t degeneracy = 0;
    bool connected = false;

    // Triangles assigned to edge {u,v}; throws on non-edges. Only
    // available when computed from a graph (not from a stats cache).
    std::uint64_t assigned_count(VertexId u, VertexId v) const;
    bool has_assigned_counts() const { return graph_ != nullptr; }

private:
    friend GraphStats compute_stats(const Graph& g);
    friend class StatsCacheAccess;

    const Graph* graph_ = nullptr;
    std::unordered_map<std::uint64_t, std::uint32_t> assigned_;
};

// Full pass over the graph: exact triangle count with per-edge
// assignment, degree-sum, wedge count, degeneracy (min-degree peeling)
// and connectivity. The result borrows the graph for edge validation.
GraphStats compute_stats(const Graph& g);

// Enumerates each triangle once as (a, b, c) with a ≺ b ≺ c in the
// degree order.
void for_each_triangle(
    const Graph& g,
    const std::function<void(VertexId, VertexId, VertexId)>& fn);

std::uint32_t compute_degeneracy(const Graph& g);

bool is_connected(const Graph& g);

} // namespace tetris

#endif // TETRIS_STATS_HPP
