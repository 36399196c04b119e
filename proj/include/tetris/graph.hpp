#ifndef TETRIS_GRAPH_HPP
#define TETRIS_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace tetris {

using VertexId = std::uint32_t;

// Canonical 64-bit key for an undirected edge (order-insensitive).
inline std::uint64_t edge_key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

struct LoadReport {
    std::uint64_t lines_read = 0;
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t duplicate_edges_dropped = 0;
};

// Immutable simple undirected graph in CSR form. Vertex ids are dense
// 0..n-1; adjacency lists are strictly increasing; the raw input labels
// are kept for reporting.
class Graph {
public:
    std::uint64_t vertex_count() const { return offsets_.size() - 1; }
    std::uint64_t edge_count() const { return neighbors_.size() / 2; }

    std::uint32_t degree(VertexId v) const;
    std::span<const VertexId> neighbors(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;

    // Degree-based strict total order: d(u) < d(v), ties by id.
    bool precedes(VertexId u, VertexId v) const;

    // min(d(u), d(v)) for an existing edge {u,v}.
    std::uint32_t edge_degree(VertexId u, VertexId v) const;
    // The endpoint realizing edge_degree (ties by the degree order);
    // its neighborhood is the edge's sampling neighborhood.
    VertexId edge_base(VertexId u, VertexId v) const;

    std::uint64_t original_label(VertexId v) const { return labels_[v]; }
    const std::vector<std::uint64_t>& labels() const { return labels_; }

    const std::vector<std::uint64_t>& offsets() const { return offsets_; }
    const std::vector<VertexId>& adjacency() const { return neighbors_; }

    // Builds a graph from raw labeled pairs: labels are densely remapped
    // in sorted label order; self-loops and duplicates are dropped and
    // counted in the report. Throws std::invalid_argument if no edge
    // survives.
    static Graph from_edges(
        const std::vector<std::pair<std::uint64_t, std::uint64_t>>& raw_edges,
        LoadReport* report = nullptr);

    // Wraps pre-validated CSR arrays (binary cache loader).
    static Graph from_csr(std::vector<std::uint64_t> offsets,
                          std::vector<VertexId> neighbors,
                          std::vector<std::uint64_t> labels);

private:
    Graph() = default;

    void check_vertex(VertexId v) const;

    std::vector<std::uint64_t> offsets_;   // n+1 entries
    std::vector<VertexId> neighbors_;      // 2m entries, sorted per vertex
    std::vector<std::uint64_t> labels_;    // dense id -> raw label
};

// Parses whitespace-separated label pairs, one edge per line; lines
// starting with '#' or '%' are comments. Throws ParseError with the
// line number on malformed input, std::invalid_argument if the stream
// contains no edges.
Graph load_edge_list(std::istream& in, LoadReport* report = nullptr);

// Independent O(n^3) triangle oracle for testing; refuses graphs with
// more than max_vertices vertices.
std::uint64_t brute_force_triangles(const Graph& g,
                                    std::uint64_t max_vertices = 2000);

// |N(u) ∩ N(v)| for an existing edge: incident (not assigned) triangles.
std::uint64_t triangles_on_edge(const Graph& g, VertexId u, VertexId v);

} // namespace tetris

#endif // TETRIS_GRAPH_HPP
