#include "tetris/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <stdexcept>
#include <string>

#include "tetris/errors.hpp"

namespace tetris {

std::uint32_t Graph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    // Search the shorter adjacency list.
    if (degree(u) > degree(v)) std::swap(u, v);
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

bool Graph::precedes(VertexId u, VertexId v) const {
    if (u == v)
        throw std::invalid_argument("degree order is strict: u == v");
    const std::uint32_t du = degree(u);
    const std::uint32_t dv = degree(v);
    return du != dv ? du < dv : u < v;
}

std::uint32_t Graph::edge_degree(VertexId u, VertexId v) const {
    if (!has_edge(u, v))
        throw std::invalid_argument("edge_degree: {" + std::to_string(u) +
                                    "," + std::to_string(v) +
                                    "} is not an edge");
    return std::min(degree(u), degree(v));
}

VertexId Graph::edge_base(VertexId u, VertexId v) const {
    if (!has_edge(u, v))
        throw std::invalid_argument("edge_base: {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} is not an edge");
    return precedes(u, v) ? u : v;
}

void Graph::check_vertex(VertexId v) const {
    if (v >= vertex_count())
        throw std::out_of_range("vertex id " + std::to_string(v) +
                                " out of range (n=" +
                                std::to_string(vertex_count()) + ")");
}

Graph Graph::from_edges(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& raw_edges,
    LoadReport* report) {
    LoadReport local;
    LoadReport& rep = report ? *report : local;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    edges.reserve(raw_edges.size());
    for (auto [a, b] : raw_edges) {
        if (a == b) {
            ++rep.self_loops_dropped;
            continue;
        }
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    rep.duplicate_edges_dropped =
        static_cast<std::uint64_t>(edges.end() - last);
    edges.erase(last, edges.end());

    if (edges.empty())
        throw std::invalid_argument("graph has no edges after cleanup");

    // Dense remap in sorted label order, so the graph is independent of
    // the edge order in the input.
    std::vector<std::uint64_t> labels;
    labels.reserve(edges.size() * 2);
    for (const auto& [a, b] : edges) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    const std::uint64_t n = labels.size();
    Graph g;
    g.labels_ = std::move(labels);
    auto dense_id = [&g](std::uint64_t raw) {
        return static_cast<VertexId>(
            std::lower_bound(g.labels_.begin(), g.labels_.end(), raw) -
            g.labels_.begin());
    };
    g.offsets_.assign(n + 1, 0);
    for (const auto& [a, b] : edges) {
        ++g.offsets_[dense_id(a) + 1];
        ++g.offsets_[dense_id(b) + 1];
    }
    for (std::uint64_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.neighbors_.resize(edges.size() * 2);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(),
                                      g.offsets_.end() - 1);
    for (const auto& [a, b] : edges) {
        const VertexId u = dense_id(a);
        const VertexId v = dense_id(b);
        g.neighbors_[cursor[u]++] = v;
        g.neighbors_[cursor[v]++] = u;
    }
    for (std::uint64_t v = 0; v < n; ++v)
        std::sort(g.neighbors_.begin() + g.offsets_[v],
                  g.neighbors_.begin() + g.offsets_[v + 1]);
    return g;
}

Graph Graph::from_csr(std::vector<std::uint64_t> offsets,
                      std::vector<VertexId> neighbors,
                      std::vector<std::uint64_t> labels) {
    if (offsets.empty() || offsets.front() != 0 ||
        offsets.back() != neighbors.size() ||
        labels.size() != offsets.size() - 1)
        throw std::invalid_argument("inconsistent CSR arrays");
    Graph g;
    g.offsets_ = std::move(offsets);
    g.neighbors_ = std::move(neighbors);
    g.labels_ = std::move(labels);
    return g;
}

namespace {

bool parse_u64(const std::string& token, std::uint64_t& out) {
    if (token.empty()) return false;
    std::uint64_t value = 0;
    for (char ch : token) {
        if (ch < '0' || ch > '9') return false;
        const std::uint64_t digit = static_cast<std::uint64_t>(ch - '0');
        if (value > (UINT64_MAX - digit) / 10) return false;
        value = value * 10 + digit;
    }
    out = value;
    return true;
}

} // namespace

Graph load_edge_list(std::istream& in, LoadReport* report) {
    LoadReport local;
    LoadReport& rep = report ? *report : local;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        ++rep.lines_read;
        std::size_t pos = 0;
        while (pos < line.size() &&
               std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
        if (pos == line.size() || line[pos] == '#' || line[pos] == '%')
            continue;

        std::uint64_t endpoints[2];
        for (int k = 0; k < 2; ++k) {
            while (pos < line.size() &&
                   std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            std::size_t start = pos;
            while (pos < line.size() &&
                   !std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            if (start == pos)
                throw ParseError("expected two vertex labels", line_no);
            if (!parse_u64(line.substr(start, pos - start), endpoints[k]))
                throw ParseError("non-integer token '" +
                                     line.substr(start, pos - start) + "'",
                                 line_no);
        }
        raw.emplace_back(endpoints[0], endpoints[1]);
    }
    if (raw.empty())
        throw std::invalid_argument("edge list contains no edges");
    return Graph::from_edges(raw, &rep);
}

std::uint64_t brute_force_triangles(const Graph& g,
                                    std::uint64_t max_vertices) {
    const std::uint64_t n = g.vertex_count();
    if (n > max_vertices)
        throw std::invalid_argument(
            "brute_force_triangles: graph too large (n=" + std::to_string(n) +
            " > cap " + std::to_string(max_vertices) + ")");
    std::uint64_t count = 0;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (VertexId c = b + 1; c < n; ++c)
                if (g.has_edge(a, c) && g.has_edge(b, c)) ++count;
        }
    return count;
}

std::uint64_t triangles_on_edge(const Graph& g, VertexId u, VertexId v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("triangles_on_edge: not an edge");
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::uint64_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

} // namespace tetris
