#include "tetris/oracle.hpp"

#include <stdexcept>
#include <string>

#include "tetris/errors.hpp"

namespace tetris {

OracleSession::OracleSession(const Graph& g, VertexId seed_vertex,
                             std::uint64_t rng_seed, bool strict)
    : graph_(g), seed_(seed_vertex), rng_(rng_seed), strict_(strict) {
    if (graph_.degree(seed_vertex) == 0)
        throw std::invalid_argument("seed vertex " +
                                    std::to_string(seed_vertex) +
                                    " is isolated; a walk cannot start");
    reveal(seed_vertex);
}

VertexId OracleSession::random_neighbor(VertexId v) {
    require_revealed(v, "random_neighbor");
    const std::uint32_t d = graph_.degree(v);
    if (d == 0)
        throw std::invalid_argument("random_neighbor on degree-0 vertex");
    ++ledger_.random_neighbor_queries;
    const VertexId w = graph_.neighbors(v)[rng_.below(d)];
    reveal(w);
    return w;
}

std::uint32_t OracleSession::degree_query(VertexId v) {
    require_revealed(v, "degree_query");
    ++ledger_.degree_queries;
    return graph_.degree(v);
}

bool OracleSession::edge_query(VertexId u, VertexId v) {
    require_revealed(u, "edge_query");
    require_revealed(v, "edge_query");
    ++ledger_.edge_queries;
    if (u == v) return false;
    return graph_.has_edge(u, v);
}

std::optional<VertexId> OracleSession::indexed_neighbor(VertexId v,
                                                        std::uint64_t i) {
    if (i == 0)
        throw std::invalid_argument("indexed_neighbor index is 1-based");
    require_revealed(v, "indexed_neighbor");
    ++ledger_.indexed_neighbor_queries;
    if (i > graph_.degree(v)) return std::nullopt;
    const VertexId w = graph_.neighbors(v)[i - 1];
    reveal(w);
    return w;
}

std::uint32_t OracleSession::cached_degree(VertexId v) {
    auto it = degree_cache_.find(v);
    if (it != degree_cache_.end()) return it->second;
    const std::uint32_t d = degree_query(v);
    degree_cache_.emplace(v, d);
    return d;
}

bool OracleSession::precedes(VertexId u, VertexId v) {
    if (u == v)
        throw std::invalid_argument("degree order is strict: u == v");
    const std::uint32_t du = cached_degree(u);
    const std::uint32_t dv = cached_degree(v);
    return du != dv ? du < dv : u < v;
}

void OracleSession::require_revealed(VertexId v, const char* what) const {
    if (!strict_) return;
    if (!revealed_.contains(v))
        throw AccessViolation(std::string(what) + " on unrevealed vertex " +
                              std::to_string(v));
}

void OracleSession::reveal(VertexId v) {
    if (strict_) revealed_.insert(v);
}

} // namespace tetris
