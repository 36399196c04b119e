#ifndef TETRIS_ORACLE_HPP
#define TETRIS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "tetris/graph.hpp"
#include "tetris/rng.hpp"

namespace tetris {

// Per-session query counters. Degree queries are tracked but excluded
// from the reported budget: every algorithm queries the degree of each
// vertex it sees, so they do not distinguish algorithms.
struct QueryLedger {
    std::uint64_t random_neighbor_queries = 0;
    std::uint64_t degree_queries = 0;
    std::uint64_t edge_queries = 0;
    std::uint64_t indexed_neighbor_queries = 0;

    std::uint64_t countable() const {
        return random_neighbor_queries + edge_queries +
               indexed_neighbor_queries;
    }
};

// Mediates all estimator access to the graph through the restricted
// query interface: a seed vertex plus random-neighbor, degree, edge and
// indexed-neighbor queries, every one of them counted. In strict mode
// queries about vertices that have not been revealed by earlier answers
// throw AccessViolation; fast mode skips the bookkeeping.
class OracleSession {
public:
    OracleSession(const Graph& g, VertexId seed_vertex,
                  std::uint64_t rng_seed, bool strict = false);

    VertexId seed_vertex() const { return seed_; }
    const QueryLedger& ledger() const { return ledger_; }
    bool strict() const { return strict_; }

    // Uniform random element of N(v); the answer becomes revealed.
    VertexId random_neighbor(VertexId v);

    std::uint32_t degree_query(VertexId v);

    // Whether {u,v} is an edge; (v,v) is benignly false. Counted even
    // for degenerate pairs so per-trial costs stay constant.
    bool edge_query(VertexId u, VertexId v);

    // 1-based i-th neighbor in the session's fixed (sorted) order, or
    // nullopt when i exceeds the degree. The query is charged either way.
    std::optional<VertexId> indexed_neighbor(VertexId v, std::uint64_t i);

    // Degree via degree_query, but each vertex is charged at most once
    // per session.
    std::uint32_t cached_degree(VertexId v);

    // Degree order on two already-seen vertices, using cached degrees.
    bool precedes(VertexId u, VertexId v);

    Rng& rng() { return rng_; }

private:
    void require_revealed(VertexId v, const char* what) const;
    void reveal(VertexId v);

    const Graph& graph_;
    VertexId seed_;
    QueryLedger ledger_;
    Rng rng_;
    bool strict_;
    std::unordered_set<VertexId> revealed_;
    std::unordered_map<VertexId, std::uint32_t> degree_cache_;
};

} // namespace tetris

#endif // TETRIS_ORACLE_HPP
