#ifndef TETRIS_WALK_HPP
#define TETRIS_WALK_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tetris/oracle.hpp"

namespace tetris {

// The ordered multiset R of edges on a random walk, with the per-edge
// degree d_e = min endpoint degree and the running sum d_R. Repeated
// edges occupy distinct positions.
struct WalkTrace {
    std::vector<VertexId> vertices;              // r+1 visited vertices
    std::vector<std::uint32_t> vertex_degrees;   // degree per visited vertex
    std::vector<std::pair<VertexId, VertexId>> edges;  // r edges in walk order
    std::vector<std::uint32_t> edge_degrees;     // d_e per position
    std::uint64_t degree_sum = 0;                // d_R

    std::size_t length() const { return edges.size(); }
};

// Walks until r edges are collected, starting from the session's seed.
// Costs exactly r random-neighbor queries plus one degree query per
// newly seen vertex. With lazy=true each step first flips a free coin
// and stays put on heads; only actual moves collect edges and queries.
WalkTrace random_walk(OracleSession& session, std::uint64_t r,
                      bool lazy = false);

// Draws positions of a walk trace with probability exactly
// d_e / d_R, via prefix sums over the integer edge degrees.
class WeightedIndexSampler {
public:
    explicit WeightedIndexSampler(std::span<const std::uint32_t> weights);

    std::uint64_t total_weight() const { return prefix_.back(); }
    std::size_t size() const { return prefix_.size(); }

    // Position whose weight interval contains offset in [0, total).
    std::size_t position_for_offset(std::uint64_t offset) const;

    std::size_t draw(Rng& rng) const;

private:
    std::vector<std::uint64_t> prefix_;
};

inline WeightedIndexSampler build_sampler(const WalkTrace& trace) {
    return WeightedIndexSampler(trace.edge_degrees);
}

// Splits positions 0..r-1 into t_hat interleaved subsequences: the i-th
// (0-based) holds positions i, i+t_hat, i+2*t_hat, ... Throws when the
// trace is shorter than the stride.
std::vector<std::vector<std::size_t>> stride_partition(
    const WalkTrace& trace, std::uint32_t t_hat);

} // namespace tetris

#endif // TETRIS_WALK_HPP
