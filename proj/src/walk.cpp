#include "tetris/walk.hpp"

#include <algorithm>
#include <stdexcept>

namespace tetris {

WalkTrace random_walk(OracleSession& session, std::uint64_t r, bool lazy) {
    if (r == 0) throw std::invalid_argument("walk length must be positive");

    WalkTrace trace;
    trace.vertices.reserve(r + 1);
    trace.vertex_degrees.reserve(r + 1);
    trace.edges.reserve(r);
    trace.edge_degrees.reserve(r);

    VertexId cur = session.seed_vertex();
    std::uint32_t d_cur = session.cached_degree(cur);
    trace.vertices.push_back(cur);
    trace.vertex_degrees.push_back(d_cur);

    while (trace.edges.size() < r) {
        // The lazy coin is local randomness, not a query; only actual
        // moves collect an edge.
        if (lazy && (session.rng().next_u64() & 1u)) continue;
        const VertexId next = session.random_neighbor(cur);
        const std::uint32_t d_next = session.cached_degree(next);
        trace.vertices.push_back(next);
        trace.vertex_degrees.push_back(d_next);
        trace.edges.emplace_back(cur, next);
        const std::uint32_t d_e = std::min(d_cur, d_next);
        trace.edge_degrees.push_back(d_e);
        trace.degree_sum += d_e;
        cur = next;
        d_cur = d_next;
    }
    return trace;
}

WeightedIndexSampler::WeightedIndexSampler(
    std::span<const std::uint32_t> weights) {
    if (weights.empty())
        throw std::invalid_argument("sampler needs at least one weight");
    prefix_.reserve(weights.size());
    std::uint64_t running = 0;
    for (std::uint32_t w : weights) {
        running += w;
        prefix_.push_back(running);
    }
    if (running == 0)
        throw std::invalid_argument("sampler weights sum to zero");
}

std::size_t WeightedIndexSampler::position_for_offset(
    std::uint64_t offset) const {
    if (offset >= prefix_.back())
        throw std::out_of_range("sampler offset beyond total weight");
    return static_cast<std::size_t>(
        std::upper_bound(prefix_.begin(), prefix_.end(), offset) -
        prefix_.begin());
}

std::size_t WeightedIndexSampler::draw(Rng& rng) const {
    return position_for_offset(rng.below(prefix_.back()));
}

std::vector<std::vector<std::size_t>> stride_partition(const WalkTrace& trace,
                                                       std::uint32_t t_hat) {
    if (t_hat == 0) throw std::invalid_argument("stride must be positive");
    if (trace.length() < t_hat)
        throw std::invalid_argument("walk too short for stride");
    std::vector<std::vector<std::size_t>> strata(t_hat);
    for (std::uint32_t i = 0; i < t_hat; ++i) {
        strata[i].reserve(trace.length() / t_hat + 1);
        for (std::size_t pos = i; pos < trace.length(); pos += t_hat)
            strata[i].push_back(pos);
    }
    return strata;
}

} // namespace tetris
