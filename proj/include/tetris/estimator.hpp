#ifndef TETRIS_ESTIMATOR_HPP
#define TETRIS_ESTIMATOR_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "tetris/stats.hpp"
#include "tetris/walk.hpp"

namespace tetris {

// Parameters of one estimator run.
struct EstimatorConfig {
    std::uint64_t walk_length = 0;          // r
    std::uint64_t subsample_count = 0;      // number of subsample trials
    std::uint32_t mixing_time_estimate = 1; // stride for the edge estimator
    std::uint64_t rng_seed = 0;
    VertexId seed_vertex = 0;
};

// Knobs shared by all estimator entry points. The exact_* fields are
// test hooks that bypass the corresponding estimated normalization.
struct RunOptions {
    bool strict_oracle = false;
    bool lazy_walk = false;
    bool rws_count_multiplicity = false;
    std::optional<double> exact_edge_count;
    std::optional<double> exact_wedge_count;
};

struct TetrisOutput {
    double estimate = 0.0;             // X
    double subsample_mean = 0.0;       // Y, fraction of successful trials
    std::uint64_t walk_degree_sum = 0; // d_R
    double edge_count_estimate = 0.0;  // m̄ (or the test hook value)
    QueryLedger ledger;
};

// One subsample trial: draw a walk edge with probability d_e/d_R, take a
// uniform neighbor w of the lower-degree endpoint, test whether {e,w}
// closes a triangle, and if so whether that triangle is assigned to e
// (w follows both endpoints in the degree order). Costs exactly one
// random-neighbor query and one edge query; the edge query is issued
// even when w collides with the far endpoint so every trial charges the
// same budget.
bool subsample_trial(OracleSession& session, const WalkTrace& trace,
                     const WeightedIndexSampler& sampler);

// Σ_f C(f,2) over the frequency table of the keys.
std::uint64_t pairwise_collisions(std::span<const std::uint64_t> keys);

// Collision-based edge count estimate: partitions the trace into
// t_hat interleaved strata, counts pairwise collisions per stratum, and
// averages C(|R_i|,2)/c_i over strata that saw a collision. Throws
// InsufficientCollisions when every stratum is collision-free.
double edge_count_estimator(const WalkTrace& trace, std::uint32_t t_hat);

// The full pipeline: walk, degree-weighted subsampling, edge count
// estimate from the same trace, and X = (m̄/r) · d_R · Y.
TetrisOutput tetris_estimate(const Graph& g, const EstimatorConfig& cfg,
                             const RunOptions& opts = {});

// Theory-driven parameter choice: r from the larger of the walk-length
// and edge-estimator requirements, subsample count from the
// concentration requirement. Requires a graph with triangles,
// epsilon in (0, 1/2) and c > 6. Used by tests, not benchmarks.
EstimatorConfig plan_parameters(const GraphStats& stats,
                                std::uint32_t mixing_time_estimate,
                                double epsilon, double c);

} // namespace tetris

#endif // TETRIS_ESTIMATOR_HPP
