#ifndef TETRIS_BASELINES_HPP
#define TETRIS_BASELINES_HPP

#include <cstdint>

#include "tetris/estimator.hpp"

namespace tetris {

// Result of one baseline run: the estimate, the ledger, and the
// algorithm-specific diagnostics needed to audit query accounting and
// normalization choices.
struct BaselineOutput {
    double estimate = 0.0;
    QueryLedger ledger;
    double edge_count_used = 0.0;   // m̄ (or hook) where applicable

    // vertex-mcmc
    double success_fraction = 0.0;          // p̂
    std::uint64_t wedge_samples = 0;
    std::uint64_t wedge_resample_queries = 0;  // extra draws to get distinct pairs
    double wedge_count_used = 0.0;          // Ŵ (or hook)

    // srw
    std::uint64_t triples_tested = 0;
    std::uint64_t closed_triples = 0;
    double weighted_triple_sum = 0.0;       // Σ d_mid over closed triples

    // rws
    std::uint64_t subgraph_triangles = 0;
    double multigraph_triangles = 0.0;
    double keep_probability = 0.0;          // p = r / m̄
    bool probability_clamped = false;

    // serwc
    std::uint64_t incident_triangle_sum = 0;
};

// Metropolis-Hastings acceptance for a move from a vertex of degree
// d_from to one of degree d_to when targeting the wedge-proportional
// distribution; moving off a wedge-free vertex is always accepted.
double mh_acceptance(std::uint32_t d_from, std::uint32_t d_to);

// MH walk over vertices targeting π(v) ∝ C(d_v,2); at every step two
// distinct uniform neighbors of the current vertex are tested for an
// edge, and the success fraction is scaled by Ŵ/3.
BaselineOutput vertex_mcmc(const Graph& g, const EstimatorConfig& cfg,
                           const RunOptions& opts = {});

// Tests every three consecutive walk vertices for a closing edge and
// importance-weights closures by the middle degree.
BaselineOutput srw(const Graph& g, const EstimatorConfig& cfg,
                   const RunOptions& opts = {});

// Counts triangles in the subgraph collected by the walk and rescales
// by the cube of the effective sampling probability.
BaselineOutput rws(const Graph& g, const EstimatorConfig& cfg,
                   const RunOptions& opts = {});

// Counts triangles incident on every walk edge by enumerating the
// lower-degree endpoint's neighborhood with indexed-neighbor queries.
BaselineOutput serwc(const Graph& g, const EstimatorConfig& cfg,
                     const RunOptions& opts = {});

// Ŵ = m̄ · mean over post-step walk vertices of (d(v) - 1); unbiased
// under the walk's stationary vertex distribution.
double wedge_count_estimate(const WalkTrace& trace,
                            double edge_count_estimate);

} // namespace tetris

#endif // TETRIS_BASELINES_HPP
