#include "tetris/estimator.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "tetris/errors.hpp"

namespace tetris {

namespace {

void validate_config(const EstimatorConfig& cfg) {
    if (cfg.mixing_time_estimate == 0)
        throw std::invalid_argument("mixing time estimate must be positive");
    if (cfg.walk_length < cfg.mixing_time_estimate)
        throw std::invalid_argument(
            "walk length must be at least the mixing time estimate");
    if (cfg.subsample_count == 0)
        throw std::invalid_argument("subsample count must be positive");
}

} // namespace

bool subsample_trial(OracleSession& session, const WalkTrace& trace,
                     const WeightedIndexSampler& sampler) {
    const std::size_t pos = sampler.draw(session.rng());
    const auto [u, v] = trace.edges[pos];

    // Sample from the lower-degree endpoint's neighborhood. Path
    // degrees are already cached, so this costs no new degree queries.
    const VertexId base = session.precedes(u, v) ? u : v;
    const VertexId other = base == u ? v : u;

    const VertexId w = session.random_neighbor(base);
    // Charged even when w duplicates the far endpoint, so every trial
    // costs exactly one random-neighbor and one edge query.
    if (!session.edge_query(other, w)) return false;

    // {u,v,w} is a triangle; it counts only if it is assigned to the
    // sampled edge, i.e. w is the degree-order largest of the three.
    return session.precedes(u, w) && session.precedes(v, w);
}

std::uint64_t pairwise_collisions(std::span<const std::uint64_t> keys) {
    std::unordered_map<std::uint64_t, std::uint64_t> freq;
    freq.reserve(keys.size() * 2);
    for (std::uint64_t key : keys) ++freq[key];
    std::uint64_t collisions = 0;
    for (const auto& [key, f] : freq) collisions += f * (f - 1) / 2;
    return collisions;
}

double edge_count_estimator(const WalkTrace& trace, std::uint32_t t_hat) {
    if (trace.length() == 0)
        throw std::invalid_argument("empty walk trace");
    const auto strata = stride_partition(trace, t_hat);

    double sum = 0.0;
    std::uint32_t used = 0;
    std::vector<std::uint64_t> keys;
    for (const auto& stratum : strata) {
        keys.clear();
        keys.reserve(stratum.size());
        for (std::size_t pos : stratum) {
            const auto [u, v] = trace.edges[pos];
            keys.push_back(edge_key(u, v));
        }
        const std::uint64_t c = pairwise_collisions(keys);
        if (c == 0) continue;  // collision-free strata carry no signal
        const double k = static_cast<double>(stratum.size());
        sum += k * (k - 1) / 2.0 / static_cast<double>(c);
        ++used;
    }
    if (used == 0)
        throw InsufficientCollisions(
            "no stratum saw an edge collision; the walk is too short "
            "relative to the graph's edge count");
    return sum / used;
}

TetrisOutput tetris_estimate(const Graph& g, const EstimatorConfig& cfg,
                             const RunOptions& opts) {
    validate_config(cfg);
    OracleSession session(g, cfg.seed_vertex, cfg.rng_seed,
                          opts.strict_oracle);

    const WalkTrace trace = random_walk(session, cfg.walk_length,
                                        opts.lazy_walk);
    const WeightedIndexSampler sampler = build_sampler(trace);

    std::uint64_t successes = 0;
    for (std::uint64_t i = 0; i < cfg.subsample_count; ++i)
        successes += subsample_trial(session, trace, sampler) ? 1 : 0;

    TetrisOutput out;
    out.subsample_mean = static_cast<double>(successes) /
                         static_cast<double>(cfg.subsample_count);
    out.walk_degree_sum = trace.degree_sum;
    out.edge_count_estimate =
        opts.exact_edge_count
            ? *opts.exact_edge_count
            : edge_count_estimator(trace, cfg.mixing_time_estimate);
    out.estimate = out.edge_count_estimate /
                   static_cast<double>(cfg.walk_length) *
                   static_cast<double>(out.walk_degree_sum) *
                   out.subsample_mean;
    out.ledger = session.ledger();

    if (out.ledger.countable() != cfg.walk_length + 2 * cfg.subsample_count)
        throw std::logic_error("query accounting broke the r + 2*ell contract");
    return out;
}

EstimatorConfig plan_parameters(const GraphStats& stats,
                                std::uint32_t mixing_time_estimate,
                                double epsilon, double c) {
    if (stats.triangle_count == 0)
        throw std::invalid_argument("cannot plan for a triangle-free graph");
    if (!(epsilon > 0.0 && epsilon <= 0.5))
        throw std::invalid_argument("epsilon must lie in (0, 1/2]");
    if (!(c > 6.0))
        throw std::invalid_argument("constant c must exceed 6");
    if (mixing_time_estimate == 0)
        throw std::invalid_argument("mixing time estimate must be positive");

    const double n = static_cast<double>(stats.vertex_count);
    const double m = static_cast<double>(stats.edge_count);
    const double triangles = static_cast<double>(stats.triangle_count);
    const double t_emax = static_cast<double>(stats.max_assigned_count);
    const double d_e = static_cast<double>(stats.degree_sum_over_edges);
    const double t_mix = static_cast<double>(mixing_time_estimate);
    const double log_n = std::log2(n);

    const double walk_term =
        (log_n / (epsilon * epsilon)) * (m * t_mix * t_emax / triangles);
    const double edge_term =
        (log_n / (epsilon * epsilon)) * t_mix * std::sqrt(m);
    const double subsample_term =
        (c * log_n * log_n / (epsilon * epsilon * epsilon)) *
        (d_e / triangles);

    EstimatorConfig cfg;
    cfg.walk_length =
        static_cast<std::uint64_t>(std::ceil(std::max(walk_term, edge_term)));
    cfg.subsample_count =
        static_cast<std::uint64_t>(std::ceil(subsample_term));
    cfg.mixing_time_estimate = mixing_time_estimate;
    return cfg;
}

} // namespace tetris
