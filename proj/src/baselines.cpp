#include "tetris/baselines.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "tetris/errors.hpp"
#include "tetris/stats.hpp"

namespace tetris {

namespace {

double resolve_edge_count(const WalkTrace& trace, const EstimatorConfig& cfg,
                          const RunOptions& opts) {
    return opts.exact_edge_count
               ? *opts.exact_edge_count
               : edge_count_estimator(trace, cfg.mixing_time_estimate);
}

} // namespace

double mh_acceptance(std::uint32_t d_from, std::uint32_t d_to) {
    const double wedges_from =
        static_cast<double>(d_from) * (d_from - 1) / 2.0;
    const double wedges_to = static_cast<double>(d_to) * (d_to - 1) / 2.0;
    if (wedges_from == 0.0) return 1.0;  // always leave a wedge-free vertex
    if (wedges_to == 0.0) return 0.0;
    return std::min(1.0, (wedges_to * d_from) / (wedges_from * d_to));
}

double wedge_count_estimate(const WalkTrace& trace,
                            double edge_count_estimate) {
    if (trace.vertices.size() < 2)
        throw std::invalid_argument("wedge estimate needs a non-empty walk");
    double sum = 0.0;
    for (std::size_t i = 1; i < trace.vertices.size(); ++i)
        sum += static_cast<double>(trace.vertex_degrees[i]) - 1.0;
    return edge_count_estimate * sum /
           static_cast<double>(trace.vertices.size() - 1);
}

BaselineOutput vertex_mcmc(const Graph& g, const EstimatorConfig& cfg,
                           const RunOptions& opts) {
    if (cfg.walk_length == 0)
        throw std::invalid_argument("walk length must be positive");
    OracleSession session(g, cfg.seed_vertex, cfg.rng_seed,
                          opts.strict_oracle);
    BaselineOutput out;

    // Pseudo-trace of the chain: post-step positions plus the edges of
    // accepted moves, reused for the normalization estimates.
    WalkTrace chain;
    VertexId cur = session.seed_vertex();
    std::uint32_t d_cur = session.cached_degree(cur);
    chain.vertices.push_back(cur);
    chain.vertex_degrees.push_back(d_cur);

    std::uint64_t closed = 0;
    for (std::uint64_t step = 0; step < cfg.walk_length; ++step) {
        // Metropolis-Hastings move targeting wedge-proportional mass.
        const VertexId proposal = session.random_neighbor(cur);
        const std::uint32_t d_prop = session.cached_degree(proposal);
        const double accept = mh_acceptance(d_cur, d_prop);
        if (accept >= 1.0 || session.rng().unit() < accept) {
            chain.edges.emplace_back(cur, proposal);
            const std::uint32_t d_e = std::min(d_cur, d_prop);
            chain.edge_degrees.push_back(d_e);
            chain.degree_sum += d_e;
            cur = proposal;
            d_cur = d_prop;
        }
        chain.vertices.push_back(cur);
        chain.vertex_degrees.push_back(d_cur);

        // Wedge test: two distinct uniform neighbors of the current
        // vertex. Coinciding draws are redrawn so the pair is uniform
        // over distinct neighbors; steps at degree < 2 carry no sample.
        if (d_cur < 2) continue;
        const VertexId w1 = session.random_neighbor(cur);
        VertexId w2 = session.random_neighbor(cur);
        while (w2 == w1) {
            w2 = session.random_neighbor(cur);
            ++out.wedge_resample_queries;
        }
        ++out.wedge_samples;
        if (session.edge_query(w1, w2)) ++closed;
    }

    out.success_fraction =
        out.wedge_samples == 0
            ? 0.0
            : static_cast<double>(closed) /
                  static_cast<double>(out.wedge_samples);

    if (opts.exact_wedge_count) {
        out.wedge_count_used = *opts.exact_wedge_count;
    } else {
        out.edge_count_used = resolve_edge_count(chain, cfg, opts);
        out.wedge_count_used =
            wedge_count_estimate(chain, out.edge_count_used);
    }
    out.estimate = out.success_fraction * out.wedge_count_used / 3.0;
    out.ledger = session.ledger();
    return out;
}

BaselineOutput srw(const Graph& g, const EstimatorConfig& cfg,
                   const RunOptions& opts) {
    if (cfg.walk_length < 2)
        throw std::invalid_argument("srw needs a walk of at least 2 steps");
    OracleSession session(g, cfg.seed_vertex, cfg.rng_seed,
                          opts.strict_oracle);
    BaselineOutput out;

    const WalkTrace trace =
        random_walk(session, cfg.walk_length, opts.lazy_walk);

    // Interior triples (v_{i-1}, v_i, v_{i+1}); backtracking triples
    // are skipped without spending an edge query.
    for (std::size_t i = 1; i + 1 < trace.vertices.size(); ++i) {
        const VertexId a = trace.vertices[i - 1];
        const VertexId c = trace.vertices[i + 1];
        if (a == c) continue;
        ++out.triples_tested;
        if (session.edge_query(a, c)) {
            ++out.closed_triples;
            out.weighted_triple_sum +=
                static_cast<double>(trace.vertex_degrees[i]);
        }
    }

    out.edge_count_used = resolve_edge_count(trace, cfg, opts);
    out.estimate = out.edge_count_used /
                   (3.0 * static_cast<double>(cfg.walk_length - 1)) *
                   out.weighted_triple_sum;
    out.ledger = session.ledger();
    return out;
}

BaselineOutput rws(const Graph& g, const EstimatorConfig& cfg,
                   const RunOptions& opts) {
    if (cfg.walk_length < 3)
        throw std::invalid_argument("rws needs a walk of at least 3 steps");
    OracleSession session(g, cfg.seed_vertex, cfg.rng_seed,
                          opts.strict_oracle);
    BaselineOutput out;

    const WalkTrace trace =
        random_walk(session, cfg.walk_length, opts.lazy_walk);

    std::unordered_map<std::uint64_t, std::uint64_t> multiplicity;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> collected;
    for (const auto& [u, v] : trace.edges) {
        if (++multiplicity[edge_key(u, v)] == 1)
            collected.emplace_back(u, v);
    }

    const Graph sample = Graph::from_edges(collected);
    std::uint64_t simple_count = 0;
    double multi_count = 0.0;
    for_each_triangle(sample, [&](VertexId a, VertexId b, VertexId c) {
        ++simple_count;
        const auto la = static_cast<VertexId>(sample.original_label(a));
        const auto lb = static_cast<VertexId>(sample.original_label(b));
        const auto lc = static_cast<VertexId>(sample.original_label(c));
        multi_count +=
            static_cast<double>(multiplicity.at(edge_key(la, lb))) *
            static_cast<double>(multiplicity.at(edge_key(lb, lc))) *
            static_cast<double>(multiplicity.at(edge_key(la, lc)));
    });
    out.subgraph_triangles = simple_count;
    out.multigraph_triangles = multi_count;

    const double count = opts.rws_count_multiplicity
                             ? multi_count
                             : static_cast<double>(simple_count);
    out.edge_count_used = resolve_edge_count(trace, cfg, opts);
    out.keep_probability =
        static_cast<double>(cfg.walk_length) / out.edge_count_used;
    if (out.keep_probability >= 1.0) {
        out.probability_clamped = true;
        out.estimate = count;
    } else {
        out.estimate = count / (out.keep_probability * out.keep_probability *
                                out.keep_probability);
    }
    out.ledger = session.ledger();
    return out;
}

BaselineOutput serwc(const Graph& g, const EstimatorConfig& cfg,
                     const RunOptions& opts) {
    if (cfg.walk_length == 0)
        throw std::invalid_argument("walk length must be positive");
    OracleSession session(g, cfg.seed_vertex, cfg.rng_seed,
                          opts.strict_oracle);
    BaselineOutput out;

    const WalkTrace trace =
        random_walk(session, cfg.walk_length, opts.lazy_walk);

    // For each walk edge, enumerate the lower-degree endpoint's
    // neighborhood (d_e indexed queries) and probe each neighbor
    // against the far endpoint (d_e edge queries).
    for (const auto& [u, v] : trace.edges) {
        const VertexId base = session.precedes(u, v) ? u : v;
        const VertexId other = base == u ? v : u;
        const std::uint32_t d_base = session.cached_degree(base);
        for (std::uint64_t i = 1; i <= d_base; ++i) {
            const VertexId w = *session.indexed_neighbor(base, i);
            if (session.edge_query(other, w)) ++out.incident_triangle_sum;
        }
    }

    out.edge_count_used = resolve_edge_count(trace, cfg, opts);
    out.estimate = out.edge_count_used /
                   (3.0 * static_cast<double>(cfg.walk_length)) *
                   static_cast<double>(out.incident_triangle_sum);
    out.ledger = session.ledger();
    return out;
}

} // namespace tetris
