#ifndef TETRIS_BENCH_HPP
#define TETRIS_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tetris/baselines.hpp"
#include "tetris/estimator.hpp"

namespace tetris {

// One trial's outcome with full query accounting. Failed runs carry the
// error string instead of an estimate and are never silently dropped.
struct RunRecord {
    std::string graph;
    std::string algo;
    std::uint64_t walk_length = 0;      // r
    std::uint64_t subsample_count = 0;  // ell (tetris only; 0 otherwise)
    std::uint32_t mixing_time_estimate = 0;
    VertexId seed_vertex = 0;
    std::uint64_t rng_seed = 0;
    std::uint32_t run_id = 0;
    std::optional<double> estimate;
    std::optional<double> true_triangles;
    std::optional<double> rel_err_pct;  // |T - estimate| * 100 / T
    std::uint64_t rn_queries = 0;
    std::uint64_t deg_queries = 0;
    std::uint64_t edge_queries = 0;
    std::uint64_t idx_queries = 0;
    double query_frac_pct = 0.0;        // countable * 100 / 2m
    int bucket = -1;                    // degree bucket; -1 outside bucket runs
    std::string error;                  // empty on success
};

enum class SeedPolicy { FixedVertex, UniformRandom };

struct ExperimentPlan {
    std::vector<std::string> algos;       // tetris, vertex-mcmc, srw, rws, serwc
    std::vector<std::uint64_t> walk_lengths;
    double subsample_fraction = 0.05;     // ell = round(frac * r), min 1
    std::uint32_t mixing_time_estimate = 25;
    std::uint32_t repeats = 100;
    SeedPolicy seed_policy = SeedPolicy::UniformRandom;
    VertexId fixed_seed_vertex = 0;
    std::uint64_t master_seed = 1;
    bool strict_oracle = false;
    bool lazy_walk = false;
    bool rws_count_multiplicity = false;
    int jobs = 1;
};

// Graph plus the metadata the harness needs; true_triangles is optional
// so huge graphs can skip exact counting.
struct ExperimentContext {
    const Graph* graph = nullptr;
    std::string graph_name;
    std::optional<double> true_triangles;
};

std::uint64_t subsample_count_for(double fraction, std::uint64_t r);
double query_fraction_pct(std::uint64_t countable, std::uint64_t m);

// Runs every (algo, r, repeat) combination with per-run derived seeds;
// repeats run concurrently up to plan.jobs with deterministic output
// order regardless of scheduling.
std::vector<RunRecord> run_experiment(const ExperimentContext& ctx,
                                      const ExperimentPlan& plan);

// Robustness protocol: vertices are bucketed by floor(log10 degree),
// up to 4 are drawn uniformly per non-empty bucket (all of them when
// fewer, flagged via the warnings vector), and the full repeat protocol
// runs per seed with records tagged by bucket.
std::vector<RunRecord> seed_bucket_experiment(
    const ExperimentContext& ctx, const ExperimentPlan& plan,
    std::vector<std::string>* warnings = nullptr);

struct SummaryRow {
    std::string graph;
    std::string algo;
    std::uint64_t walk_length = 0;
    int bucket = -1;
    VertexId seed_vertex = 0;
    std::uint64_t runs_ok = 0;
    std::uint64_t runs_failed = 0;
    double median_rel_err_pct = 0.0;
    double max_rel_err_pct = 0.0;
    double mean_rel_err_pct = 0.0;
    double stddev_rel_err_pct = 0.0;
    double mean_query_frac_pct = 0.0;
};

// Per (graph, algo, r, bucket, seed) statistics over successful records;
// groups with no successful record are omitted with a warning.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records,
                                  std::vector<std::string>* warnings = nullptr);

// Deterministic CSV: header then one row per record, sorted by
// (algo, r, bucket, seed, run_id), RFC-4180 quoting, floats with six
// significant digits.
void emit_csv(const std::vector<RunRecord>& records, std::ostream& out);
void emit_csv(const std::vector<SummaryRow>& rows, std::ostream& out);

// Recomputes stats with a sidecar cache next to the graph file, keyed
// by the file's content hash.
GraphStats load_or_compute_stats(const std::string& graph_path,
                                 const Graph& g, bool use_cache = true);

} // namespace tetris

#endif // TETRIS_BENCH_HPP
