#include "tetris/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "tetris/rng.hpp"

namespace tetris {

std::uint64_t subsample_count_for(double fraction, std::uint64_t r) {
    const auto ell = static_cast<std::uint64_t>(
        std::llround(fraction * static_cast<double>(r)));
    return std::max<std::uint64_t>(ell, 1);
}

double query_fraction_pct(std::uint64_t countable, std::uint64_t m) {
    return static_cast<double>(countable) * 100.0 /
           (2.0 * static_cast<double>(m));
}

namespace {

struct RunTask {
    std::string algo;
    EstimatorConfig cfg;
    std::uint32_t run_id = 0;
    int bucket = -1;
};

RunRecord execute_task(const ExperimentContext& ctx,
                       const ExperimentPlan& plan, const RunTask& task) {
    RunRecord rec;
    rec.graph = ctx.graph_name;
    rec.algo = task.algo;
    rec.walk_length = task.cfg.walk_length;
    rec.subsample_count = task.algo == "tetris" ? task.cfg.subsample_count : 0;
    rec.mixing_time_estimate = task.cfg.mixing_time_estimate;
    rec.seed_vertex = task.cfg.seed_vertex;
    rec.rng_seed = task.cfg.rng_seed;
    rec.run_id = task.run_id;
    rec.bucket = task.bucket;

    RunOptions opts;
    opts.strict_oracle = plan.strict_oracle;
    opts.lazy_walk = plan.lazy_walk;
    opts.rws_count_multiplicity = plan.rws_count_multiplicity;

    try {
        double estimate = 0.0;
        QueryLedger ledger;
        if (task.algo == "tetris") {
            const TetrisOutput out = tetris_estimate(*ctx.graph, task.cfg, opts);
            estimate = out.estimate;
            ledger = out.ledger;
        } else {
            BaselineOutput out;
            if (task.algo == "vertex-mcmc")
                out = vertex_mcmc(*ctx.graph, task.cfg, opts);
            else if (task.algo == "srw")
                out = srw(*ctx.graph, task.cfg, opts);
            else if (task.algo == "rws")
                out = rws(*ctx.graph, task.cfg, opts);
            else if (task.algo == "serwc")
                out = serwc(*ctx.graph, task.cfg, opts);
            else
                throw std::invalid_argument("unknown algorithm '" +
                                            task.algo + "'");
            estimate = out.estimate;
            ledger = out.ledger;
        }
        rec.estimate = estimate;
        rec.rn_queries = ledger.random_neighbor_queries;
        rec.deg_queries = ledger.degree_queries;
        rec.edge_queries = ledger.edge_queries;
        rec.idx_queries = ledger.indexed_neighbor_queries;
        rec.query_frac_pct =
            query_fraction_pct(ledger.countable(), ctx.graph->edge_count());
        if (ctx.true_triangles && *ctx.true_triangles > 0.0) {
            rec.true_triangles = *ctx.true_triangles;
            rec.rel_err_pct = std::abs(*ctx.true_triangles - estimate) *
                              100.0 / *ctx.true_triangles;
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

std::vector<RunRecord> execute_all(const ExperimentContext& ctx,
                                   const ExperimentPlan& plan,
                                   const std::vector<RunTask>& tasks) {
    std::vector<RunRecord> records(tasks.size());
    const int jobs =
        std::max(1, std::min<int>(plan.jobs,
                                  static_cast<int>(tasks.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            records[i] = execute_task(ctx, plan, tasks[i]);
        return records;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            records[i] = execute_task(ctx, plan, tasks[i]);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return records;
}

VertexId pick_seed_vertex(const ExperimentContext& ctx,
                          const ExperimentPlan& plan) {
    const Graph& g = *ctx.graph;
    if (plan.seed_policy == SeedPolicy::FixedVertex) {
        if (plan.fixed_seed_vertex >= g.vertex_count())
            throw std::invalid_argument("seed vertex out of range");
        return plan.fixed_seed_vertex;
    }
    Rng rng(derive_seed(plan.master_seed, fnv1a64("seed-vertex", 11)));
    VertexId v = static_cast<VertexId>(rng.below(g.vertex_count()));
    while (g.degree(v) == 0)
        v = static_cast<VertexId>(rng.below(g.vertex_count()));
    return v;
}

std::vector<RunTask> build_tasks(const ExperimentPlan& plan,
                                 VertexId seed_vertex, int bucket) {
    std::vector<RunTask> tasks;
    tasks.reserve(plan.algos.size() * plan.walk_lengths.size() *
                  plan.repeats);
    for (const std::string& algo : plan.algos) {
        const std::uint64_t algo_hash = fnv1a64(algo.data(), algo.size());
        for (const std::uint64_t r : plan.walk_lengths) {
            for (std::uint32_t rep = 0; rep < plan.repeats; ++rep) {
                RunTask task;
                task.algo = algo;
                task.run_id = rep;
                task.bucket = bucket;
                task.cfg.walk_length = r;
                task.cfg.subsample_count =
                    subsample_count_for(plan.subsample_fraction, r);
                task.cfg.mixing_time_estimate = plan.mixing_time_estimate;
                task.cfg.seed_vertex = seed_vertex;
                task.cfg.rng_seed = derive_seed(
                    plan.master_seed, algo_hash,
                    r ^ (static_cast<std::uint64_t>(seed_vertex) << 32), rep);
                tasks.push_back(std::move(task));
            }
        }
    }
    return tasks;
}

} // namespace

std::vector<RunRecord> run_experiment(const ExperimentContext& ctx,
                                      const ExperimentPlan& plan) {
    if (!ctx.graph) throw std::invalid_argument("experiment needs a graph");
    if (plan.repeats == 0)
        throw std::invalid_argument("repeats must be positive");
    if (plan.walk_lengths.empty() || plan.algos.empty())
        throw std::invalid_argument("empty sweep");
    const VertexId seed_vertex = pick_seed_vertex(ctx, plan);
    return execute_all(ctx, plan, build_tasks(plan, seed_vertex, -1));
}

std::vector<RunRecord> seed_bucket_experiment(
    const ExperimentContext& ctx, const ExperimentPlan& plan,
    std::vector<std::string>* warnings) {
    if (!ctx.graph) throw std::invalid_argument("experiment needs a graph");
    const Graph& g = *ctx.graph;

    // Bucket i holds vertices whose degree has i+1 decimal digits.
    std::vector<std::vector<VertexId>> buckets;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const std::uint32_t d = g.degree(v);
        if (d == 0) continue;
        std::size_t b = 0;
        for (std::uint32_t t = d; t >= 10; t /= 10) ++b;
        if (buckets.size() <= b) buckets.resize(b + 1);
        buckets[b].push_back(v);
    }

    std::vector<RunTask> tasks;
    for (std::size_t b = 0; b < buckets.size(); ++b) {
        auto& members = buckets[b];
        if (members.empty()) continue;
        std::vector<VertexId> chosen;
        if (members.size() <= 4) {
            chosen = members;
            if (members.size() < 4 && warnings)
                warnings->push_back("bucket " + std::to_string(b) +
                                    " has only " +
                                    std::to_string(members.size()) +
                                    " vertices; using all of them");
        } else {
            Rng rng(derive_seed(plan.master_seed, fnv1a64("bucket", 6), b));
            // Partial Fisher-Yates for 4 distinct picks.
            for (int k = 0; k < 4; ++k) {
                const std::size_t j =
                    k + static_cast<std::size_t>(
                            rng.below(members.size() - k));
                std::swap(members[k], members[j]);
                chosen.push_back(members[k]);
            }
        }
        for (VertexId seed_vertex : chosen) {
            auto batch =
                build_tasks(plan, seed_vertex, static_cast<int>(b));
            tasks.insert(tasks.end(), batch.begin(), batch.end());
        }
    }
    return execute_all(ctx, plan, tasks);
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records,
                                  std::vector<std::string>* warnings) {
    using Key = std::tuple<std::string, std::string, std::uint64_t, int,
                           VertexId>;
    std::vector<Key> keys;
    for (const auto& rec : records)
        keys.emplace_back(rec.graph, rec.algo, rec.walk_length, rec.bucket,
                          rec.seed_vertex);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    std::vector<SummaryRow> rows;
    for (const auto& key : keys) {
        SummaryRow row;
        std::tie(row.graph, row.algo, row.walk_length, row.bucket,
                 row.seed_vertex) = key;
        std::vector<double> errs;
        double frac_sum = 0.0;
        for (const auto& rec : records) {
            if (std::make_tuple(rec.graph, rec.algo, rec.walk_length,
                                rec.bucket, rec.seed_vertex) != key)
                continue;
            if (!rec.error.empty()) {
                ++row.runs_failed;
                continue;
            }
            ++row.runs_ok;
            frac_sum += rec.query_frac_pct;
            if (rec.rel_err_pct) errs.push_back(*rec.rel_err_pct);
        }
        if (row.runs_ok == 0) {
            if (warnings)
                warnings->push_back("group " + row.graph + "/" + row.algo +
                                    "/r=" + std::to_string(row.walk_length) +
                                    " has no successful runs; omitted");
            continue;
        }
        row.mean_query_frac_pct = frac_sum / static_cast<double>(row.runs_ok);
        if (!errs.empty()) {
            std::sort(errs.begin(), errs.end());
            const std::size_t k = errs.size();
            row.median_rel_err_pct =
                k % 2 ? errs[k / 2] : (errs[k / 2 - 1] + errs[k / 2]) / 2.0;
            row.max_rel_err_pct = errs.back();
            double mean = 0.0;
            for (double e : errs) mean += e;
            mean /= static_cast<double>(k);
            row.mean_rel_err_pct = mean;
            if (k > 1) {
                double ss = 0.0;
                for (double e : errs) ss += (e - mean) * (e - mean);
                row.stddev_rel_err_pct =
                    std::sqrt(ss / static_cast<double>(k - 1));
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

std::string fmt_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

} // namespace

void emit_csv(const std::vector<RunRecord>& records, std::ostream& out) {
    std::vector<const RunRecord*> sorted;
    sorted.reserve(records.size());
    for (const auto& rec : records) sorted.push_back(&rec);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const RunRecord* a, const RunRecord* b) {
                         return std::tie(a->graph, a->algo, a->walk_length,
                                         a->bucket, a->seed_vertex,
                                         a->run_id) <
                                std::tie(b->graph, b->algo, b->walk_length,
                                         b->bucket, b->seed_vertex,
                                         b->run_id);
                     });

    out << "graph,algo,r,ell,t_hat_mix,seed_vertex,rng_seed,run_id,estimate,"
           "true_T,rel_err_pct,rn_queries,deg_queries,edge_queries,"
           "idx_queries,query_frac_pct,bucket,error\n";
    for (const RunRecord* rec : sorted) {
        out << csv_escape(rec->graph) << ',' << csv_escape(rec->algo) << ','
            << rec->walk_length << ',' << rec->subsample_count << ','
            << rec->mixing_time_estimate << ',' << rec->seed_vertex << ','
            << rec->rng_seed << ',' << rec->run_id << ','
            << (rec->estimate ? fmt_double(*rec->estimate) : "") << ','
            << (rec->true_triangles ? fmt_double(*rec->true_triangles) : "")
            << ','
            << (rec->rel_err_pct ? fmt_double(*rec->rel_err_pct) : "") << ','
            << rec->rn_queries << ',' << rec->deg_queries << ','
            << rec->edge_queries << ',' << rec->idx_queries << ','
            << fmt_double(rec->query_frac_pct) << ',' << rec->bucket << ','
            << csv_escape(rec->error) << '\n';
    }
    if (!out) throw std::runtime_error("CSV write failed");
}

void emit_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
    out << "graph,algo,r,bucket,seed_vertex,runs_ok,runs_failed,"
           "median_rel_err_pct,max_rel_err_pct,mean_rel_err_pct,"
           "stddev_rel_err_pct,mean_query_frac_pct\n";
    for (const auto& row : rows) {
        out << csv_escape(row.graph) << ',' << csv_escape(row.algo) << ','
            << row.walk_length << ',' << row.bucket << ',' << row.seed_vertex
            << ',' << row.runs_ok << ',' << row.runs_failed << ','
            << fmt_double(row.median_rel_err_pct) << ','
            << fmt_double(row.max_rel_err_pct) << ','
            << fmt_double(row.mean_rel_err_pct) << ','
            << fmt_double(row.stddev_rel_err_pct) << ','
            << fmt_double(row.mean_query_frac_pct) << '\n';
    }
    if (!out) throw std::runtime_error("CSV write failed");
}

GraphStats load_or_compute_stats(const std::string& graph_path,
                                 const Graph& g, bool use_cache) {
    std::uint64_t content_hash = 0;
    {
        std::ifstream in(graph_path, std::ios::binary);
        if (in) {
            char buf[1 << 16];
            std::uint64_t h = 0xcbf29ce484222325ULL;
            while (in) {
                in.read(buf, sizeof(buf));
                h = fnv1a64(buf, static_cast<std::size_t>(in.gcount()), h);
            }
            content_hash = h;
        }
    }
    const std::string sidecar = graph_path + ".stats.json";

    if (use_cache && content_hash != 0) {
        std::ifstream in(sidecar);
        if (in) {
            try {
                nlohmann::json j;
                in >> j;
                if (j.at("content_hash").get<std::string>() ==
                    std::to_string(content_hash)) {
                    GraphStats s;
                    s.vertex_count = j.at("n").get<std::uint64_t>();
                    s.edge_count = j.at("m").get<std::uint64_t>();
                    s.triangle_count =
                        j.at("triangles").get<std::uint64_t>();
                    s.degree_sum_over_edges =
                        j.at("degree_sum_over_edges").get<std::uint64_t>();
                    s.wedge_count = j.at("wedges").get<std::uint64_t>();
                    s.max_assigned_count =
                        j.at("max_assigned").get<std::uint64_t>();
                    s.degeneracy = j.at("degeneracy").get<std::uint32_t>();
                    s.connected = j.at("connected").get<bool>();
                    return s;
                }
            } catch (const std::exception&) {
                // fall through to a fresh computation
            }
        }
    }

    GraphStats s = compute_stats(g);
    if (use_cache && content_hash != 0) {
        nlohmann::json j;
        j["content_hash"] = std::to_string(content_hash);
        j["n"] = s.vertex_count;
        j["m"] = s.edge_count;
        j["triangles"] = s.triangle_count;
        j["degree_sum_over_edges"] = s.degree_sum_over_edges;
        j["wedges"] = s.wedge_count;
        j["max_assigned"] = s.max_assigned_count;
        j["degeneracy"] = s.degeneracy;
        j["connected"] = s.connected;
        std::ofstream out(sidecar);
        if (out) out << j.dump(2) << '\n';
    }
    return s;
}

} // namespace tetris
