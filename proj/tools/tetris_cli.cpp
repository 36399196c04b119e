#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tetris/bench.hpp"
#include "tetris/csr_io.hpp"
#include "tetris/errors.hpp"
#include "tetris/synthetic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitEstimator = 3;
constexpr int kExitIo = 4;

struct GraphArgs {
    std::string path;
};

struct PlanArgs {
    std::string algos = "tetris";
    std::string walk_lengths;
    double ell_frac = 0.05;
    std::uint32_t tmix = 25;
    std::uint32_t repeats = 100;
    std::string seed_vertex = "random";
    std::uint64_t master_seed = 1;
    bool strict_oracle = false;
    bool lazy = false;
    bool rws_multiplicity = false;
    bool no_exact = false;
    std::string out = "-";
    std::string dump_walk;
    int jobs = 1;
};

tetris::Graph load_graph(const std::string& path, tetris::LoadReport* report) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".rwtg")
        return tetris::load_csr_file(path);
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    return tetris::load_edge_list(in, report);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

tetris::ExperimentPlan make_plan(const PlanArgs& args) {
    tetris::ExperimentPlan plan;
    plan.algos = split_csv(args.algos);
    for (const std::string& token : split_csv(args.walk_lengths))
        plan.walk_lengths.push_back(std::stoull(token));
    plan.subsample_fraction = args.ell_frac;
    plan.mixing_time_estimate = args.tmix;
    plan.repeats = args.repeats;
    if (args.seed_vertex == "random") {
        plan.seed_policy = tetris::SeedPolicy::UniformRandom;
    } else {
        plan.seed_policy = tetris::SeedPolicy::FixedVertex;
        plan.fixed_seed_vertex =
            static_cast<tetris::VertexId>(std::stoull(args.seed_vertex));
    }
    plan.master_seed = args.master_seed;
    plan.strict_oracle = args.strict_oracle;
    plan.lazy_walk = args.lazy;
    plan.rws_count_multiplicity = args.rws_multiplicity;
    plan.jobs = args.jobs;
    return plan;
}

void add_plan_options(CLI::App* cmd, PlanArgs& args, bool multi_r) {
    cmd->add_option("--algo", args.algos,
                    multi_r ? "comma-separated algorithms" : "algorithm")
        ->capture_default_str();
    cmd->add_option("--r", args.walk_lengths,
                    multi_r ? "comma-separated walk lengths"
                            : "walk length (steps)")
        ->required();
    cmd->add_option("--ell-frac", args.ell_frac,
                    "subsample count as a fraction of r")
        ->capture_default_str();
    cmd->add_option("--tmix", args.tmix, "mixing time estimate / stride")
        ->capture_default_str();
    cmd->add_option("--repeats", args.repeats, "independent runs per setting")
        ->capture_default_str();
    cmd->add_option("--seed-vertex", args.seed_vertex,
                    "seed vertex id, or 'random'")
        ->capture_default_str();
    cmd->add_option("--master-seed", args.master_seed,
                    "master seed; per-run seeds are derived from it")
        ->capture_default_str();
    cmd->add_flag("--strict-oracle", args.strict_oracle,
                  "enforce revealed-vertex access checks");
    cmd->add_flag("--lazy", args.lazy, "lazy walk variant");
    cmd->add_flag("--rws-multiplicity", args.rws_multiplicity,
                  "RWS counts multigraph triangles");
    cmd->add_flag("--no-exact", args.no_exact,
                  "skip exact triangle counting (no error columns)");
    cmd->add_option("--out", args.out, "records CSV path, '-' for stdout")
        ->capture_default_str();
    cmd->add_option("--dump-walk", args.dump_walk,
                    "debug: write the first run's walk edges to this path");
    cmd->add_option("--jobs", args.jobs, "concurrent repeats")
        ->capture_default_str();
}

int run_records_command(const GraphArgs& graph_args, const PlanArgs& args,
                        bool buckets) {
    tetris::Graph g = load_graph(graph_args.path, nullptr);
    tetris::ExperimentPlan plan = make_plan(args);

    tetris::ExperimentContext ctx;
    ctx.graph = &g;
    ctx.graph_name = graph_args.path;
    if (!args.no_exact) {
        const tetris::GraphStats stats =
            tetris::load_or_compute_stats(graph_args.path, g);
        ctx.true_triangles = static_cast<double>(stats.triangle_count);
    }

    std::vector<std::string> warnings;
    const std::vector<tetris::RunRecord> records =
        buckets ? tetris::seed_bucket_experiment(ctx, plan, &warnings)
                : tetris::run_experiment(ctx, plan);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';

    if (!args.dump_walk.empty() && !records.empty()) {
        // Replays the first record's session seed; walk-first estimators
        // traverse exactly this trace.
        const tetris::RunRecord& rec = records.front();
        tetris::OracleSession session(g, rec.seed_vertex, rec.rng_seed);
        const tetris::WalkTrace trace =
            tetris::random_walk(session, rec.walk_length, plan.lazy_walk);
        std::ofstream dump(args.dump_walk);
        if (!dump)
            throw std::ios_base::failure("cannot open " + args.dump_walk);
        for (const auto& [u, v] : trace.edges) dump << u << ' ' << v << '\n';
    }

    if (args.out == "-") {
        tetris::emit_csv(records, std::cout);
    } else {
        std::ofstream out(args.out, std::ios::binary);
        if (!out) throw std::ios_base::failure("cannot open " + args.out);
        tetris::emit_csv(records, out);
    }

    std::cerr << "rng: " << tetris::Rng::algorithm_name << '\n';
    const std::vector<tetris::SummaryRow> summary =
        tetris::summarize(records, &warnings);
    tetris::emit_csv(summary, std::cerr);

    const bool all_failed =
        !records.empty() &&
        std::all_of(records.begin(), records.end(),
                    [](const tetris::RunRecord& r) { return !r.error.empty(); });
    return all_failed ? kExitEstimator : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangle counting in the random walk access model"};
    app.require_subcommand(1);

    GraphArgs graph_args;
    PlanArgs plan_args;

    auto* stats_cmd = app.add_subcommand("stats", "basic graph statistics");
    std::string write_cache;
    stats_cmd->add_option("--graph", graph_args.path, "edge list or .rwtg")
        ->required();
    stats_cmd->add_option("--write-cache", write_cache,
                          "write a binary CSR cache to this path");

    auto* exact_cmd =
        app.add_subcommand("exact", "exact triangle count and structure");
    bool no_cache = false;
    exact_cmd->add_option("--graph", graph_args.path, "edge list or .rwtg")
        ->required();
    exact_cmd->add_flag("--no-cache", no_cache, "ignore the sidecar cache");

    auto* run_cmd = app.add_subcommand("run", "run one estimator setting");
    run_cmd->add_option("--graph", graph_args.path, "edge list or .rwtg")
        ->required();
    add_plan_options(run_cmd, plan_args, false);

    auto* sweep_cmd =
        app.add_subcommand("sweep", "sweep algorithms and walk lengths");
    sweep_cmd->add_option("--graph", graph_args.path, "edge list or .rwtg")
        ->required();
    add_plan_options(sweep_cmd, plan_args, true);

    auto* buckets_cmd = app.add_subcommand(
        "buckets", "robustness protocol over degree-bucketed seed vertices");
    buckets_cmd->add_option("--graph", graph_args.path, "edge list or .rwtg")
        ->required();
    add_plan_options(buckets_cmd, plan_args, true);

    auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic graph");
    std::string model = "gnp";
    std::uint32_t gen_n = 1000;
    std::uint32_t edges_per_vertex = 10;
    double triad_prob = 1.0;
    std::uint32_t block_size = 34;
    double p_within = 0.6;
    double p_cross = 0.2;
    double gnp_p = 0.01;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen_cmd->add_option("--model", model, "ba | community | gnp")
        ->capture_default_str();
    gen_cmd->add_option("--n", gen_n, "vertex count")->capture_default_str();
    gen_cmd->add_option("--edges-per-vertex", edges_per_vertex,
                        "ba: attachments per vertex")
        ->capture_default_str();
    gen_cmd->add_option("--triad-prob", triad_prob,
                        "ba: triangle-closing probability")
        ->capture_default_str();
    gen_cmd->add_option("--block-size", block_size, "community: block size")
        ->capture_default_str();
    gen_cmd->add_option("--p-within", p_within,
                        "community: within-block edge probability")
        ->capture_default_str();
    gen_cmd->add_option("--p-cross", p_cross,
                        "community: per-vertex cross-edge probability")
        ->capture_default_str();
    gen_cmd->add_option("--p", gnp_p, "gnp: edge probability")
        ->capture_default_str();
    gen_cmd->add_option("--seed", gen_seed, "generator seed")
        ->capture_default_str();
    gen_cmd->add_option("--out", gen_out, "output edge list path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (stats_cmd->parsed()) {
            tetris::LoadReport report;
            tetris::Graph g = load_graph(graph_args.path, &report);
            std::uint32_t min_deg = UINT32_MAX, max_deg = 0;
            for (tetris::VertexId v = 0; v < g.vertex_count(); ++v) {
                min_deg = std::min(min_deg, g.degree(v));
                max_deg = std::max(max_deg, g.degree(v));
            }
            std::cout << "n: " << g.vertex_count() << '\n'
                      << "m: " << g.edge_count() << '\n'
                      << "self_loops_dropped: " << report.self_loops_dropped
                      << '\n'
                      << "duplicate_edges_dropped: "
                      << report.duplicate_edges_dropped << '\n'
                      << "min_degree: " << min_deg << '\n'
                      << "max_degree: " << max_deg << '\n'
                      << "connected: " << (tetris::is_connected(g) ? "yes" : "no")
                      << '\n';
            if (!write_cache.empty()) {
                tetris::save_csr_file(g, write_cache);
                std::cout << "cache_written: " << write_cache << '\n';
            }
        } else if (exact_cmd->parsed()) {
            tetris::Graph g = load_graph(graph_args.path, nullptr);
            const tetris::GraphStats s =
                tetris::load_or_compute_stats(graph_args.path, g, !no_cache);
            std::cout << "n: " << s.vertex_count << '\n'
                      << "m: " << s.edge_count << '\n'
                      << "triangles: " << s.triangle_count << '\n'
                      << "degree_sum_over_edges: " << s.degree_sum_over_edges
                      << '\n'
                      << "wedges: " << s.wedge_count << '\n'
                      << "max_assigned: " << s.max_assigned_count << '\n'
                      << "degeneracy: " << s.degeneracy << '\n'
                      << "connected: " << (s.connected ? "yes" : "no") << '\n';
        } else if (run_cmd->parsed() || sweep_cmd->parsed()) {
            return run_records_command(graph_args, plan_args, false);
        } else if (buckets_cmd->parsed()) {
            return run_records_command(graph_args, plan_args, true);
        } else if (gen_cmd->parsed()) {
            tetris::Graph g = [&]() {
                if (model == "ba")
                    return tetris::preferential_attachment_graph(
                        gen_n, edges_per_vertex, triad_prob, gen_seed);
                if (model == "community")
                    return tetris::community_graph(gen_n, block_size,
                                                   p_within, p_cross,
                                                   gen_seed);
                if (model == "gnp")
                    return tetris::gnp_graph(gen_n, gnp_p, gen_seed);
                throw CLI::ValidationError("--model", "unknown model " + model);
            }();
            std::ofstream out(gen_out, std::ios::binary);
            if (!out) throw std::ios_base::failure("cannot open " + gen_out);
            tetris::write_edge_list(g, out);
            if (!out) throw std::ios_base::failure("write failed: " + gen_out);
            std::cerr << "n: " << g.vertex_count() << " m: " << g.edge_count()
                      << '\n';
        }
    } catch (const tetris::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
