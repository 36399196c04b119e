#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "tetris/baselines.hpp"
#include "tetris/stats.hpp"

using namespace tetris;

namespace {

EstimatorConfig config(std::uint64_t r, std::uint64_t seed,
                       VertexId seed_vertex = 0, std::uint32_t t_hat = 5) {
    EstimatorConfig cfg;
    cfg.walk_length = r;
    cfg.subsample_count = 1;
    cfg.mixing_time_estimate = t_hat;
    cfg.rng_seed = seed;
    cfg.seed_vertex = seed_vertex;
    return cfg;
}

} // namespace

TEST_CASE("mh acceptance ratio") {
    CHECK(mh_acceptance(4, 2) == doctest::Approx(1.0 / 3.0));
    CHECK(mh_acceptance(2, 4) == 1.0);   // uphill moves always accepted
    CHECK(mh_acceptance(1, 5) == 1.0);   // leaving a wedge-free vertex
    CHECK(mh_acceptance(5, 1) == 0.0);   // never move onto zero mass
    CHECK(mh_acceptance(3, 3) == 1.0);
}

TEST_CASE("vertex mcmc on k3 is exact with the edge hook") {
    Graph g = fixtures::k3();
    RunOptions opts;
    opts.exact_edge_count = 3.0;
    BaselineOutput out = vertex_mcmc(g, config(200, 42), opts);
    // Every wedge sample closes, every degree is 2.
    CHECK(out.success_fraction == 1.0);
    CHECK(out.wedge_count_used == doctest::Approx(3.0));
    CHECK(out.estimate == doctest::Approx(1.0));
}

TEST_CASE("vertex mcmc ledger identity") {
    Graph g = fixtures::bowtie();
    const std::uint64_t r = 5000;
    BaselineOutput out;
    RunOptions opts;
    opts.exact_wedge_count = 10.0;
    out = vertex_mcmc(g, config(r, 9), opts);
    // One proposal per step plus two draws per wedge sample plus the
    // redraws needed to make the pair distinct.
    CHECK(out.ledger.random_neighbor_queries ==
          r + 2 * out.wedge_samples + out.wedge_resample_queries);
    CHECK(out.ledger.edge_queries == out.wedge_samples);
    CHECK(out.wedge_samples == r);  // every bowtie vertex has degree >= 2
    CHECK(out.ledger.indexed_neighbor_queries == 0);
}

TEST_CASE("vertex mcmc visits vertices proportional to wedge counts") {
    // Bowtie: center holds 6 of the 10 wedges.
    Graph g = fixtures::bowtie();
    RunOptions opts;
    opts.exact_wedge_count = 10.0;
    const std::uint64_t r = 200000;
    BaselineOutput out = vertex_mcmc(g, config(r, 5), opts);
    // p̂ = 0.4*1 + 0.6*(1/3) = 0.6 under the target distribution.
    CHECK(out.success_fraction == doctest::Approx(0.6).epsilon(0.03));
    CHECK(out.estimate == doctest::Approx(2.0).epsilon(0.03));
}

TEST_CASE("vertex mcmc with the exact wedge hook is accurate") {
    struct Case {
        Graph g;
        double wedges;
        double triangles;
    };
    Case cases[] = {{fixtures::k4(), 12.0, 4.0},
                    {fixtures::bowtie(), 10.0, 2.0}};
    for (const Case& c : cases) {
        RunOptions opts;
        opts.exact_wedge_count = c.wedges;
        double sum = 0.0;
        const int runs = 50;
        for (int i = 0; i < runs; ++i)
            sum += vertex_mcmc(c.g, config(20000, derive_seed(61, i)), opts)
                       .estimate;
        CHECK(std::abs(sum / runs - c.triangles) < 0.1 * c.triangles);
    }
}

TEST_CASE("srw on a star never closes a triple") {
    Graph g = fixtures::star(4);
    RunOptions opts;
    opts.exact_edge_count = 4.0;
    BaselineOutput out = srw(g, config(1000, 3, 1), opts);
    CHECK(out.closed_triples == 0);
    CHECK(out.estimate == 0.0);
    // Star walks alternate center and leaves; every center-centered
    // triple is a candidate, leaf-centered triples always backtrack.
    CHECK(out.triples_tested <= 999);
    CHECK(out.ledger.random_neighbor_queries == 1000);
    CHECK(out.ledger.edge_queries == out.triples_tested);
}

TEST_CASE("srw triple bookkeeping on k4") {
    Graph g = fixtures::k4();
    RunOptions opts;
    opts.exact_edge_count = 6.0;
    const std::uint64_t r = 20000;
    double sum = 0.0;
    const int runs = 50;
    for (int i = 0; i < runs; ++i) {
        BaselineOutput out = srw(g, config(r, derive_seed(71, i)), opts);
        // Closed triples all carry middle degree 3 in K4.
        CHECK(out.weighted_triple_sum == 3.0 * out.closed_triples);
        CHECK(out.ledger.edge_queries == out.triples_tested);
        sum += out.estimate;
    }
    CHECK(std::abs(sum / runs - 4.0) < 0.4);
}

TEST_CASE("srw rejects walks shorter than two steps") {
    Graph g = fixtures::k3();
    CHECK_THROWS_AS(srw(g, config(1, 1)), std::invalid_argument);
}

TEST_CASE("rws scaling algebra") {
    SUBCASE("p = r/m̄ and cubic scaling") {
        Graph g = fixtures::bowtie();
        RunOptions opts;
        opts.exact_edge_count = 6.0;
        BaselineOutput out = rws(g, config(3, 11, 2), opts);
        CHECK(out.keep_probability == doctest::Approx(0.5));
        CHECK_FALSE(out.probability_clamped);
        CHECK(out.estimate ==
              doctest::Approx(8.0 * static_cast<double>(
                                        out.subgraph_triangles)));
    }
    SUBCASE("walks covering no triangle estimate zero") {
        Graph g = fixtures::p4();
        RunOptions opts;
        opts.exact_edge_count = 3.0;
        BaselineOutput out = rws(g, config(3, 4, 1), opts);
        CHECK(out.subgraph_triangles == 0);
        CHECK(out.estimate == 0.0);
    }
    SUBCASE("p >= 1 is clamped and flagged") {
        Graph g = fixtures::k4();
        RunOptions opts;
        opts.exact_edge_count = 6.0;
        BaselineOutput out = rws(g, config(10000, 13), opts);
        CHECK(out.probability_clamped);
        CHECK(out.subgraph_triangles == 4);  // the walk covers K4
        CHECK(out.estimate == 4.0);
    }
    SUBCASE("multiplicity variant counts repeated edges") {
        Graph g = fixtures::k3();
        RunOptions opts;
        opts.exact_edge_count = 3.0;
        opts.rws_count_multiplicity = true;
        BaselineOutput out = rws(g, config(600, 17), opts);
        CHECK(out.subgraph_triangles == 1);
        CHECK(out.multigraph_triangles >=
              static_cast<double>(out.subgraph_triangles));
        const double p = out.keep_probability;
        if (!out.probability_clamped)
            CHECK(out.estimate ==
                  doctest::Approx(out.multigraph_triangles / (p * p * p)));
        else
            CHECK(out.estimate == doctest::Approx(out.multigraph_triangles));
    }
    SUBCASE("needs at least three steps") {
        Graph g = fixtures::k3();
        CHECK_THROWS_AS(rws(g, config(2, 1)), std::invalid_argument);
    }
}

TEST_CASE("serwc is exact on edge-transitive fixtures with the hook") {
    // Every K4 edge touches 2 triangles and every bowtie edge touches 1,
    // so the scaled average is exact on every run.
    Graph k4 = fixtures::k4();
    RunOptions opts;
    opts.exact_edge_count = 6.0;
    BaselineOutput out = serwc(k4, config(500, 19), opts);
    CHECK(out.incident_triangle_sum == 2 * 500);
    CHECK(out.estimate == doctest::Approx(4.0));

    Graph bt = fixtures::bowtie();
    out = serwc(bt, config(500, 23), opts);
    CHECK(out.incident_triangle_sum == 500);
    CHECK(out.estimate == doctest::Approx(2.0));
}

TEST_CASE("serwc query accounting follows the edge degrees") {
    Graph g = fixtures::bowtie();
    RunOptions opts;
    opts.exact_edge_count = 6.0;
    const std::uint64_t r = 200;
    BaselineOutput out = serwc(g, config(r, 29), opts);
    // The base endpoint of every bowtie edge has degree 2.
    CHECK(out.ledger.indexed_neighbor_queries == 2 * r);
    CHECK(out.ledger.edge_queries == 2 * r);
    CHECK(out.ledger.random_neighbor_queries == r);
}

TEST_CASE("wedge count estimator") {
    SUBCASE("k3 is exact for any trace") {
        Graph g = fixtures::k3();
        OracleSession s(g, 0, 31);
        WalkTrace trace = random_walk(s, 50);
        CHECK(wedge_count_estimate(trace, 3.0) == doctest::Approx(3.0));
    }
    SUBCASE("regular graphs are deterministic") {
        Graph g = fixtures::k4();  // W = 12
        OracleSession s(g, 0, 37);
        WalkTrace trace = random_walk(s, 50);
        CHECK(wedge_count_estimate(trace, 6.0) == doctest::Approx(12.0));
    }
    SUBCASE("star matches the closed-form stationary mean") {
        // S3: W = 3 and E[d(v)-1] = 1 under the stationary distribution.
        Graph g = fixtures::star(3);
        const int runs = 200;
        double sum = 0.0;
        for (int i = 0; i < runs; ++i) {
            OracleSession s(g, 0, derive_seed(41, i));
            WalkTrace trace = random_walk(s, 1000);
            sum += wedge_count_estimate(trace, 3.0);
        }
        CHECK(std::abs(sum / runs - 3.0) < 0.2);
    }
}

TEST_CASE("baselines are deterministic and strict-oracle clean") {
    Graph g = fixtures::bowtie();
    RunOptions strict;
    strict.strict_oracle = true;
    strict.exact_edge_count = 6.0;

    CHECK(vertex_mcmc(g, config(500, 1), strict).estimate ==
          vertex_mcmc(g, config(500, 1), strict).estimate);
    CHECK(srw(g, config(500, 1), strict).estimate ==
          srw(g, config(500, 1), strict).estimate);
    CHECK(rws(g, config(500, 1), strict).estimate ==
          rws(g, config(500, 1), strict).estimate);
    CHECK(serwc(g, config(500, 1), strict).estimate ==
          serwc(g, config(500, 1), strict).estimate);
}
