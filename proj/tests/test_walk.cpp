#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "fixtures.hpp"
#include "tetris/stats.hpp"
#include "tetris/walk.hpp"

using namespace tetris;

namespace {

// Mean and standard error across independent replicates.
struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& xs) {
    MeanSe out;
    for (double x : xs) out.mean += x;
    out.mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.se = std::sqrt(ss / (static_cast<double>(xs.size()) - 1.0) /
                       static_cast<double>(xs.size()));
    return out;
}

} // namespace

TEST_CASE("walk on k3 collects regular edges") {
    Graph g = fixtures::k3();
    OracleSession s(g, 0, 1);
    WalkTrace trace = random_walk(s, 4);
    CHECK(trace.length() == 4);
    CHECK(trace.vertices.size() == 5);
    for (std::uint32_t d : trace.edge_degrees) CHECK(d == 2);
    CHECK(trace.degree_sum == 8);
    CHECK(s.ledger().random_neighbor_queries == 4);
    // Degrees of at most three distinct vertices were needed.
    CHECK(s.ledger().degree_queries <= 3);
}

TEST_CASE("walk edges are consecutive") {
    Graph g = fixtures::random_gnp(50, 0.15, 21);
    OracleSession s(g, 0, 33);
    WalkTrace trace = random_walk(s, 500);
    for (std::size_t i = 0; i < trace.length(); ++i) {
        CHECK(trace.edges[i].first == trace.vertices[i]);
        CHECK(trace.edges[i].second == trace.vertices[i + 1]);
        CHECK(g.has_edge(trace.edges[i].first, trace.edges[i].second));
        CHECK(trace.edge_degrees[i] ==
              g.edge_degree(trace.edges[i].first, trace.edges[i].second));
    }
    const std::uint64_t sum = std::accumulate(trace.edge_degrees.begin(),
                                              trace.edge_degrees.end(),
                                              std::uint64_t{0});
    CHECK(sum == trace.degree_sum);
    CHECK(trace.degree_sum >= trace.length());
}

TEST_CASE("walk rejects zero length") {
    Graph g = fixtures::k3();
    OracleSession s(g, 0, 1);
    CHECK_THROWS_AS(random_walk(s, 0), std::invalid_argument);
}

TEST_CASE("lazy walk still collects r edges with r queries") {
    Graph g = fixtures::kite();
    OracleSession s(g, 0, 5);
    WalkTrace trace = random_walk(s, 100, /*lazy=*/true);
    CHECK(trace.length() == 100);
    CHECK(s.ledger().random_neighbor_queries == 100);
}

TEST_CASE("sampler maps offsets exactly proportionally") {
    SUBCASE("documented example (2,4,6)") {
        const std::vector<std::uint32_t> w{2, 4, 6};
        WeightedIndexSampler sampler(w);
        CHECK(sampler.total_weight() == 12);
        std::vector<int> preimage(3, 0);
        for (std::uint64_t off = 0; off < 12; ++off)
            ++preimage[sampler.position_for_offset(off)];
        CHECK(preimage[0] == 2);
        CHECK(preimage[1] == 4);
        CHECK(preimage[2] == 6);
    }
    SUBCASE("random weight vectors") {
        Rng rng(77);
        for (int iter = 0; iter < 50; ++iter) {
            std::vector<std::uint32_t> w(1 + rng.below(20));
            for (auto& x : w) x = static_cast<std::uint32_t>(rng.below(9) + 1);
            WeightedIndexSampler sampler(w);
            std::vector<std::uint64_t> preimage(w.size(), 0);
            for (std::uint64_t off = 0; off < sampler.total_weight(); ++off)
                ++preimage[sampler.position_for_offset(off)];
            for (std::size_t i = 0; i < w.size(); ++i)
                CHECK(preimage[i] == w[i]);
        }
    }
    SUBCASE("single position") {
        const std::vector<std::uint32_t> w{7};
        WeightedIndexSampler sampler(w);
        Rng rng(1);
        CHECK(sampler.draw(rng) == 0);
    }
    SUBCASE("degenerate weights rejected") {
        CHECK_THROWS_AS(WeightedIndexSampler(std::vector<std::uint32_t>{}),
                        std::invalid_argument);
        CHECK_THROWS_AS(
            WeightedIndexSampler(std::vector<std::uint32_t>{0, 0}),
            std::invalid_argument);
    }
}

TEST_CASE("sampler draws are independent and uniform for equal weights") {
    const std::vector<std::uint32_t> w{2, 2, 2, 2};
    WeightedIndexSampler sampler(w);
    Rng rng(123);
    const int draws = 100000;
    std::vector<int> single(4, 0);
    std::vector<int> pair(16, 0);
    int prev = -1;
    for (int i = 0; i < draws; ++i) {
        const int pos = static_cast<int>(sampler.draw(rng));
        ++single[pos];
        if (prev >= 0) ++pair[prev * 4 + pos];
        prev = pos;
    }
    const double sigma1 = std::sqrt(0.25 * 0.75 / draws);
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(single[k] / double(draws) - 0.25) < 3 * sigma1);
    // Consecutive pair frequencies factorize.
    const double p2 = 1.0 / 16.0;
    const double sigma2 = std::sqrt(p2 * (1 - p2) / (draws - 1));
    for (int k = 0; k < 16; ++k)
        CHECK(std::abs(pair[k] / double(draws - 1) - p2) < 3 * sigma2);
}

TEST_CASE("deterministic draws under a fixed seed") {
    const std::vector<std::uint32_t> w{1, 3, 5, 7};
    WeightedIndexSampler sampler(w);
    Rng a(99), b(99);
    for (int i = 0; i < 100; ++i) CHECK(sampler.draw(a) == sampler.draw(b));
}

TEST_CASE("stride partition") {
    Graph g = fixtures::k3();
    OracleSession s(g, 0, 1);
    WalkTrace trace = random_walk(s, 6);

    SUBCASE("r=6 stride 2") {
        auto strata = stride_partition(trace, 2);
        REQUIRE(strata.size() == 2);
        CHECK(strata[0] == std::vector<std::size_t>{0, 2, 4});
        CHECK(strata[1] == std::vector<std::size_t>{1, 3, 5});
    }
    SUBCASE("stride 1 keeps everything together") {
        auto strata = stride_partition(trace, 1);
        REQUIRE(strata.size() == 1);
        CHECK(strata[0].size() == 6);
    }
    SUBCASE("sizes differ by at most one and cover all positions") {
        for (std::uint32_t t = 1; t <= 6; ++t) {
            auto strata = stride_partition(trace, t);
            std::size_t total = 0, smallest = SIZE_MAX, largest = 0;
            for (const auto& part : strata) {
                total += part.size();
                smallest = std::min(smallest, part.size());
                largest = std::max(largest, part.size());
            }
            CHECK(total == 6);
            CHECK(largest - smallest <= 1);
        }
    }
    SUBCASE("walk shorter than stride") {
        CHECK_THROWS_AS(stride_partition(trace, 7), std::invalid_argument);
        CHECK_THROWS_AS(stride_partition(trace, 0), std::invalid_argument);
    }
}

TEST_CASE("walk degree and triangle sums match stationary expectations") {
    // Kite: m=7, d_E=19, T=4, so E[d_R]/r = 19/7 and E[t_R]/r = 4/7.
    Graph g = fixtures::kite();
    GraphStats stats = compute_stats(g);
    const double expect_d =
        static_cast<double>(stats.degree_sum_over_edges) / 7.0;
    const double expect_t = static_cast<double>(stats.triangle_count) / 7.0;

    const int runs = 200;
    const std::uint64_t r = 20000;
    std::vector<double> d_means, t_means;
    for (int k = 0; k < runs; ++k) {
        OracleSession s(g, 0, derive_seed(4242, k));
        WalkTrace trace = random_walk(s, r);
        d_means.push_back(static_cast<double>(trace.degree_sum) /
                          static_cast<double>(r));
        std::uint64_t t_r = 0;
        for (const auto& [u, v] : trace.edges)
            t_r += stats.assigned_count(u, v);
        t_means.push_back(static_cast<double>(t_r) / static_cast<double>(r));
    }
    const MeanSe d = mean_se(d_means);
    const MeanSe t = mean_se(t_means);
    CHECK(std::abs(d.mean - expect_d) < 3 * d.se);
    CHECK(std::abs(t.mean - expect_t) < 3 * t.se);
}
