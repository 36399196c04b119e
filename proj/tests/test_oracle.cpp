#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "tetris/csr_io.hpp"
#include "tetris/errors.hpp"
#include "tetris/oracle.hpp"

using namespace tetris;

TEST_CASE("fresh session has a zero ledger") {
    Graph g = fixtures::k3();
    OracleSession s(g, 0, 42);
    CHECK(s.ledger().random_neighbor_queries == 0);
    CHECK(s.ledger().degree_queries == 0);
    CHECK(s.ledger().edge_queries == 0);
    CHECK(s.ledger().indexed_neighbor_queries == 0);
    CHECK(s.seed_vertex() == 0);
}

TEST_CASE("isolated seed vertex is rejected") {
    // Craft a CSR cache with an isolated vertex 2.
    Graph base = fixtures::from({{0, 1}});
    std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
    save_csr(base, buf);
    Graph g = Graph::from_csr({0, 1, 2, 2}, {1, 0}, {0, 1, 2});
    CHECK(g.degree(2) == 0);
    CHECK_THROWS_AS(OracleSession(g, 2, 1), std::invalid_argument);
}

TEST_CASE("sessions with equal seeds replay identically") {
    Graph g = fixtures::random_gnp(40, 0.2, 8);
    OracleSession a(g, 0, 777);
    OracleSession b(g, 0, 777);
    VertexId cur_a = 0, cur_b = 0;
    for (int i = 0; i < 1000; ++i) {
        cur_a = a.random_neighbor(cur_a);
        cur_b = b.random_neighbor(cur_b);
        CHECK(cur_a == cur_b);
        CHECK(a.degree_query(cur_a) == b.degree_query(cur_b));
    }
    CHECK(a.ledger().random_neighbor_queries ==
          b.ledger().random_neighbor_queries);
}

TEST_CASE("random neighbor is uniform on a star center") {
    Graph g = fixtures::star(3);
    OracleSession s(g, 0, 9);
    const int draws = 100000;
    std::vector<int> hits(4, 0);
    for (int i = 0; i < draws; ++i) ++hits[s.random_neighbor(0)];
    CHECK(s.ledger().random_neighbor_queries == draws);
    const double p = 1.0 / 3.0;
    const double sigma = std::sqrt(p * (1 - p) / draws);
    for (int leaf = 1; leaf <= 3; ++leaf) {
        const double freq = static_cast<double>(hits[leaf]) / draws;
        CHECK(std::abs(freq - p) < 3 * sigma);
    }
}

TEST_CASE("degree-1 vertex always yields its unique neighbor") {
    Graph g = fixtures::star(3);
    OracleSession s(g, 1, 5);
    for (int i = 0; i < 20; ++i) CHECK(s.random_neighbor(1) == 0);
}

TEST_CASE("degree query matches the graph and is budget-exempt") {
    Graph g = fixtures::random_gnp(30, 0.3, 3);
    OracleSession s(g, 0, 1);
    VertexId cur = 0;
    for (int i = 0; i < 1000; ++i) {
        cur = s.random_neighbor(cur);
        CHECK(s.degree_query(cur) == g.degree(cur));
    }
    CHECK(s.ledger().degree_queries == 1000);
    CHECK(s.ledger().countable() == 1000);  // only the walk queries count
}

TEST_CASE("edge queries") {
    Graph k3 = fixtures::k3();
    OracleSession s(k3, 0, 2);
    CHECK(s.edge_query(0, 2));
    CHECK(s.edge_query(2, 2) == false);  // degenerate pair is benign
    CHECK(s.ledger().edge_queries == 2);

    Graph p3 = fixtures::from({{0, 1}, {1, 2}});
    OracleSession t(p3, 0, 2);
    CHECK_FALSE(t.edge_query(0, 2));
}

TEST_CASE("indexed neighbor enumerates the sorted adjacency") {
    Graph g = fixtures::star(3);
    OracleSession s(g, 0, 4);
    CHECK(*s.indexed_neighbor(0, 1) == 1);
    CHECK(*s.indexed_neighbor(0, 2) == 2);
    CHECK(*s.indexed_neighbor(0, 3) == 3);
    CHECK_FALSE(s.indexed_neighbor(0, 4).has_value());
    CHECK_THROWS_AS(s.indexed_neighbor(0, 0), std::invalid_argument);
    CHECK(s.ledger().indexed_neighbor_queries == 4);

    Graph r = fixtures::random_gnp(20, 0.3, 12);
    OracleSession t(r, 0, 4);
    std::vector<VertexId> enumerated;
    for (std::uint64_t i = 1; i <= r.degree(0); ++i)
        enumerated.push_back(*t.indexed_neighbor(0, i));
    auto adj = r.neighbors(0);
    CHECK(enumerated == std::vector<VertexId>(adj.begin(), adj.end()));
}

TEST_CASE("cached degree charges each vertex once") {
    Graph g = fixtures::k4();
    OracleSession s(g, 0, 6);
    CHECK(s.cached_degree(0) == 3);
    CHECK(s.cached_degree(0) == 3);
    CHECK(s.cached_degree(1) == 3);
    CHECK(s.ledger().degree_queries == 2);
}

TEST_CASE("strict mode blocks unrevealed vertices") {
    Graph g = fixtures::p4();
    OracleSession s(g, 0, 3, /*strict=*/true);
    CHECK_THROWS_AS(s.random_neighbor(2), AccessViolation);
    CHECK_THROWS_AS(s.degree_query(3), AccessViolation);
    CHECK_THROWS_AS(s.edge_query(0, 3), AccessViolation);
    CHECK_THROWS_AS(s.indexed_neighbor(2, 1), AccessViolation);

    // Revealing by walking unlocks the vertex.
    const VertexId w = s.random_neighbor(0);
    CHECK(w == 1);
    CHECK(s.degree_query(1) == 2);
    CHECK_NOTHROW(s.edge_query(0, 1));
}
