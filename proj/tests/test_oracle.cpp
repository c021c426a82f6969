#include <random>

#include "doctest.h"
#include "naive_oracles.hpp"
#include "spcs/core_decomp.hpp"
#include "spcs/errors.hpp"
#include "spcs/generators.hpp"
#include "spcs/oracle.hpp"

using namespace spcs;

TEST_CASE("binomial") {
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("exact_spcs examples") {
    SUBCASE("K5, t = 3") {
        OracleResult r = exact_spcs(gen::complete(5), 3);
        CHECK(r.core_number == 2);
        CHECK(r.witness == NodeSet({0, 1, 2}));
    }
    SUBCASE("Petersen, t = 5") {
        Graph g = gen::petersen();
        CHECK(testing::bitmask_best_core(g, 5) == 2);
        CHECK(exact_spcs(g, 5).core_number == 2);
    }
    SUBCASE("octahedron, t = 4") {
        Graph g = gen::octahedron();
        CHECK(testing::bitmask_best_core(g, 4) == 2);
        CHECK(exact_spcs(g, 4).core_number == 2);
    }
}

TEST_CASE("exact_spcs errors") {
    Graph g = gen::complete(30);
    CHECK_THROWS_AS(exact_spcs(g, 15), BudgetError);
    CHECK_THROWS_AS(exact_spcs(g, 15, 1000), BudgetError);
    CHECK_THROWS_AS(exact_spcs(g, 31), SizeError);
    CHECK_THROWS_AS(exact_spcs_parallel(g, 0), SizeError);
    CHECK(exact_spcs(g, 3).core_number == 2);
}

TEST_CASE("exact_spcs agrees with bitmask brute force; parallel agrees with serial") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<NodeId> size(2, 13);
    for (int round = 0; round < 60; ++round) {
        Graph g = gen::connected_gnp(size(rng), 0.4, rng);
        CorenessTable ct = core_decompose(g);
        for (std::size_t t = 1; t <= g.node_count(); ++t) {
            OracleResult serial = exact_spcs(g, t);
            REQUIRE(serial.core_number == testing::bitmask_best_core(g, t));
            REQUIRE(serial.witness.size() == t);
            REQUIRE(induced_min_degree(g, serial.witness) == serial.core_number);
            REQUIRE(serial.core_number <= upper_bound_k(ct, t));
            OracleResult parallel = exact_spcs_parallel(g, t);
            REQUIRE(parallel.core_number == serial.core_number);
            REQUIRE(parallel.witness == serial.witness);
        }
    }
}

TEST_CASE("witness is the lexicographically least optimum") {
    // Path 1-2-3-4-5 plus triangle 3-4-5: {3,4,5} is the only 2-core of size 3
    // but the witness for t = 2 must be {1,2}.
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}};
    Graph g = Graph::from_edges(5, edges);
    CHECK(exact_spcs(g, 2).witness == NodeSet({0, 1}));
    CHECK(exact_spcs(g, 3).witness == NodeSet({2, 3, 4}));
    CHECK(exact_spcs_parallel(g, 3).witness == NodeSet({2, 3, 4}));
}

TEST_CASE("larger graphs use the generic scorer") {
    std::mt19937_64 rng(4);
    Graph g = gen::connected_gnp(70, 0.2, rng);
    OracleResult r = exact_spcs(g, 3, 100'000);
    CHECK(induced_min_degree(g, r.witness) == r.core_number);
    CHECK(exact_spcs_parallel(g, 3, 100'000).witness == r.witness);
}
