#include <random>

#include "doctest.h"
#include "naive_oracles.hpp"
#include "spcs/engine.hpp"
#include "spcs/errors.hpp"
#include "spcs/generators.hpp"

using namespace spcs;

namespace {

StrategyParams top_down() { return StrategyParams{}; }

StrategyParams bottom_up() {
    StrategyParams p;
    p.strategy = Strategy::bottom_up;
    return p;
}

std::vector<NodeId> all_nodes(const Graph& g) {
    std::vector<NodeId> v(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i) v[i] = i;
    return v;
}

}  // namespace

TEST_CASE("tsize_kcore examples") {
    for (auto params : {top_down(), bottom_up()}) {
        CAPTURE(static_cast<int>(params.strategy));
        SUBCASE("K5, t = 3") {
            Graph g = gen::complete(5);
            CHECK(testing::bitmask_best_core(g, 3) == 2);
            SearchResult r = tsize_kcore(g, 3, params, 1);
            CHECK(r.nodes.size() == 3);
            CHECK(r.core_number == 2);
            CHECK(r.upper_bound == 4);
            CHECK_FALSE(r.optimal);
        }
        SUBCASE("K4 with pendant path, t = 4") {
            Graph g = gen::k4_with_pendant_path();
            CHECK(testing::bitmask_best_core(g, 4) == 3);
            SearchResult r = tsize_kcore(g, 4, params, 9);
            CHECK(r.nodes == g.nodes_by_label({"1", "2", "3", "4"}));
            CHECK(r.core_number == 3);
            CHECK(r.upper_bound == 3);
            CHECK(r.optimal);
            CHECK_FALSE(r.fallback);
        }
        SUBCASE("t = n returns V") {
            Graph g = gen::k4_with_pendant_path();
            SearchResult r = tsize_kcore(g, 6, params, 0);
            CHECK(r.nodes.size() == 6);
            CHECK(r.core_number == 1);
        }
        SUBCASE("t = 1 returns one node with core number 0") {
            SearchResult r = tsize_kcore(gen::petersen(), 1, params, 0);
            CHECK(r.nodes.size() == 1);
            CHECK(r.core_number == 0);
        }
        SUBCASE("path falls back to BFS") {
            Graph g = gen::path(5);
            SearchResult r = tsize_kcore(g, 3, params, 0);
            CHECK(r.fallback);
            CHECK(r.core_number == 1);
            CHECK(testing::induces_connected(g, r.nodes));
        }
    }
}

TEST_CASE("tsize_kcore errors") {
    Graph g = gen::complete(4);
    CHECK_THROWS_AS(tsize_kcore(g, 5, top_down(), 0), SizeError);
    CHECK_THROWS_AS(tsize_kcore(g, 0, top_down(), 0), SizeError);
    CHECK_THROWS_AS(tsize_kcore(gen::disjoint_cliques(2, 3), 2, top_down(), 0), ContractError);
    StrategyParams bad = bottom_up();
    bad.max_restarts_per_k = 0;
    CHECK_THROWS_AS(tsize_kcore(g, 2, bad, 0), ConfigError);
}

TEST_CASE("get_kcore_td") {
    Graph k5 = gen::complete(5);
    auto found = get_kcore_td(k5, core_decompose(k5), 3, 4);
    REQUIRE(found.size() == 1);
    CHECK(found[0].size() == 5);

    Graph triangles = gen::disjoint_cliques(2, 3);
    CHECK(get_kcore_td(triangles, core_decompose(triangles), 2, 4).empty());

    Graph g = gen::k4_with_pendant_path();
    found = get_kcore_td(g, core_decompose(g), 2, 4);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == g.nodes_by_label({"1", "2", "3", "4"}));
}

TEST_CASE("size_refinement_td") {
    Rng rng(4);
    SUBCASE("K5 to a K4") {
        Graph g = gen::complete(5);
        auto r = size_refinement_td(g, NodeSet(all_nodes(g)), 3, 4, RemovalOrder::random, rng);
        REQUIRE(r);
        CHECK(r->size() == 4);
        CHECK(induced_min_degree(g, *r) == 3);
    }
    SUBCASE("K6 to a K5") {
        Graph g = gen::complete(6);
        auto r = size_refinement_td(g, NodeSet(all_nodes(g)), 4, 5, RemovalOrder::lowest_degree_first, rng);
        REQUIRE(r);
        CHECK(r->size() == 5);
        CHECK(induced_min_degree(g, *r) == 4);
    }
    SUBCASE("octahedron has no 4-node 3-core") {
        Graph g = gen::octahedron();
        CHECK(testing::bitmask_best_core(g, 4) == 2);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Rng local(seed);
            CHECK_FALSE(size_refinement_td(g, NodeSet(all_nodes(g)), 3, 4, RemovalOrder::random, local));
        }
    }
    SUBCASE("disconnected input keeps one side") {
        Graph g = gen::disjoint_cliques(2, 5);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Rng local(seed);
            auto r = size_refinement_td(g, NodeSet(all_nodes(g)), 3, 4, RemovalOrder::random, local);
            REQUIRE(r);
            CHECK(r->size() == 4);
            CHECK(induced_min_degree(g, *r) == 3);
            CHECK(testing::induces_connected(g, *r));
        }
    }
    SUBCASE("a cut node splits off a piece of exactly t") {
        // Two K5s hanging off a hub. Removing the hub first leaves two 5-node
        // pieces; other orders may shrink into a dead end of two triangles.
        std::vector<Edge> edges;
        for (NodeId a = 0; a < 5; ++a)
            for (NodeId b = a + 1; b < 5; ++b) {
                edges.emplace_back(a, b);
                edges.emplace_back(a + 5, b + 5);
            }
        for (NodeId v : {0u, 1u, 5u, 6u}) edges.emplace_back(10, v);
        Graph g = Graph::from_edges(11, edges);
        const NodeSet left = g.nodes_by_label({"0", "1", "2", "3", "4"});
        const NodeSet right = g.nodes_by_label({"5", "6", "7", "8", "9"});
        int whole_clique = 0;
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            Rng local(seed);
            auto r = size_refinement_td(g, NodeSet(all_nodes(g)), 2, 5, RemovalOrder::random, local);
            if (!r) continue;
            CHECK(r->size() == 5);
            CHECK(induced_min_degree(g, *r) >= 2);
            CHECK(testing::induces_connected(g, *r));
            whole_clique += *r == left || *r == right;
        }
        CHECK(whole_clique > 0);
    }
    SUBCASE("preconditions") {
        Graph g = gen::k4_with_pendant_path();
        CHECK_THROWS_AS(size_refinement_td(g, NodeSet(all_nodes(g)), 2, 4, RemovalOrder::random, rng), ContractError);
        CHECK_THROWS_AS(size_refinement_td(g, g.nodes_by_label({"1", "2", "3"}), 2, 3, RemovalOrder::random, rng),
                        ContractError);
    }
    SUBCASE("successes have size t and min degree >= k") {
        std::mt19937_64 gen_rng(77);
        for (int round = 0; round < 60; ++round) {
            Graph g = gen::connected_gnp(30, 0.35, gen_rng);
            CorenessTable ct = core_decompose(g);
            for (std::uint32_t k = 2; k <= ct.degeneracy(); ++k) {
                for (const auto& h : maximal_k_cores(g, ct, k)) {
                    if (h.size() < 3) continue;
                    const std::size_t t = h.size() / 2 + 1;
                    if (t >= h.size()) continue;
                    if (auto r = size_refinement_td(g, h, k, t, RemovalOrder::random, rng)) {
                        REQUIRE(r->size() == t);
                        REQUIRE(induced_min_degree(g, *r) >= k);
                        REQUIRE(testing::induces_connected(g, *r));
                    }
                }
            }
        }
    }
}

TEST_CASE("get_kcore_bu") {
    SUBCASE("component of size t is emitted whole") {
        Graph g = gen::complete(5);
        Rng rng(1);
        auto found = get_kcore_bu(g, core_decompose(g), 4, 5, rng);
        REQUIRE(found.size() == 1);
        CHECK(found[0].size() == 5);
    }
    SUBCASE("K5 cut to a K4") {
        Graph g = gen::complete(5);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Rng rng(seed);
            auto found = get_kcore_bu(g, core_decompose(g), 3, 4, rng);
            REQUIRE(found.size() == 1);
            CHECK(found[0].size() == 4);
            CHECK(induced_min_degree(g, found[0]) == 3);
        }
    }
    SUBCASE("octahedron residues never hold a 3-core") {
        Graph g = gen::octahedron();
        // Every way of dropping two nodes leaves no 3-core.
        for (NodeId a = 0; a < 6; ++a)
            for (NodeId b = a + 1; b < 6; ++b) {
                std::vector<NodeId> rest;
                for (NodeId v = 0; v < 6; ++v)
                    if (v != a && v != b) rest.push_back(v);
                CHECK(maximal_k_cores_within(g, NodeSet(rest), 3).empty());
            }
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Rng rng(seed);
            CHECK(get_kcore_bu(g, core_decompose(g), 3, 4, rng).empty());
        }
    }
}

TEST_CASE("size_refinement_bu") {
    Rng rng(2);
    SUBCASE("K4 grows to K5") {
        Graph g = gen::complete(5);
        auto r = size_refinement_bu(g, g.nodes_by_label({"1", "2", "3", "4"}), 3, 5, GrowthRule::max_in_neighbors, rng);
        REQUIRE(r);
        CHECK(r->size() == 5);
    }
    SUBCASE("no outside node qualifies") {
        Graph g = gen::disjoint_cliques(2, 4);
        auto h = g.nodes_by_label({"1", "2", "3", "4"});
        CHECK_FALSE(size_refinement_bu(g, h, 3, 5, GrowthRule::max_in_neighbors, rng));
        CHECK_FALSE(size_refinement_bu(g, h, 3, 5, GrowthRule::random_eligible, rng));
    }
    SUBCASE("node adjacent to three K4 members") {
        std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {4, 2}};
        Graph g = Graph::from_edges(5, edges, {"1", "2", "3", "4", "5"});
        auto r = size_refinement_bu(g, g.nodes_by_label({"1", "2", "3", "4"}), 3, 5, GrowthRule::random_eligible, rng);
        REQUIRE(r);
        CHECK(*r == g.nodes_by_label({"1", "2", "3", "4", "5"}));
        std::vector<NodeId> members(r->begin(), r->end());
        CHECK(testing::pairwise_min_degree(g, members) == 3);
    }
    SUBCASE("preconditions") {
        Graph g = gen::k4_with_pendant_path();
        CHECK_THROWS_AS(size_refinement_bu(g, g.nodes_by_label({"4", "5", "6"}), 2, 5, GrowthRule::max_in_neighbors, rng),
                        ContractError);
        CHECK_THROWS_AS(size_refinement_bu(g, NodeSet(all_nodes(g)), 1, 5, GrowthRule::max_in_neighbors, rng),
                        ContractError);
    }
    SUBCASE("every intermediate size keeps min degree >= k") {
        // Growth with a fixed seed is prefix-consistent, so checking every
        // target size checks every step of the longest run.
        std::mt19937_64 gen_rng(31);
        for (int round = 0; round < 30; ++round) {
            Graph g = gen::connected_gnp(40, 0.3, gen_rng);
            CorenessTable ct = core_decompose(g);
            const std::uint32_t k = std::max<std::uint32_t>(2, ct.degeneracy() / 2);
            Rng cut(round);
            for (const auto& h : get_kcore_bu(g, ct, k, 8, cut)) {
                for (std::size_t t = h.size(); t <= g.node_count(); ++t) {
                    for (auto rule : {GrowthRule::max_in_neighbors, GrowthRule::random_eligible}) {
                        Rng local(1000 + round);
                        auto r = size_refinement_bu(g, h, k, t, rule, local);
                        if (!r) continue;
                        REQUIRE(r->size() == t);
                        REQUIRE(induced_min_degree(g, *r) >= k);
                    }
                }
            }
        }
    }
}

TEST_CASE("tsize_kcore invariants on random graphs") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<NodeId> size(5, 40);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    for (int round = 0; round < 80; ++round) {
        Graph g = gen::connected_gnp(size(rng), density(rng), rng);
        CorenessTable ct = core_decompose(g);
        std::uniform_int_distribution<std::size_t> pick_t(1, g.node_count());
        const std::size_t t = pick_t(rng);
        for (auto params : {top_down(), bottom_up()}) {
            params.td_removal_order = round % 2 ? RemovalOrder::random : RemovalOrder::lowest_degree_first;
            params.bu_growth_rule = round % 3 ? GrowthRule::max_in_neighbors : GrowthRule::random_eligible;
            params.bu_candidate_order = round % 4 ? CandidateOrder::largest_first : CandidateOrder::random;
            params.max_restarts_per_k = 1 + round % 3;
            SearchResult a = tsize_kcore(g, ct, t, params, 42);
            SearchResult b = tsize_kcore(g, ct, t, params, 42);
            REQUIRE(a.nodes.size() == t);
            REQUIRE(a.core_number == induced_min_degree(g, a.nodes));
            REQUIRE(a.core_number <= a.upper_bound);
            REQUIRE(a.optimal == (a.core_number == a.upper_bound));
            REQUIRE(a.nodes == b.nodes);
        }
    }
}

TEST_CASE("per-component bound mode") {
    Graph g = gen::k4_with_pendant_path();
    StrategyParams p = top_down();
    p.bound_mode = BoundMode::per_component;
    SearchResult r = tsize_kcore(g, 4, p, 0);
    CHECK(r.upper_bound == 3);
    CHECK(r.core_number == 3);
}
