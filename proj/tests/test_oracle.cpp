#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "happyset/generators.hpp"
#include "happyset/oracle.hpp"

using namespace happyset;

TEST_CASE("brute maxhs") {
    graph g = figure3_graph();
    CHECK(brute_maxhs(g, 5).objective == 4);
    CHECK(brute_maxhs(g, g.n()).objective == g.n());

    graph edgeless(6, {});
    for (int k = 0; k <= 6; ++k) CHECK(brute_maxhs(edgeless, k).objective == k);
}

TEST_CASE("brute maxehs") {
    CHECK(brute_maxehs(figure6_graph(), 10).objective == 34);

    graph g = figure3_graph();
    CHECK(brute_maxehs(g, 0).objective == 0);
    CHECK(brute_maxehs(g, 1).objective == 0);

    std::vector<edge> k5e;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5e.emplace_back(u, v);
    graph k5(5, k5e);
    for (int k = 0; k <= 5; ++k)
        CHECK(brute_maxehs(k5, k).objective == k * (k - 1) / 2);
}

TEST_CASE("certificates re-validate and are lexicographically smallest") {
    graph g = figure3_graph();
    auto sol = brute_maxhs(g, 5);
    CHECK(count_happy_vertices(g, sol.chosen) == sol.objective);
    CHECK(sol.chosen == std::vector<int>{0, 1, 2, 3, 4});

    auto esol = brute_maxehs(g, 4);
    CHECK(count_happy_edges(g, esol.chosen) == esol.objective);
    CHECK(esol.chosen == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("enumeration cap is enforced") {
    graph g = gen_gnp(40, 0.5, 1);
    CHECK_THROWS_AS(brute_maxhs(g, 20, 1000), oracle_cap_error);
    CHECK_THROWS_AS(brute_maxehs(g, 20, 1000), oracle_cap_error);
    CHECK_NOTHROW(brute_maxhs(g, 1, 1000));
}
