#include <cmath>

#include "doctest.h"
#include "vedeg/graph.hpp"
#include "vedeg/indices.hpp"

using namespace vedeg;

static Graph g9() {
    return Graph::from_edge_list(
        9, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {4, 6}, {4, 5}, {6, 7}, {6, 8}, {8, 7}});
}

TEST_SUITE_BEGIN("indices");

TEST_CASE("wiener") {
    CHECK(wiener(path_graph(8)) == 84);
    CHECK(wiener(path_graph(3)) == 4);
    // 2,2,3,3-tetramethylbutane skeleton: two degree-4 centers, six leaves
    Graph tmb = Graph::from_edge_list(
        8, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {4, 5}, {4, 6}, {4, 7}});
    CHECK(wiener(tmb) == 58);
    CHECK_THROWS_AS(wiener(Graph::from_edge_list(4, {{0, 1}, {2, 3}})), DisconnectedError);
}

TEST_CASE("zagreb and forgotten") {
    Graph p8 = path_graph(8);
    CHECK(first_zagreb(p8) == 26);
    CHECK(second_zagreb(p8) == 24);
    CHECK(forgotten(p8) == 50);  // 2*1 + 6*8
    CHECK(second_zagreb(g9()) == 46);
    Graph star8 = star_graph(8);
    CHECK(first_zagreb(star8) == 56);
    CHECK(second_zagreb(star8) == 49);
    CHECK(forgotten(star8) == 350);
    // cross-route: S = F + S^beta on trees
    CHECK(ev_zagreb(p8) == forgotten(p8) + ve_zagreb_beta(p8));
}

TEST_CASE("randic") {
    CHECK(std::abs(randic(path_graph(8)) - 3.914) < 5e-4);
    CHECK(randic(star_graph(8)) == doctest::Approx(std::sqrt(7.0)).epsilon(1e-12));
}

TEST_CASE("ev-degree Zagreb S") {
    CHECK(ev_zagreb(g9()) == 175);
    CHECK(ev_zagreb(path_graph(8)) == 98);
    CHECK(ev_zagreb(star_graph(8)) == 448);  // 7 * 8^2 = n^2(n-1) at n=8
}

TEST_CASE("ve-degree Zagreb family") {
    Graph g = g9();
    Graph p8 = path_graph(8);
    Graph star8 = star_graph(8);

    CHECK(ve_zagreb_alpha(g) == 183);
    CHECK(ve_zagreb_alpha(p8) == 90);
    CHECK(ve_zagreb_alpha(star8) == 392);  // n(n-1)^2 at n=8

    // The worked example prints S^beta = 84, but its own listed ve-degrees
    // sum to 7+10+7+12+12+9+10+10+8 = 85; the definition wins.
    CHECK(ve_zagreb_beta(g) == 85);
    CHECK(ve_zagreb_beta(p8) == 48);

    CHECK(ve_zagreb_mu(g) == 202);
    CHECK(ve_zagreb_mu(p8) == 84);
    CHECK(ve_zagreb_mu(star8) == 343);  // (n-1)^3 at n=8
}

TEST_CASE("ve-degree Randic") {
    CHECK(std::abs(ve_randic(path_graph(8)) - 2.144) < 5e-4);
    // The worked example prints 13.425; applying the definition to its own
    // ve-degrees gives 2/sqrt(12) + 3/sqrt(24) + 2/6 + 1/sqrt(18) + 1/4.
    CHECK(ve_randic(g9()) == doctest::Approx(2.0087582986142696).epsilon(1e-12));
}

TEST_CASE("total ev-degree") {
    CHECK(total_ev_degree(g9()) == 39);  // = M1 - 3 = 42 - 3, one triangle
    CHECK(total_ev_degree(path_graph(8)) == 26);
    CHECK(total_ev_degree(star_graph(8)) == 56);
    CHECK(total_ev_degree(path_graph(8)) == first_zagreb(path_graph(8)));
}

TEST_CASE("index_vector is consistent with the individual routes") {
    for (const Graph& g : {g9(), path_graph(8), star_graph(8), complete_graph(5)}) {
        const IndexVector iv = index_vector(g);
        CHECK(iv.wiener == wiener(g));
        CHECK(iv.m1 == first_zagreb(g));
        CHECK(iv.m2 == second_zagreb(g));
        CHECK(iv.forgotten == forgotten(g));
        CHECK(iv.s_ev == ev_zagreb(g));
        CHECK(iv.s_alpha == ve_zagreb_alpha(g));
        CHECK(iv.s_beta == ve_zagreb_beta(g));
        CHECK(iv.s_mu == ve_zagreb_mu(g));
        CHECK(iv.t_total == total_ev_degree(g));
        CHECK(iv.randic == doctest::Approx(randic(g)).epsilon(1e-15));
        CHECK(iv.r_ve == doctest::Approx(ve_randic(g)).epsilon(1e-15));
        CHECK(iv.t_total == iv.m1 - 3 * g.triangle_count());
    }
}

TEST_CASE("disconnected inputs are rejected everywhere") {
    Graph split = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(first_zagreb(split), DisconnectedError);
    CHECK_THROWS_AS(randic(split), DisconnectedError);
    CHECK_THROWS_AS(ev_zagreb(split), DisconnectedError);
    CHECK_THROWS_AS(ve_zagreb_alpha(split), DisconnectedError);
    CHECK_THROWS_AS(ve_zagreb_beta(split), DisconnectedError);
    CHECK_THROWS_AS(ve_zagreb_mu(split), DisconnectedError);
    CHECK_THROWS_AS(ve_randic(split), DisconnectedError);
    CHECK_THROWS_AS(total_ev_degree(split), DisconnectedError);
    CHECK_THROWS_AS(index_vector(split), DisconnectedError);
}

TEST_CASE("closed forms on constructed families") {
    for (int n = 3; n <= 12; ++n) {
        Graph p = path_graph(n);
        Graph star = star_graph(n);
        CHECK(ev_zagreb(p) == 16 * n - 30);
        CHECK(ve_zagreb_beta(p) == 8 * n - 16);
        CHECK(ev_zagreb(star) == static_cast<std::int64_t>(n) * n * (n - 1));
        CHECK(ve_zagreb_alpha(star) == static_cast<std::int64_t>(n) * (n - 1) * (n - 1));
        CHECK(ve_zagreb_beta(star) == 2ll * (n - 1) * (n - 1));
        CHECK(ve_zagreb_mu(star) == static_cast<std::int64_t>(n - 1) * (n - 1) * (n - 1));
        if (n >= 4)
            CHECK(ve_zagreb_alpha(p) == 16 * n - 38);
        if (n >= 5)
            CHECK(ve_zagreb_mu(p) == 16 * n - 44);
    }
    for (int n = 3; n <= 12; ++n) {
        std::int64_t nn = n;
        Graph k = complete_graph(n);
        CHECK(ev_zagreb(k) == nn * nn * nn * (nn - 1) / 2);
        CHECK(ve_zagreb_alpha(k) == nn * nn * nn * (nn - 1) * (nn - 1) / 4);
        CHECK(ve_zagreb_beta(k) == nn * nn * (nn - 1) * (nn - 1) / 2);
        CHECK(ve_zagreb_mu(k) == nn * nn * nn * (nn - 1) * (nn - 1) * (nn - 1) / 8);
    }
}

TEST_SUITE_END();
