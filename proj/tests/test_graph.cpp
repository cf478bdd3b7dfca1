#include <sstream>

#include "doctest.h"
#include "vedeg/graph.hpp"

using namespace vedeg;

// Figure-style test graph on 9 vertices with one triangle.
// Vertex letters from the worked example: x=0 u=1 v=2 r=3 p=4 s=5 t=6 z=7 y=8.
static Graph g9() {
    return Graph::from_edge_list(
        9, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {4, 6}, {4, 5}, {6, 7}, {6, 8}, {8, 7}});
}

TEST_SUITE_BEGIN("graph");

TEST_CASE("from_edge_list normalizes and validates") {
    Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);

    Graph g = g9();
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 9);

    // duplicates and reversed pairs collapse
    Graph dup = Graph::from_edge_list(3, {{1, 0}, {0, 1}, {1, 2}});
    CHECK(dup.edge_count() == 2);
    CHECK(dup == p3);

    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edge_list(0, {}), GraphError);
}

TEST_CASE("degree") {
    CHECK(g9().degree(1) == 3);
    Graph p8 = path_graph(8);
    CHECK(p8.degree(0) == 1);
    CHECK(p8.degree(7) == 1);
    Graph star8 = star_graph(8);
    CHECK(star8.degree(0) == 7);
    CHECK_THROWS_AS(p8.degree(8), GraphError);
}

TEST_CASE("closed_neighborhood") {
    Graph p3 = path_graph(3);
    CHECK(p3.closed_neighborhood(1) == std::vector<VertexId>{0, 1, 2});
    CHECK(g9().closed_neighborhood(2) == std::vector<VertexId>{1, 2, 4});
    // |N[v]| = deg(v) + 1 in a simple graph
    Graph g = g9();
    for (int v = 0; v < g.vertex_count(); ++v)
        CHECK(g.closed_neighborhood(v).size() == static_cast<size_t>(g.degree(v)) + 1);
}

TEST_CASE("ve_degree matches the worked example") {
    Graph g = g9();
    const int expected[9] = {3, 4, 6, 3, 6, 3, 6, 4, 4};  // c_x..c_y in vertex order
    for (int v = 0; v < 9; ++v)
        CHECK(g.ve_degree(v) == expected[v]);

    Graph p8 = path_graph(8);
    CHECK(p8.ve_degree(3) == 4);  // interior vertex, distance >= 2 from both ends
    Graph star8 = star_graph(8);
    for (int v = 0; v < 8; ++v)
        CHECK(star8.ve_degree(v) == 7);  // all 7 edges touch the center
}

TEST_CASE("ev_degree matches the worked example") {
    Graph g = g9();
    CHECK(g.ev_degree({0, 1}) == 4);  // xu
    CHECK(g.ev_degree({1, 2}) == 5);  // uv
    CHECK(g.ev_degree({4, 6}) == 6);  // pt
    CHECK(g.ev_degree({7, 8}) == 3);  // yz
    CHECK_THROWS_AS(g.ev_degree({0, 8}), GraphError);

    // triangle-free: ev-degree = degree sum of the endpoints
    Graph p8 = path_graph(8);
    for (const auto& e : p8.edges())
        CHECK(p8.ev_degree(e) == p8.degree(e.a) + p8.degree(e.b));

    Graph k5 = complete_graph(5);
    for (const auto& e : k5.edges())
        CHECK(k5.ev_degree(e) == 5);
}

TEST_CASE("triangle_count") {
    CHECK(g9().triangle_count() == 1);  // t-z-y
    CHECK(path_graph(8).triangle_count() == 0);
    CHECK(complete_graph(4).triangle_count() == 4);
    CHECK(complete_graph(6).triangle_count() == 20);  // C(6,3)
}

TEST_CASE("all_pairs_distance") {
    Graph p3 = path_graph(3);
    auto d3 = all_pairs_distance(p3);
    CHECK(d3(0, 2) == 2);
    CHECK(d3(0, 1) == 1);
    CHECK(d3(1, 1) == 0);

    Graph star8 = star_graph(8);
    auto ds = all_pairs_distance(star8);
    CHECK(ds(1, 2) == 2);
    CHECK(ds(0, 3) == 1);

    CHECK(all_pairs_distance(path_graph(8)).total() == 2 * 84);

    // symmetry and triangle inequality
    Graph g = g9();
    auto d = all_pairs_distance(g);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            CHECK(d(i, j) == d(j, i));
            for (int k = 0; k < 9; ++k)
                CHECK(d(i, j) <= d(i, k) + d(k, j));
        }

    Graph split = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(all_pairs_distance(split), DisconnectedError);
}

TEST_CASE("is_connected / is_tree") {
    CHECK(path_graph(8).is_connected());
    CHECK(path_graph(8).is_tree());
    CHECK(g9().is_connected());
    CHECK_FALSE(g9().is_tree());  // 9 vertices, 9 edges
    Graph split = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(split.is_connected());
    Graph single = Graph::from_edge_list(1, {});
    CHECK(single.is_connected());
    CHECK(single.is_tree());
}

TEST_CASE("edge-list text round trip") {
    Graph g = g9();
    std::string text = to_edge_list(g);
    std::istringstream in(text);
    CHECK(read_edge_list(in) == g);

    std::istringstream commented("# comment\n3 2\n0 1\n# another\n1 2\n");
    CHECK(read_edge_list(commented) == path_graph(3));

    std::istringstream missing_newline("3 2\n0 1\n1 2");
    CHECK_THROWS_WITH_AS(read_edge_list(missing_newline),
                         doctest::Contains("trailing newline"), GraphError);

    std::istringstream bad_count("3 5\n0 1\n1 2\n");
    CHECK_THROWS_AS(read_edge_list(bad_count), GraphError);

    std::istringstream junk("3 2\n0 x\n1 2\n");
    CHECK_THROWS_AS(read_edge_list(junk), GraphError);

    std::istringstream empty("");
    CHECK_THROWS_AS(read_edge_list(empty), GraphError);
}

TEST_SUITE_END();
