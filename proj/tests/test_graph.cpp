#include <catch2/catch_amalgamated.hpp>

#include "skewrank/graph.hpp"

using namespace skewrank;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);           // self-loop
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);   // duplicate pair
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);           // out of range
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);                // negative n
    CHECK_THROWS_AS(OrientedGraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_NOTHROW(Graph(0, {}));
}

TEST_CASE("adjacency queries") {
    Graph g(4, {{2, 1}, {0, 1}, {3, 0}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    auto nb = g.neighbors(0);
    CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{1, 3});
    CHECK(g.edge_index(0, 1) >= 0);
    CHECK(g.edge_index(0, 2) == -1);
    CHECK(g == Graph(4, {{0, 1}, {1, 2}, {0, 3}}));
}

TEST_CASE("oriented graph arc signs") {
    OrientedGraph og(3, {{0, 1}, {2, 1}});
    CHECK(og.arc_sign(0, 1) == 1);
    CHECK(og.arc_sign(1, 0) == -1);
    CHECK(og.arc_sign(2, 1) == 1);
    CHECK(og.arc_sign(1, 2) == -1);
    CHECK(og.arc_sign(0, 2) == 0);
    OrientedGraph rev = og.reversed();
    CHECK(rev.arc_sign(0, 1) == -1);
    CHECK(rev.arc_sign(1, 2) == 1);
    CHECK(underlying(og) == Graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("components are sorted sets ordered by smallest member") {
    Graph g(6, {{4, 5}, {0, 2}});
    auto comps = components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == VertexSet{0, 2});
    CHECK(comps[1] == VertexSet{1});
    CHECK(comps[2] == VertexSet{3});
    CHECK(comps[3] == VertexSet{4, 5});
    CHECK(component_count(g) == 4);
}

TEST_CASE("pendant detection") {
    Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    CHECK(pendant_vertices(paw) == VertexSet{3});
    CHECK(pendant_count(paw) == 1);
    CHECK(pendant_vertices(cycle_graph(5)).empty());
    CHECK(pendant_vertices(path_graph(2)) == VertexSet{0, 1});
}

TEST_CASE("vertex deletion relabels order-preservingly") {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    VertexDeletion del = delete_vertices(g, {1, 3});
    CHECK(del.kept == VertexSet{0, 2, 4});
    CHECK(del.graph == Graph(3, {{0, 2}}));  // surviving edge {4,0} relabeled
    CHECK_THROWS_AS(delete_vertices(g, {5}), std::out_of_range);
    CHECK(delete_vertex(g, 0) == Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
}

TEST_CASE("oriented deletion keeps arc directions") {
    OrientedGraph og(4, {{0, 1}, {2, 1}, {2, 3}});
    OrientedVertexDeletion del = delete_vertices(og, {0});
    CHECK(del.kept == VertexSet{1, 2, 3});
    CHECK(del.graph.arc_sign(1, 0) == 1);   // old arc 2->1
    CHECK(del.graph.arc_sign(1, 2) == 1);   // old arc 2->3
}

TEST_CASE("induced subgraph") {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(induced_subgraph(g, {0, 1, 2}) == Graph(3, {{0, 1}, {1, 2}}));
    OrientedGraph og(3, {{1, 0}, {1, 2}});
    OrientedGraph sub = induced_subgraph(og, {0, 1});
    CHECK(sub.arc_sign(1, 0) == 1);
}

TEST_CASE("builders") {
    CHECK(path_graph(1) == Graph(1, {}));
    CHECK(path_graph(3) == Graph(3, {{0, 1}, {1, 2}}));
    CHECK(cycle_graph(3) == Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK(complete_graph(4).edge_count() == 6);
    OrientedGraph f = orient_forward(path_graph(3));
    CHECK(f.arc_sign(0, 1) == 1);
    CHECK(f.arc_sign(1, 2) == 1);
}

TEST_CASE("orientation from bit pattern reverses chosen edges") {
    Graph p3 = path_graph(3);
    OrientedGraph a = orient_from_bits(p3, 0b00);
    CHECK(a.arc_sign(0, 1) == 1);
    CHECK(a.arc_sign(1, 2) == 1);
    OrientedGraph b = orient_from_bits(p3, 0b01);
    CHECK(b.arc_sign(1, 0) == 1);
    CHECK(b.arc_sign(1, 2) == 1);
}

TEST_CASE("cyclic orientation walks the cycle forward") {
    OrientedGraph c4 = cyclic_orientation(4);
    CHECK(c4.arc_sign(0, 1) == 1);
    CHECK(c4.arc_sign(1, 2) == 1);
    CHECK(c4.arc_sign(2, 3) == 1);
    CHECK(c4.arc_sign(3, 0) == 1);
}
