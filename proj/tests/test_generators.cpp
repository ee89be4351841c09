#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "skewrank/classify.hpp"
#include "skewrank/generators.hpp"
#include "skewrank/graph_io.hpp"
#include "skewrank/invariants.hpp"

using namespace skewrank;

TEST_CASE("enumeration counts") {
    CHECK(oriented_graph_count(1) == 1);
    CHECK(oriented_graph_count(2) == 3);
    CHECK(oriented_graph_count(3) == 27);
    CHECK(oriented_graph_count(4) == 729);
    CHECK(oriented_graph_count(6) == 14348907);
    CHECK_THROWS_AS(oriented_graph_count(7), std::invalid_argument);
    std::uint64_t seen = 0;
    enumerate_oriented_graphs(3, [&](const OrientedGraph&) { ++seen; });
    CHECK(seen == 27);
}

TEST_CASE("index decoding: pair digits in fixed order") {
    // n=2: index 0 -> no edge, 1 -> arc 0->1, 2 -> arc 1->0.
    CHECK(oriented_graph_from_index(2, 0).arc_count() == 0);
    CHECK(oriented_graph_from_index(2, 1).arc_sign(0, 1) == 1);
    CHECK(oriented_graph_from_index(2, 2).arc_sign(1, 0) == 1);
    CHECK_THROWS_AS(oriented_graph_from_index(2, 3), std::out_of_range);
    // n=3 pair order (0,1),(0,2),(1,2): index 3 = digit 1 on pair (0,2).
    CHECK(oriented_graph_from_index(3, 3).arc_sign(0, 2) == 1);
}

TEST_CASE("enumeration emits no duplicates at n<=4") {
    for (int n = 1; n <= 4; ++n) {
        std::set<std::string> seen;
        enumerate_oriented_graphs(
            n, [&](const OrientedGraph& og) { seen.insert(serialize_graph_file(og)); });
        CHECK(seen.size() == oriented_graph_count(n));
    }
}

TEST_CASE("random generators are deterministic and well-formed") {
    OrientedGraph a = random_oriented_graph(7, 0.5, 123);
    OrientedGraph b = random_oriented_graph(7, 0.5, 123);
    CHECK(a == b);
    CHECK(random_tree(9, 5) == random_tree(9, 5));
    CHECK(random_unicyclic(9, 4, 5) == random_unicyclic(9, 4, 5));
    CHECK_THROWS_AS(random_oriented_graph(-1, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_oriented_graph(3, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_unicyclic(5, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_unicyclic(5, 6, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_tree(-1, 1), std::invalid_argument);
}

TEST_CASE("random trees are trees") {
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 12;
        Graph t = random_tree(n, 400 + trial);
        CHECK(t.vertex_count() == n);
        CHECK(t.edge_count() == n - 1);
        CHECK(component_count(t) == 1);
        CHECK(cyclomatic_d(t) == 0);
    }
}

TEST_CASE("random unicyclic graphs have one cycle of the requested girth") {
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + trial % 10;
        int girth = 3 + trial % (n - 2);
        Graph u = random_unicyclic(n, girth, 500 + trial);
        CHECK(u.vertex_count() == n);
        CHECK(u.edge_count() == n);
        CHECK(component_count(u) == 1);
        CHECK(cyclomatic_d(u) == 1);
        CycleDecomposition cd = cycle_decomposition(u);
        REQUIRE(cd.cycles.size() == 1);
        CHECK(static_cast<int>(cd.cycles[0].size()) == girth);
    }
}

TEST_CASE("constructed graphs: base cases") {
    // No tree operations: disjoint evenly oriented cycles (plus possible
    // isolated vertices).
    OrientedGraph base = construct_lower_optimal({6}, 0, 42);
    CycleDecomposition cd = cycle_decomposition(base.underlying());
    REQUIRE(cd.cycles.size() == 1);
    CHECK(cd.cycles[0].size() == 6);
    OrientedGraph cyc = induced_subgraph(base, [&] {
        VertexSet s = cd.cycles[0];
        std::sort(s.begin(), s.end());
        return s;
    }());
    CHECK(orientation_class(cyc) == OrientationClass::evenly_oriented);
    Verdict v = classify_lower_optimal(base);
    CHECK(v.structural);
    CHECK(v.direct);

    // Pure forest: matched part has a perfect matching, so sr = 2m = r.
    OrientedGraph forest = construct_lower_optimal({}, 5, 43);
    CHECK(cyclomatic_d(forest.underlying()) == 0);
    InvariantReport iv = invariant_report(forest);
    CHECK(iv.sr == 2 * iv.m);
    CHECK(iv.r == iv.sr);
}

TEST_CASE("constructed graphs validate cycle lengths") {
    CHECK_THROWS_AS(construct_lower_optimal({4}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_lower_optimal({3}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_lower_optimal({8}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_lower_optimal({6, 12}, 0, 1), std::invalid_argument);
    CHECK_NOTHROW(construct_lower_optimal({6, 10, 14}, 0, 1));
    CHECK_THROWS_AS(construct_lower_optimal({6}, -1, 1), std::invalid_argument);
}

TEST_CASE("constructed graphs are always lower-optimal by direct computation") {
    for (int trial = 0; trial < 100; ++trial) {
        Rng rng(60000 + trial);
        std::vector<int> lengths;
        int count = rng.below(3);
        for (int i = 0; i < count; ++i) lengths.push_back(std::vector<int>{6, 10, 14}[rng.below(3)]);
        int ops = rng.below(26);
        OrientedGraph og = construct_lower_optimal(lengths, ops, rng.next());
        InvariantReport iv = invariant_report(og);
        REQUIRE(iv.sr == iv.r - 2 * iv.d);
        Verdict v = classify_lower_optimal(og);
        REQUIRE(v.structural);
        REQUIRE(v.direct);
    }
}

TEST_CASE("splitmix and rng helpers are stable") {
    CHECK(splitmix64(0) == splitmix64(0));
    CHECK(splitmix64(1) != splitmix64(2));
    Rng a(9), b(9);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    Rng c(10);
    for (int i = 0; i < 100; ++i) {
        int v = c.below(7);
        CHECK(v >= 0);
        CHECK(v < 7);
    }
}
