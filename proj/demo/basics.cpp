// Walk-through of the library: build a few oriented graphs, read off their
// invariants, classify lower-optimality, reduce, and compress.
//
//   c++ -std=c++20 -Iinclude demo/basics.cpp -o basics && ./basics

#include <cstdio>

#include "skewrank/skewrank.hpp"

using namespace skewrank;

static void show(const char* name, const OrientedGraph& og) {
    InvariantReport iv = invariant_report(og);
    Verdict v = classify_lower_optimal(og);
    std::printf("%-28s n=%2d  r=%2d  sr=%2d  d=%d  m=%d  lower-optimal=%s\n", name, iv.n, iv.r,
                iv.sr, iv.d, iv.m, v.direct ? "yes" : "no");
}

int main() {
    std::printf("== invariants ==\n");
    show("evenly oriented C6", cyclic_orientation(6));
    show("oddly oriented C6", OrientedGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}));
    show("oriented path P5", orient_forward(path_graph(5)));
    show("triangle + tail", OrientedGraph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}));
    show("constructed, cycles {6,10}", construct_lower_optimal({6, 10}, 5, 1));

    std::printf("\n== reduction ==\n");
    // 6-cycle with a two-edge tail: one pendant-pair deletion leaves the cycle.
    Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {6, 7}});
    ReductionTrace tr = delta_reduce(g);
    std::printf("tail graph: %zu step(s), success=%s, final has %d vertices\n", tr.steps.size(),
                tr.success ? "true" : "false", tr.final.vertex_count());
    for (const DeltaStep& s : tr.steps)
        std::printf("  delete pendant %d with neighbor %d\n", s.pendant, s.neighbor);

    std::printf("\n== compression ==\n");
    CompressedGraph cg = compress(g);
    std::printf("T has %d vertices (%d kept + %zu cycles), Gamma has %d\n",
                cg.t_graph.vertex_count(), cg.u_count, cg.cycles.size(),
                cg.gamma.vertex_count());
    std::printf("rank split: r(G)=%d, r(T)=%d, cycle orders sum=%d\n", rank_r(g),
                rank_r(cg.t_graph), 6);

    std::printf("\n== bounds ==\n");
    OrientedGraph og = orient_from_bits(g, 0b10110010);
    for (const BoundCheck& b : bound_report(og))
        std::printf("%-22s %s  (%lld vs %lld)%s\n", b.name.c_str(), b.holds ? "holds" : "FAILS",
                    b.lhs, b.rhs, b.applicable ? "" : "  [not applicable]");
    return 0;
}
