#ifndef SKEWRANK_COMPRESS_HPP
#define SKEWRANK_COMPRESS_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewrank/blocks.hpp"
#include "skewrank/graph.hpp"

namespace skewrank {

// Origin of one T_G vertex: an original acyclic vertex or a compressed cycle.
struct CompressOrigin {
    enum class Kind { original, cycle } kind;
    int id;  // original vertex id, or index into CompressedGraph::cycles
};

// T_G: each cycle shrunk to one vertex. Vertices 0..|U|-1 are the acyclic
// ("U") vertices in ascending original order; the remaining vertices stand
// for the cycles, in cycle-list order. gamma is T_G minus the cycle vertices.
struct CompressedGraph {
    Graph t_graph{0, {}};
    Graph gamma{0, {}};
    std::vector<CompressOrigin> origin;       // per T_G vertex
    std::vector<std::vector<int>> cycles;     // original vertex sequences
    int u_count = 0;                          // |U|
};

namespace detail {

// Smallest vertex witnessing that cycles are not pairwise vertex-disjoint.
inline int shared_cycle_vertex(const Graph& g, const BlockDecomposition& bd) {
    for (const Block& b : bd.blocks)
        if (!b.is_single_edge() && !b.is_cycle()) return b.vertices.front();
    std::vector<int> count = cyclic_block_count(g, bd);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (count[v] >= 2) return v;
    return -1;
}

}  // namespace detail

/// Compresses each cycle of g into a single vertex. Requires the cycles of g
/// to be pairwise vertex-disjoint; otherwise throws, naming a vertex shared
/// by two cycles.
inline CompressedGraph compress(const Graph& g) {
    BlockDecomposition bd = biconnected_blocks(g);
    CycleDecomposition cd = cycle_decomposition(g, bd);
    if (!cd.blocks_ok || !cd.disjoint) {
        int v = detail::shared_cycle_vertex(g, bd);
        throw std::invalid_argument("cycles are not pairwise vertex-disjoint (vertex " +
                                    std::to_string(v) + " lies on more than one cycle)");
    }

    CompressedGraph out;
    out.cycles = cd.cycles;

    std::vector<int> to_t(g.vertex_count(), -1);
    for (std::size_t i = 0; i < cd.cycles.size(); ++i)
        for (int v : cd.cycles[i]) to_t[v] = static_cast<int>(i);  // cycle index, offset later
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (to_t[v] >= 0) continue;
        to_t[v] = out.u_count++;
        out.origin.push_back({CompressOrigin::Kind::original, v});
    }
    // U vertices got ids in ascending original order; cycles follow.
    for (std::size_t i = 0; i < cd.cycles.size(); ++i)
        out.origin.push_back({CompressOrigin::Kind::cycle, static_cast<int>(i)});
    std::vector<char> on_cycle(g.vertex_count(), 0);
    for (const auto& cyc : cd.cycles)
        for (int v : cyc) on_cycle[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (on_cycle[v]) to_t[v] += out.u_count;

    std::vector<Edge> t_edges;
    for (auto [u, v] : g.edges()) {
        if (to_t[u] == to_t[v]) continue;  // edge inside one cycle
        t_edges.push_back(normalize_edge(to_t[u], to_t[v]));
    }
    std::sort(t_edges.begin(), t_edges.end());
    t_edges.erase(std::unique(t_edges.begin(), t_edges.end()), t_edges.end());
    int t_n = out.u_count + static_cast<int>(cd.cycles.size());
    out.t_graph = Graph(t_n, std::move(t_edges));

    VertexSet cycle_ids;
    for (int v = out.u_count; v < t_n; ++v) cycle_ids.push_back(v);
    out.gamma = delete_vertices(out.t_graph, cycle_ids).graph;
    return out;
}

}  // namespace skewrank

#endif  // SKEWRANK_COMPRESS_HPP
