#ifndef SKEWRANK_REDUCTION_HPP
#define SKEWRANK_REDUCTION_HPP

#include <stdexcept>
#include <vector>

#include "skewrank/blocks.hpp"
#include "skewrank/graph.hpp"
#include "skewrank/invariants.hpp"

namespace skewrank {

// One pendant deletion: remove `pendant` together with its unique neighbor.
// Ids refer to the graph as it was immediately before the step.
struct DeltaStep {
    int pendant;
    int neighbor;
};

struct ReductionTrace {
    std::vector<DeltaStep> steps;
    Graph final{0, {}};
    bool success = false;
};

namespace detail {
inline int pendant_neighbor(const Graph& g, int pendant) {
    if (pendant < 0 || pendant >= g.vertex_count() || g.degree(pendant) != 1)
        throw std::invalid_argument("vertex is not pendant");
    return g.neighbors(pendant)[0];
}
}  // namespace detail

/// Deletes a pendant vertex and its neighbor; remaining ids are relabeled
/// order-preservingly.
inline Graph delta_step(const Graph& g, int pendant) {
    int nbr = detail::pendant_neighbor(g, pendant);
    return delete_vertices(g, {std::min(pendant, nbr), std::max(pendant, nbr)}).graph;
}

inline OrientedGraph delta_step(const OrientedGraph& og, int pendant) {
    int nbr = detail::pendant_neighbor(og.underlying(), pendant);
    return delete_vertices(og, {std::min(pendant, nbr), std::max(pendant, nbr)}).graph;
}

/// True iff every component of g0 is a cycle or an isolated vertex, with
/// exactly expected_cycles cycle components.
inline bool is_crucial(const Graph& g0, int expected_cycles) {
    int cycles = 0;
    for (const VertexSet& comp : components(g0)) {
        if (comp.size() == 1) continue;
        if (comp.size() < 3) return false;
        bool all_two = true;
        for (int v : comp)
            if (g0.degree(v) != 2) {
                all_two = false;
                break;
            }
        if (!all_two) return false;
        ++cycles;  // connected, all degrees 2 => a single cycle
    }
    return cycles == expected_cycles;
}

/// Greedy pendant elimination. At each stage picks the smallest-id pendant
/// whose neighbor lies on no cycle; a pendant hanging off a cycle vertex is
/// never deleted, because that would destroy a cycle for good and the target
/// of d(G) surviving cycles would become unreachable. Stops when no pendant
/// remains (success = final graph is d(G) disjoint cycles plus isolated
/// vertices) or when only cycle-attached pendants remain (failure).
inline ReductionTrace delta_reduce(const Graph& g) {
    int target = cyclomatic_d(g);
    ReductionTrace trace;
    Graph cur = g;
    while (true) {
        VertexSet pendants = pendant_vertices(cur);
        if (pendants.empty()) {
            trace.success = is_crucial(cur, target);
            break;
        }
        std::vector<char> on_cycle = cycle_vertex_mask(cur);
        int chosen = -1;
        for (int p : pendants)
            if (!on_cycle[cur.neighbors(p)[0]]) {
                chosen = p;
                break;
            }
        if (chosen < 0) {
            trace.success = false;
            break;
        }
        trace.steps.push_back({chosen, cur.neighbors(chosen)[0]});
        cur = delta_step(cur, chosen);
    }
    trace.final = cur;
    return trace;
}

/// Replays recorded steps against a graph; throws if any step is invalid.
inline Graph apply_trace(const Graph& g, const std::vector<DeltaStep>& steps) {
    Graph cur = g;
    for (const DeltaStep& s : steps) {
        if (detail::pendant_neighbor(cur, s.pendant) != s.neighbor)
            throw std::invalid_argument("trace step does not match graph");
        cur = delta_step(cur, s.pendant);
    }
    return cur;
}

inline OrientedGraph apply_trace(const OrientedGraph& og, const std::vector<DeltaStep>& steps) {
    OrientedGraph cur = og;
    for (const DeltaStep& s : steps) {
        if (detail::pendant_neighbor(cur.underlying(), s.pendant) != s.neighbor)
            throw std::invalid_argument("trace step does not match graph");
        cur = delta_step(cur, s.pendant);
    }
    return cur;
}

}  // namespace skewrank

#endif  // SKEWRANK_REDUCTION_HPP
