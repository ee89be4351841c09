#ifndef SKEWRANK_INVARIANTS_HPP
#define SKEWRANK_INVARIANTS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewrank/blocks.hpp"
#include "skewrank/graph.hpp"
#include "skewrank/int_matrix.hpp"
#include "skewrank/matching.hpp"

namespace skewrank {

inline IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix m(g.vertex_count(), g.vertex_count());
    for (auto [u, v] : g.edges()) {
        m(u, v) = 1;
        m(v, u) = 1;
    }
    return m;
}

inline IntMatrix skew_adjacency_matrix(const OrientedGraph& og) {
    IntMatrix m(og.vertex_count(), og.vertex_count());
    for (auto [u, v] : og.arcs()) {
        m(u, v) = 1;
        m(v, u) = -1;
    }
    return m;
}

/// Rank of the adjacency matrix, exact.
inline int rank_r(const Graph& g) { return rank(adjacency_matrix(g)); }

/// Rank of the skew-adjacency matrix, exact. Always even.
inline int skew_rank(const OrientedGraph& og) {
    int sr = rank(skew_adjacency_matrix(og));
    if (sr % 2 != 0) throw std::logic_error("skew-symmetric matrix with odd rank");
    return sr;
}

/// d(G) = |E| - |V| + (number of connected components).
inline int cyclomatic_d(const Graph& g) {
    return g.edge_count() - g.vertex_count() + component_count(g);
}

enum class OrientationClass { oddly_oriented, evenly_oriented, odd_cycle, not_a_cycle };

inline const char* to_string(OrientationClass c) {
    switch (c) {
        case OrientationClass::oddly_oriented: return "oddly_oriented";
        case OrientationClass::evenly_oriented: return "evenly_oriented";
        case OrientationClass::odd_cycle: return "odd_cycle";
        default: return "not_a_cycle";
    }
}

/// Product of skew-adjacency entries along the closed walk cycle[0] ->
/// cycle[1] -> ... -> cycle[0]; +1 or -1. Throws if a hop is not an edge.
inline int cycle_sign(const OrientedGraph& og, const std::vector<int>& cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("cycle must have length >= 3");
    int sign = 1;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int s = og.arc_sign(cycle[i], cycle[(i + 1) % cycle.size()]);
        if (s == 0) throw std::invalid_argument("vertex sequence is not a cycle");
        sign *= s;
    }
    return sign;
}

/// Classifies an oriented graph whose underlying graph is a single cycle.
/// Traversal starts at vertex 0 toward its smaller neighbor; for even cycles
/// the sign does not depend on the traversal (the entry count is even).
inline OrientationClass orientation_class(const OrientedGraph& og) {
    const Graph& g = og.underlying();
    int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n || component_count(g) != 1)
        return OrientationClass::not_a_cycle;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return OrientationClass::not_a_cycle;
    if (n % 2 != 0) return OrientationClass::odd_cycle;
    std::vector<int> seq{0};
    int prev = 0, cur = g.neighbors(0)[0];
    while (cur != 0) {
        seq.push_back(cur);
        auto nb = g.neighbors(cur);
        int nxt = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
    }
    return cycle_sign(og, seq) > 0 ? OrientationClass::evenly_oriented
                                   : OrientationClass::oddly_oriented;
}

/// Closed form for the skew-rank of an oriented cycle of order q.
inline int cycle_skew_rank_oracle(int q, OrientationClass cls) {
    if (q < 3) throw std::invalid_argument("cycle order must be >= 3");
    switch (cls) {
        case OrientationClass::oddly_oriented: return q;
        case OrientationClass::evenly_oriented: return q - 2;
        case OrientationClass::odd_cycle: return q - 1;
        default: throw std::invalid_argument("not a cycle");
    }
}

enum class PathOrCycle { path, cycle };

/// Closed form for the adjacency rank of a path or cycle of order q.
inline int path_cycle_rank_oracle(PathOrCycle kind, int q) {
    if (kind == PathOrCycle::path) {
        if (q < 1) throw std::invalid_argument("path order must be >= 1");
        return q % 2 == 0 ? q : q - 1;
    }
    if (q < 3) throw std::invalid_argument("cycle order must be >= 3");
    return q % 4 == 0 ? q - 2 : q;
}

struct InvariantReport {
    int n = 0;
    int edge_count = 0;
    int theta = 0;                // connected components
    int r = 0;                    // rank of A(G)
    int sr = 0;                   // skew-rank
    int eta = 0;                  // nullity, n - r
    int d = 0;                    // cycle-space dimension
    std::optional<int> beta;      // |E| - |V| + 1, connected inputs only
    int m = 0;                    // matching number
    int p = 0;                    // pendant vertices
};

inline InvariantReport invariant_report(const OrientedGraph& og) {
    const Graph& g = og.underlying();
    InvariantReport rep;
    rep.n = g.vertex_count();
    rep.edge_count = g.edge_count();
    rep.theta = component_count(g);
    rep.r = rank_r(g);
    rep.sr = skew_rank(og);
    rep.eta = rep.n - rep.r;
    rep.d = rep.edge_count - rep.n + rep.theta;
    if (rep.theta == 1) rep.beta = rep.edge_count - rep.n + 1;
    rep.m = matching_number(g);
    rep.p = pendant_count(g);
    return rep;
}

struct BoundCheck {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = true;       // vacuously true when skipped
    bool applicable = true;  // false = hypothesis absent, bound skipped
};

namespace detail {
inline long long ceil_div2(long long a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }
}

/// Evaluates the known skew-rank / rank / nullity inequalities on one graph.
/// Inapplicable hypotheses mark the entry skipped rather than guessed.
inline std::vector<BoundCheck> bound_report(const OrientedGraph& og) {
    const Graph& g = og.underlying();
    InvariantReport iv = invariant_report(og);
    CycleDecomposition cd = cycle_decomposition(g);

    std::vector<BoundCheck> out;
    auto add = [&out](std::string name, long long lhs, long long rhs, bool applicable) {
        out.push_back({std::move(name), lhs, rhs, !applicable || lhs <= rhs, applicable});
    };

    add("skew_rank_lower", iv.r - 2LL * iv.d, iv.sr, true);
    add("skew_rank_upper", iv.sr, iv.r + 2LL * iv.d, true);

    // Sum over pairwise (vertex-, hence edge-) disjoint cycles.
    {
        bool applicable = cd.blocks_ok && cd.disjoint;
        long long lhs = 0;
        if (applicable) {
            for (const auto& cyc : cd.cycles) lhs += static_cast<long long>(cyc.size()) - 2;
        }
        add("disjoint_cycle_sum", lhs, iv.sr, applicable);
    }

    bool connected = iv.theta == 1;
    long long beta = connected ? *iv.beta : 0;
    add("matching_skew_lower", connected ? 2LL * iv.m - 2 * beta : 0, iv.sr, connected);
    add("matching_skew_upper", iv.sr, connected ? 2LL * iv.m : 0, connected);

    // The nullity bound assumes minimum degree >= 1 (an isolated vertex
    // contributes 1 to the nullity but nothing to the right-hand side).
    {
        bool no_isolated = true;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0) { no_isolated = false; break; }
        add("nullity_pendant", iv.eta, 2LL * iv.d + iv.p, no_isolated);
    }
    add("matching_rank_lower", detail::ceil_div2(iv.r - iv.d), iv.m, true);
    add("matching_rank_upper", iv.m, (iv.r + 2LL * iv.d) / 2, true);
    return out;
}

}  // namespace skewrank

#endif  // SKEWRANK_INVARIANTS_HPP
