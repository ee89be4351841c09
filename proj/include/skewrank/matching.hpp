#ifndef SKEWRANK_MATCHING_HPP
#define SKEWRANK_MATCHING_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "skewrank/graph.hpp"

namespace skewrank {
namespace detail {

inline void matching_remove_vertex(std::vector<std::vector<int>>& adj, int v) {
    for (int u : adj[v]) adj[u].erase(std::find(adj[u].begin(), adj[u].end(), v));
    adj[v].clear();
}

// Branch-and-reduce maximum matching. Pendant vertices are always safely
// matched to their neighbor; once every degree is exactly 2 the remaining
// graph is a disjoint union of cycles, matched by formula. Otherwise pick
// one edge at a maximum-degree vertex and branch: include it in the matching
// (dropping both endpoints) or exclude it (dropping just the edge).
inline int matching_rec(std::vector<std::vector<int>> adj) {
    int n = static_cast<int>(adj.size());
    int matched = 0;
    bool again = true;
    while (again) {
        again = false;
        for (int v = 0; v < n; ++v) {
            if (adj[v].size() != 1) continue;
            int u = adj[v][0];
            matching_remove_vertex(adj, v);
            matching_remove_vertex(adj, u);
            ++matched;
            again = true;
        }
    }
    int best = -1;
    for (int v = 0; v < n; ++v)
        if (!adj[v].empty() && (best < 0 || adj[v].size() > adj[best].size())) best = v;
    if (best < 0) return matched;
    if (adj[best].size() == 2) {
        // Disjoint cycles: each contributes floor(len / 2).
        std::vector<char> seen(n, 0);
        for (int v = 0; v < n; ++v) {
            if (adj[v].empty() || seen[v]) continue;
            int len = 0, prev = -1, cur = v;
            do {
                seen[cur] = 1;
                ++len;
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
            } while (cur != v);
            matched += len / 2;
        }
        return matched;
    }
    int u = adj[best][0];
    int with_edge;
    {
        auto copy = adj;
        matching_remove_vertex(copy, best);
        matching_remove_vertex(copy, u);
        with_edge = 1 + matching_rec(std::move(copy));
    }
    int without_edge;
    {
        auto copy = adj;
        copy[best].erase(std::find(copy[best].begin(), copy[best].end(), u));
        copy[u].erase(std::find(copy[u].begin(), copy[u].end(), best));
        without_edge = matching_rec(std::move(copy));
    }
    return matched + std::max(with_edge, without_edge);
}

}  // namespace detail

/// Maximum number of pairwise non-adjacent edges.
inline int matching_number(const Graph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    return detail::matching_rec(std::move(adj));
}

}  // namespace skewrank

#endif  // SKEWRANK_MATCHING_HPP
