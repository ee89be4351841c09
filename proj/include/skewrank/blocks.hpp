#ifndef SKEWRANK_BLOCKS_HPP
#define SKEWRANK_BLOCKS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "skewrank/graph.hpp"

namespace skewrank {

// One biconnected block: a maximal 2-connected subgraph or a bridge edge.
// Every edge of the host graph lies in exactly one block.
struct Block {
    VertexSet vertices;       // sorted
    std::vector<Edge> edges;  // sorted, normalized

    bool is_single_edge() const { return edges.size() == 1; }

    // Chordless cycle: k >= 3 vertices, exactly k edges, every in-block degree 2.
    bool is_cycle() const {
        if (vertices.size() < 3 || edges.size() != vertices.size()) return false;
        std::vector<int> deg(vertices.size(), 0);
        for (auto [u, v] : edges) {
            ++deg[std::lower_bound(vertices.begin(), vertices.end(), u) - vertices.begin()];
            ++deg[std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin()];
        }
        return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
    }
};

struct BlockDecomposition {
    std::vector<Block> blocks;  // sorted by vertex set
    VertexSet cut_vertices;     // sorted
};

// Hopcroft-Tarjan block decomposition, iterative DFS.
inline BlockDecomposition biconnected_blocks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> next(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<Block> blocks;
    int timer = 0;

    auto pop_block = [&](Edge until) {
        std::vector<Edge> es;
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            es.push_back(e);
            if (e == until) break;
        }
        std::sort(es.begin(), es.end());
        VertexSet vs;
        for (auto [a, b] : es) {
            vs.push_back(a);
            vs.push_back(b);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        blocks.push_back({std::move(vs), std::move(es)});
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        int root_children = 0;
        std::vector<int> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            int v = stack.back();
            auto nbrs = g.neighbors(v);
            if (next[v] < nbrs.size()) {
                int w = nbrs[next[v]++];
                if (disc[w] == -1) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    edge_stack.push_back(normalize_edge(v, w));
                    stack.push_back(w);
                    if (v == root) ++root_children;
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.push_back(normalize_edge(v, w));
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int u = stack.back();
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= disc[u]) {
                        pop_block(normalize_edge(u, v));
                        if (u != root) is_cut[u] = 1;
                    }
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }

    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
    VertexSet cuts;
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) cuts.push_back(v);
    return {std::move(blocks), std::move(cuts)};
}

// Cycle structure of a graph whose blocks may or may not all be edges/cycles.
// Cycles are listed only when every block is a single edge or a chordless
// cycle (blocks_ok); when some block is denser, downstream checks that need
// individual cycles are answered without enumerating them.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;  // closed walks, first vertex smallest
    bool blocks_ok = false;
    bool disjoint = false;
};

namespace detail {

// Walks a cycle block as a vertex sequence, starting at the smallest vertex
// and moving toward its smaller neighbor.
inline std::vector<int> cycle_sequence(const Block& b) {
    int start = b.vertices.front();
    std::vector<std::vector<int>> adj;
    adj.assign(b.vertices.back() + 1, {});
    for (auto [u, v] : b.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<int> seq{start};
    int prev = start;
    int cur = adj[start].front();
    while (cur != start) {
        seq.push_back(cur);
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
    }
    return seq;
}

}  // namespace detail

inline CycleDecomposition cycle_decomposition(const Graph& g,
                                              const BlockDecomposition& bd) {
    CycleDecomposition cd;
    cd.blocks_ok = true;
    for (const Block& b : bd.blocks) {
        if (!b.is_single_edge() && !b.is_cycle()) {
            cd.blocks_ok = false;
            return cd;
        }
    }
    std::vector<int> cycle_count(g.vertex_count(), 0);
    for (const Block& b : bd.blocks) {
        if (!b.is_cycle()) continue;
        cd.cycles.push_back(detail::cycle_sequence(b));
        for (int v : b.vertices) ++cycle_count[v];
    }
    cd.disjoint = std::all_of(cycle_count.begin(), cycle_count.end(),
                              [](int c) { return c <= 1; });
    return cd;
}

inline CycleDecomposition cycle_decomposition(const Graph& g) {
    return cycle_decomposition(g, biconnected_blocks(g));
}

/// mask[v] = 1 iff v lies on some cycle (is in a block with >= 3 vertices).
inline std::vector<char> cycle_vertex_mask(const Graph& g, const BlockDecomposition& bd) {
    std::vector<char> mask(g.vertex_count(), 0);
    for (const Block& b : bd.blocks)
        if (b.vertices.size() >= 3)
            for (int v : b.vertices) mask[v] = 1;
    return mask;
}

inline std::vector<char> cycle_vertex_mask(const Graph& g) {
    return cycle_vertex_mask(g, biconnected_blocks(g));
}

/// Per-vertex count of blocks with >= 3 vertices containing it.
inline std::vector<int> cyclic_block_count(const Graph& g, const BlockDecomposition& bd) {
    std::vector<int> count(g.vertex_count(), 0);
    for (const Block& b : bd.blocks)
        if (b.vertices.size() >= 3)
            for (int v : b.vertices) ++count[v];
    return count;
}

// Decides whether two cycles of g intersect exactly in {x}. Either the two
// cycles live in different blocks at x, or a single block contains two paths
// between four distinct neighbors of x that avoid each other and x. The
// one-block case is decided exactly by a subset DP over the block minus x,
// so the block must have at most ~22 vertices.
inline bool has_two_cycles_meeting_only_at(const Graph& g, int x,
                                           const BlockDecomposition& bd) {
    const Block* home = nullptr;
    int cyclic_blocks_at_x = 0;
    for (const Block& b : bd.blocks) {
        if (b.vertices.size() < 3) continue;
        if (std::binary_search(b.vertices.begin(), b.vertices.end(), x)) {
            ++cyclic_blocks_at_x;
            home = &b;
        }
    }
    if (cyclic_blocks_at_x >= 2) return true;  // one cycle through x per block
    if (cyclic_blocks_at_x == 0) return false;

    // Single block: need two vertex-disjoint x-avoiding paths, each joining
    // two distinct neighbors of x, with all four endpoints distinct.
    const Block& b = *home;
    int m = static_cast<int>(b.vertices.size()) - 1;
    if (m > 22) throw std::invalid_argument("block too large for exact two-cycle test");

    std::vector<int> local(g.vertex_count(), -1);
    int id = 0;
    for (int v : b.vertices)
        if (v != x) local[v] = id++;

    std::uint32_t terminal_mask = 0;
    std::vector<std::uint32_t> adj(m, 0);
    for (auto [u, v] : b.edges) {
        if (u == x) {
            terminal_mask |= 1u << local[v];
            continue;
        }
        if (v == x) {
            terminal_mask |= 1u << local[u];
            continue;
        }
        adj[local[u]] |= 1u << local[v];
        adj[local[v]] |= 1u << local[u];
    }
    if (std::popcount(terminal_mask) < 4) return false;

    std::uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
    // dp[S] = endpoints v such that some path starting in a terminal covers
    // exactly S and ends at v.
    std::vector<std::uint32_t> dp(full + 1, 0);
    for (int a = 0; a < m; ++a)
        if ((terminal_mask >> a) & 1) dp[1u << a] |= 1u << a;
    std::vector<char> ham(full + 1, 0);
    std::vector<char> reach(full + 1, 0);  // reach[C]: some S <= C has ham[S]
    for (std::uint32_t S = 1; S <= full; ++S) {
        std::uint32_t ends = dp[S];
        if (ends) {
            std::uint32_t e = ends;
            while (e) {
                int v = std::countr_zero(e);
                e &= e - 1;
                std::uint32_t spread = adj[v] & ~S;
                while (spread) {
                    int u = std::countr_zero(spread);
                    spread &= spread - 1;
                    dp[S | (1u << u)] |= 1u << u;
                }
            }
            if (std::popcount(S) >= 2 && (ends & terminal_mask)) ham[S] = 1;
        }
        reach[S] = ham[S];
        if (!reach[S]) {
            std::uint32_t e = S;
            while (e && !reach[S]) {
                int v = std::countr_zero(e);
                e &= e - 1;
                reach[S] = reach[S & ~(1u << v)];
            }
        }
    }
    for (std::uint32_t S = 1; S <= full; ++S)
        if (ham[S] && reach[full & ~S]) return true;
    return false;
}

// A cycle attached to the rest of the graph through a single vertex of
// degree 3; every other cycle vertex has degree 2 in the host graph.
struct PendantCycle {
    std::vector<int> cycle;  // vertex sequence
    int attach;              // the unique degree-3 vertex
};

inline std::vector<PendantCycle> pendant_cycles(const Graph& g,
                                                const CycleDecomposition& cd) {
    std::vector<PendantCycle> out;
    for (const auto& cyc : cd.cycles) {
        int attach = -1;
        bool ok = true;
        for (int v : cyc) {
            int d = g.degree(v);
            if (d == 2) continue;
            if (d == 3 && attach < 0) {
                attach = v;
            } else {
                ok = false;
                break;
            }
        }
        if (ok && attach >= 0) out.push_back({cyc, attach});
    }
    return out;
}

}  // namespace skewrank

#endif  // SKEWRANK_BLOCKS_HPP
