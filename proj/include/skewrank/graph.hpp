#ifndef SKEWRANK_GRAPH_HPP
#define SKEWRANK_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewrank {

/// Undirected edge, stored normalized as (u, v) with u < v.
using Edge = std::pair<int, int>;
/// Directed arc (tail, head).
using Arc = std::pair<int, int>;
/// Sorted list of distinct vertex ids.
using VertexSet = std::vector<int>;

inline Edge normalize_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph on dense vertex ids 0..n-1.
// No self-loops, no multi-edges. Immutable after construction.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        edges_.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            edges_.push_back(normalize_edge(u, v));
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("duplicate edge");
        build_adjacency();
    }

    static Graph empty(int n) { return Graph(n, {}); }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return {adj_[v].data(), adj_[v].size()};
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    // Index of {u,v} in edges(), or -1.
    int edge_index(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
        Edge e = normalize_edge(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void build_adjacency() {
        adj_.assign(n_, {});
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    }

    int n_ = 0;
    std::vector<Edge> edges_;            // sorted, normalized
    std::vector<std::vector<int>> adj_;  // sorted adjacency lists
};

// An orientation of a simple graph: exactly one arc per edge.
class OrientedGraph {
public:
    OrientedGraph() = default;

    OrientedGraph(Graph graph, const std::vector<Arc>& arcs) : graph_(std::move(graph)) {
        if (static_cast<int>(arcs.size()) != graph_.edge_count())
            throw std::invalid_argument("arc count must match edge count");
        arcs_.assign(graph_.edge_count(), Arc{-1, -1});
        for (auto [u, v] : arcs) {
            int idx = graph_.edge_index(u, v);
            if (idx < 0) throw std::invalid_argument("arc does not match any edge");
            if (arcs_[idx].first >= 0) throw std::invalid_argument("edge oriented twice");
            arcs_[idx] = {u, v};
        }
    }

    // Builds the underlying graph from the arc list itself.
    OrientedGraph(int n, const std::vector<Arc>& arcs)
        : OrientedGraph(Graph(n, {arcs.begin(), arcs.end()}), arcs) {}

    const Graph& underlying() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int arc_count() const { return graph_.edge_count(); }

    /// Arcs aligned with underlying().edges() order.
    const std::vector<Arc>& arcs() const { return arcs_; }

    /// +1 if (u,v) is an arc, -1 if (v,u) is, 0 if u,v are non-adjacent.
    int arc_sign(int u, int v) const {
        int idx = graph_.edge_index(u, v);
        if (idx < 0) return 0;
        return arcs_[idx].first == u ? 1 : -1;
    }

    OrientedGraph reversed() const {
        std::vector<Arc> rev;
        rev.reserve(arcs_.size());
        for (auto [u, v] : arcs_) rev.push_back({v, u});
        return OrientedGraph(graph_, rev);
    }

    bool operator==(const OrientedGraph& other) const {
        return graph_ == other.graph_ && arcs_ == other.arcs_;
    }

private:
    Graph graph_;
    std::vector<Arc> arcs_;  // arcs_[i] orients graph_.edges()[i]
};

/// Forgets the orientation.
inline const Graph& underlying(const OrientedGraph& og) { return og.underlying(); }

// Connected components as sorted vertex sets, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> out;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// Number of connected components.
inline int component_count(const Graph& g) {
    return static_cast<int>(components(g).size());
}

/// Degree-1 vertices, sorted.
inline VertexSet pendant_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

inline int pendant_count(const Graph& g) {
    return static_cast<int>(pendant_vertices(g).size());
}

namespace detail {

// Validates a deletion set and returns old->new relabeling (-1 = deleted).
inline std::vector<int> deletion_relabel(int n, const VertexSet& w, int& kept_count) {
    std::vector<char> del(n, 0);
    for (int v : w) {
        if (v < 0 || v >= n) throw std::out_of_range("delete_vertices: vertex id out of range");
        if (del[v]) throw std::invalid_argument("delete_vertices: duplicate vertex id");
        del[v] = 1;
    }
    std::vector<int> old_to_new(n, -1);
    kept_count = 0;
    for (int v = 0; v < n; ++v)
        if (!del[v]) old_to_new[v] = kept_count++;
    return old_to_new;
}

}  // namespace detail

// Result of deleting a vertex set: the induced subgraph on the remaining
// vertices, relabeled to 0..k-1. kept[new_id] = old_id.
struct VertexDeletion {
    Graph graph;
    std::vector<int> kept;
};

struct OrientedVertexDeletion {
    OrientedGraph graph;
    std::vector<int> kept;
};

inline VertexDeletion delete_vertices(const Graph& g, const VertexSet& w) {
    int kept_count = 0;
    auto old_to_new = detail::deletion_relabel(g.vertex_count(), w, kept_count);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (old_to_new[u] >= 0 && old_to_new[v] >= 0)
            edges.push_back({old_to_new[u], old_to_new[v]});
    std::vector<int> kept(kept_count);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (old_to_new[v] >= 0) kept[old_to_new[v]] = v;
    return {Graph(kept_count, std::move(edges)), std::move(kept)};
}

inline OrientedVertexDeletion delete_vertices(const OrientedGraph& og, const VertexSet& w) {
    int kept_count = 0;
    auto old_to_new = detail::deletion_relabel(og.vertex_count(), w, kept_count);
    std::vector<Arc> arcs;
    for (auto [u, v] : og.arcs())
        if (old_to_new[u] >= 0 && old_to_new[v] >= 0)
            arcs.push_back({old_to_new[u], old_to_new[v]});
    std::vector<int> kept(kept_count);
    for (int v = 0; v < og.vertex_count(); ++v)
        if (old_to_new[v] >= 0) kept[old_to_new[v]] = v;
    return {OrientedGraph(kept_count, arcs), std::move(kept)};
}

inline Graph delete_vertex(const Graph& g, int v) {
    return delete_vertices(g, {v}).graph;
}

inline OrientedGraph delete_vertex(const OrientedGraph& og, int v) {
    return delete_vertices(og, {v}).graph;
}

/// Induced subgraph on `keep` (sorted distinct ids), relabeled in that order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    VertexSet w;
    std::vector<char> in_keep(g.vertex_count(), 0);
    for (int v : keep) {
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("induced_subgraph: vertex id out of range");
        in_keep[v] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_keep[v]) w.push_back(v);
    return delete_vertices(g, w).graph;
}

inline OrientedGraph induced_subgraph(const OrientedGraph& og, const VertexSet& keep) {
    VertexSet w;
    std::vector<char> in_keep(og.vertex_count(), 0);
    for (int v : keep) {
        if (v < 0 || v >= og.vertex_count())
            throw std::out_of_range("induced_subgraph: vertex id out of range");
        in_keep[v] = 1;
    }
    for (int v = 0; v < og.vertex_count(); ++v)
        if (!in_keep[v]) w.push_back(v);
    return delete_vertices(og, w).graph;
}

// Small builders, used all over the test and verification code.

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

/// Orients every edge {u,v} as (u,v) with u < v.
inline OrientedGraph orient_forward(const Graph& g) {
    std::vector<Arc> arcs(g.edges().begin(), g.edges().end());
    return OrientedGraph(g, arcs);
}

/// Orientation from a bitmask: bit i reverses edge i (in edges() order).
inline OrientedGraph orient_from_bits(const Graph& g, std::uint64_t bits) {
    if (g.edge_count() > 63) throw std::invalid_argument("orient_from_bits: too many edges");
    std::vector<Arc> arcs;
    arcs.reserve(g.edges().size());
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges()[i];
        if ((bits >> i) & 1)
            arcs.push_back({v, u});
        else
            arcs.push_back({u, v});
    }
    return OrientedGraph(g, arcs);
}

/// Cycle 0-1-...-n-1-0 with every arc pointing forward along the walk.
inline OrientedGraph cyclic_orientation(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
    arcs.push_back({n - 1, 0});
    return OrientedGraph(cycle_graph(n), arcs);
}

}  // namespace skewrank

#endif  // SKEWRANK_GRAPH_HPP
