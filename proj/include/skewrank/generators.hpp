#ifndef SKEWRANK_GENERATORS_HPP
#define SKEWRANK_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "skewrank/graph.hpp"

namespace skewrank {

/// Stable seed mixer for deriving independent per-item seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Thin deterministic wrapper over mt19937_64: raw draws only, so results
// never depend on library distribution internals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform draw in [0, k); k <= 0 yields 0.
    int below(int k) { return k <= 1 ? 0 : static_cast<int>(next() % k); }

    bool coin() { return (next() & 1) != 0; }

    /// True with probability p.
    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next() < static_cast<std::uint64_t>(p * 18446744073709551616.0);
    }

  private:
    std::mt19937_64 eng_;
};

/// 3^(n(n-1)/2): one of {absent, u->v, v->u} per unordered pair.
inline std::uint64_t oriented_graph_count(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (n > 6) throw std::invalid_argument("exhaustive enumeration is limited to n <= 6");
    std::uint64_t count = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) count *= 3;
    return count;
}

/// The index-th oriented graph on n vertices, index in base 3 over the
/// pairs (0,1),(0,2),...,(0,n-1),(1,2),...: digit 0 = no edge, 1 = arc u->v,
/// 2 = arc v->u.
inline OrientedGraph oriented_graph_from_index(int n, std::uint64_t index) {
    if (index >= oriented_graph_count(n)) throw std::out_of_range("enumeration index");
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            switch (index % 3) {
                case 1: arcs.push_back({u, v}); break;
                case 2: arcs.push_back({v, u}); break;
                default: break;
            }
            index /= 3;
        }
    return OrientedGraph(n, arcs);
}

/// Every labeled oriented simple graph on n vertices, exactly once.
inline void enumerate_oriented_graphs(int n,
                                      const std::function<void(const OrientedGraph&)>& fn) {
    std::uint64_t count = oriented_graph_count(n);
    for (std::uint64_t i = 0; i < count; ++i) fn(oriented_graph_from_index(n, i));
}

/// Orients each edge of g by a coin flip.
inline OrientedGraph orient_random(const Graph& g, Rng& rng) {
    std::vector<Arc> arcs;
    arcs.reserve(g.edges().size());
    for (auto [u, v] : g.edges())
        arcs.push_back(rng.coin() ? Arc{v, u} : Arc{u, v});
    return OrientedGraph(g, arcs);
}

inline OrientedGraph random_oriented_graph(int n, double edge_prob, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw std::invalid_argument("edge probability must be in [0, 1]");
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_prob)) arcs.push_back(rng.coin() ? Arc{v, u} : Arc{u, v});
    return OrientedGraph(Graph(n, {arcs.begin(), arcs.end()}), arcs);
}

/// Uniform random labeled tree via a Pruefer sequence.
inline Graph random_tree(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (n <= 1) return Graph::empty(n);
    if (n == 2) return Graph(2, {{0, 1}});
    Rng rng(seed);
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = rng.below(n);
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<Edge> edges;
    for (int s : seq) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (deg[leaf] == 1) {
                edges.push_back(normalize_edge(leaf, s));
                deg[leaf] = 0;
                --deg[s];
                break;
            }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) (a < 0 ? a : b) = v;
    edges.push_back(normalize_edge(a, b));
    return Graph(n, std::move(edges));
}

/// Cycle of length girth on vertices 0..girth-1, remaining vertices attached
/// one by one to a uniform earlier vertex.
inline Graph random_unicyclic(int n, int girth, std::uint64_t seed) {
    if (girth < 3 || girth > n) throw std::invalid_argument("girth must satisfy 3 <= girth <= n");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < girth; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, girth - 1});
    for (int v = girth; v < n; ++v) edges.push_back(normalize_edge(rng.below(v), v));
    return Graph(n, std::move(edges));
}

/// Builds a lower-optimal oriented graph: disjoint evenly-oriented cycles
/// with lengths = 2 (mod 4), up to two extra isolated vertices, then
/// tree_ops inverse pendant-deletion steps. Each step adds a fresh
/// quasi-pendant + pendant pair, hung on a uniformly chosen vertex that lies
/// on no cycle (or started as a new two-vertex component), so every
/// structural condition for lower-optimality is preserved.
inline OrientedGraph construct_lower_optimal(const std::vector<int>& cycle_lengths,
                                             int tree_ops, std::uint64_t seed) {
    for (int q : cycle_lengths)
        if (q < 3 || q % 4 != 2)
            throw std::invalid_argument("invalid cycle length " + std::to_string(q) +
                                        " (must be >= 3 and = 2 mod 4)");
    if (tree_ops < 0) throw std::invalid_argument("tree_ops must be non-negative");

    Rng rng(seed);
    std::vector<Arc> arcs;
    int n = 0;
    for (int q : cycle_lengths) {
        // All-forward arcs give sign +1; flipping an even number of arcs
        // keeps the cycle evenly oriented while varying the orientation.
        std::vector<char> flip(q, 0);
        int flips = 0;
        for (int i = 0; i < q; ++i)
            if (rng.coin()) {
                flip[i] = 1;
                ++flips;
            }
        if (flips % 2 != 0) flip[0] ^= 1;
        for (int i = 0; i < q; ++i) {
            int u = n + i, v = n + (i + 1) % q;
            arcs.push_back(flip[i] ? Arc{v, u} : Arc{u, v});
        }
        n += q;
    }

    std::vector<int> anchors;  // vertices off every cycle
    int isolated = rng.below(3);
    for (int i = 0; i < isolated; ++i) anchors.push_back(n++);

    for (int op = 0; op < tree_ops; ++op) {
        int pick = rng.below(static_cast<int>(anchors.size()) + 1);
        int x = n++, y = n++;
        if (pick < static_cast<int>(anchors.size())) {
            int a = anchors[pick];
            arcs.push_back(rng.coin() ? Arc{x, a} : Arc{a, x});
        }
        arcs.push_back(rng.coin() ? Arc{y, x} : Arc{x, y});
        anchors.push_back(x);
        anchors.push_back(y);
    }

    std::vector<Edge> edges(arcs.begin(), arcs.end());
    return OrientedGraph(Graph(n, std::move(edges)), arcs);
}

}  // namespace skewrank

#endif  // SKEWRANK_GENERATORS_HPP
