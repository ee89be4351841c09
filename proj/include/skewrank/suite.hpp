#ifndef SKEWRANK_SUITE_HPP
#define SKEWRANK_SUITE_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "skewrank/blocks.hpp"
#include "skewrank/classify.hpp"
#include "skewrank/generators.hpp"
#include "skewrank/graph.hpp"
#include "skewrank/graph_io.hpp"
#include "skewrank/invariants.hpp"
#include "skewrank/reduction.hpp"

namespace skewrank {

inline const std::vector<std::string>& suite_check_names() {
    static const std::vector<std::string> names = {
        "bounds", "lemmas", "classifier_equivalence", "consequences", "order_confluence"};
    return names;
}

struct SuiteConfig {
    enum class Mode { exhaustive, random };
    Mode mode = Mode::exhaustive;
    int n_max = 5;
    int samples = 0;                  // random mode only
    std::uint64_t seed = 0;
    std::vector<std::string> checks;  // empty = every group
    int threads = 0;                  // 0 = hardware concurrency
};

struct Counterexample {
    std::string check;
    std::string detail;  // failed assertion(s), expected vs actual
    std::string graph;   // replayable GraphFile text
};

struct CheckStats {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
};

struct SuiteReport {
    std::string mode;
    int n_max = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<CheckStats> checks;  // enabled groups only, canonical order
    std::uint64_t graphs_processed = 0;
    std::uint64_t lower_optimal_found = 0;
    std::vector<Counterexample> counterexamples;
    double wall_seconds = 0.0;  // measured here; deliberately absent from
                                // serialized reports so runs stay comparable

    bool all_passed() const {
        for (const CheckStats& c : checks)
            if (c.failed > 0) return false;
        return true;
    }
};

namespace detail {

constexpr int kGroupCount = 5;
constexpr int kBounds = 0, kLemmas = 1, kClassifier = 2, kConsequences = 3, kConfluence = 4;
constexpr int kMaxCounterexamplesPerCheck = 25;
constexpr int kConfluenceVertexLimit = 8;

struct WorkerResult {
    std::array<std::uint64_t, kGroupCount> passed{};
    std::array<std::uint64_t, kGroupCount> failed{};
    std::vector<Counterexample> counterexamples;
    std::uint64_t lower_optimal = 0;
    std::uint64_t processed = 0;
};

/// Does ANY sequence of pendant deletions end in `target` disjoint cycles
/// plus isolated vertices? Exhaustive over step orders; the cycle-space
/// dimension never grows under deletion, so branches that lost a cycle are
/// cut immediately.
inline bool any_delta_order_succeeds(const Graph& g, int target) {
    if (cyclomatic_d(g) < target) return false;
    VertexSet pendants = pendant_vertices(g);
    if (pendants.empty()) return is_crucial(g, target);
    for (int p : pendants)
        if (any_delta_order_succeeds(delta_step(g, p), target)) return true;
    return false;
}

inline std::string pair_str(const char* a, long long x, const char* b, long long y) {
    return std::string(a) + "=" + std::to_string(x) + " " + b + "=" + std::to_string(y);
}

inline void check_one_graph(const OrientedGraph& og, std::uint64_t item_seed,
                            const std::array<bool, kGroupCount>& enabled, WorkerResult& res) {
    const Graph& g = og.underlying();
    ++res.processed;

    int r = rank_r(g);
    int sr = skew_rank(og);
    int d = cyclomatic_d(g);
    bool lower_optimal = sr == r - 2 * d;
    if (lower_optimal) ++res.lower_optimal;

    std::array<std::vector<std::string>, kGroupCount> issues;

    if (enabled[kBounds]) {
        for (const BoundCheck& b : bound_report(og))
            if (b.applicable && !b.holds)
                issues[kBounds].push_back(b.name + ": expected " + std::to_string(b.lhs) +
                                          " <= " + std::to_string(b.rhs));
    }

    if (enabled[kLemmas]) {
        auto& out = issues[kLemmas];
        BlockDecomposition bd = biconnected_blocks(g);

        // Induced-subgraph monotonicity on seeded random vertex subsets.
        Rng rng(item_seed);
        for (int trial = 0; trial < 3; ++trial) {
            VertexSet keep;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (rng.coin()) keep.push_back(v);
            OrientedGraph h = induced_subgraph(og, keep);
            int srh = skew_rank(h), rh = rank_r(h.underlying());
            if (srh > sr)
                out.push_back("induced_subgraph_skew_rank_monotone: " +
                              pair_str("sr(H)", srh, "sr(G)", sr));
            if (rh > r)
                out.push_back("induced_subgraph_rank_monotone: " + pair_str("r(H)", rh, "r(G)", r));
        }

        // Both ranks are additive over connected components.
        {
            int sum_sr = 0, sum_r = 0;
            for (const VertexSet& comp : components(g)) {
                OrientedGraph h = induced_subgraph(og, comp);
                sum_sr += skew_rank(h);
                sum_r += rank_r(h.underlying());
            }
            if (sum_sr != sr)
                out.push_back("component_additivity_skew_rank: " +
                              pair_str("sum", sum_sr, "sr", sr));
            if (sum_r != r)
                out.push_back("component_additivity_rank: " + pair_str("sum", sum_r, "r", r));
        }

        // Rank zero exactly for edgeless graphs.
        if ((sr == 0) != (g.edge_count() == 0)) out.push_back("zero_skew_rank_iff_no_edges");
        if ((r == 0) != (g.edge_count() == 0)) out.push_back("zero_rank_iff_no_edges");

        // Deleting a pendant and its neighbor drops both ranks by exactly 2.
        for (int y : pendant_vertices(g)) {
            int x = g.neighbors(y)[0];
            OrientedGraph h = delete_vertices(og, {std::min(x, y), std::max(x, y)}).graph;
            int rh = rank_r(h.underlying()), srh = skew_rank(h);
            if (rh != r - 2)
                out.push_back("pendant_pair_deletion_rank_drop: " + pair_str("r(H)", rh, "r-2", r - 2));
            if (srh != sr - 2)
                out.push_back("pendant_pair_deletion_skew_rank_drop: " +
                              pair_str("sr(H)", srh, "sr-2", sr - 2));
        }

        // Cut-vertex rank identities, fired only when a hypothesis holds.
        for (int x : bd.cut_vertices) {
            VertexDeletion del = delete_vertices(g, {x});
            int r_minus_x = rank_r(del.graph);
            for (const VertexSet& comp_new : components(del.graph)) {
                VertexSet comp;
                for (int v : comp_new) comp.push_back(del.kept[v]);
                Graph g1 = induced_subgraph(g, comp);
                VertexSet with_x = comp;
                with_x.insert(std::lower_bound(with_x.begin(), with_x.end(), x), x);
                Graph g1x = induced_subgraph(g, with_x);
                int r1 = rank_r(g1), r1x = rank_r(g1x);
                if (r1 == r1x - 2) {
                    if (r != r_minus_x + 2)
                        out.push_back("cut_vertex_rank_step: " +
                                      pair_str("r", r, "r(G-x)+2", r_minus_x + 2));
                } else if (r1 == r1x) {
                    int r_rest = rank_r(delete_vertices(g, comp).graph);
                    if (r != r1 + r_rest)
                        out.push_back("cut_vertex_rank_split: " +
                                      pair_str("r", r, "r(G1)+r(G-G1)", r1 + r_rest));
                }
            }
        }

        // Single-vertex deletion: skew-rank steps by 0 or 2, rank by <= 2,
        // and the cycle-space dimension reacts to cycle membership.
        std::vector<char> on_cycle = cycle_vertex_mask(g, bd);
        for (int x = 0; x < g.vertex_count(); ++x) {
            OrientedGraph hx = delete_vertex(og, x);
            int rx = rank_r(hx.underlying());
            int srx = skew_rank(hx);
            int dx = cyclomatic_d(hx.underlying());
            if (srx != sr && srx != sr - 2)
                out.push_back("vertex_deletion_skew_rank_step: " + pair_str("sr(G-x)", srx, "sr", sr));
            if (rx < r - 2 || rx > r)
                out.push_back("vertex_deletion_rank_step: " + pair_str("r(G-x)", rx, "r", r));
            if (!on_cycle[x]) {
                if (dx != d)
                    out.push_back("off_cycle_deletion_keeps_cycle_dim: " +
                                  pair_str("d(G-x)", dx, "d", d));
            } else {
                if (dx > d - 1)
                    out.push_back("cycle_vertex_deletion_drops_cycle_dim: " +
                                  pair_str("d(G-x)", dx, "d", d));
                if (!(sr >= srx && srx >= rx - 2 * dx && rx - 2 * dx >= r - 2 * d))
                    out.push_back("cycle_vertex_deletion_bound_chain");
                bool two_cycles = false;
                bool decidable = true;
                try {
                    two_cycles = has_two_cycles_meeting_only_at(g, x, bd);
                } catch (const std::invalid_argument&) {
                    decidable = false;  // block beyond the exact-test size gate
                }
                if (decidable && two_cycles && dx > d - 2)
                    out.push_back("shared_vertex_deletion_drops_cycle_dim_by_two: " +
                                  pair_str("d(G-x)", dx, "d", d));
            }
        }

        // With pairwise disjoint cycles, their number is exactly d.
        CycleDecomposition cd = cycle_decomposition(g, bd);
        if (cd.blocks_ok && cd.disjoint && static_cast<int>(cd.cycles.size()) != d)
            out.push_back("disjoint_cycle_count_equals_cycle_dim: " +
                          pair_str("cycles", static_cast<long long>(cd.cycles.size()), "d", d));
    }

    if (enabled[kClassifier]) {
        Verdict v = classify_lower_optimal(og);
        if (v.structural != v.direct)
            issues[kClassifier].push_back(
                std::string("structural=") + (v.structural ? "true" : "false") +
                " direct=" + (v.direct ? "true" : "false") +
                (v.witness ? " (" + *v.witness + ")" : ""));
    }

    if (enabled[kConsequences]) {
        auto& out = issues[kConsequences];
        if (lower_optimal) {
            for (const ClaimCheck& c : check_lower_optimal_consequences(og))
                if (!c.holds)
                    out.push_back(c.claim + (c.detail.empty() ? "" : " [" + c.detail + "]"));
        } else {
            // The pendant-cycle skew-rank split holds whether or not the
            // graph is lower-optimal; exercise it wherever it applies.
            CycleDecomposition cd = cycle_decomposition(g);
            for (const PendantCycle& pc : pendant_cycles(g, cd)) {
                int oracle = pendant_cycle_skew_rank(og, pc.cycle);
                if (oracle != sr)
                    out.push_back("pendant_cycle_formula_matches_direct: " +
                                  pair_str("formula", oracle, "sr", sr));
            }
        }
    }

    if (enabled[kConfluence] && g.vertex_count() <= kConfluenceVertexLimit) {
        bool greedy = delta_reduce(g).success;
        bool any = any_delta_order_succeeds(g, d);
        if (greedy != any)
            issues[kConfluence].push_back(std::string("greedy=") + (greedy ? "true" : "false") +
                                          " some_order=" + (any ? "true" : "false"));
    }

    for (int group = 0; group < kGroupCount; ++group) {
        if (!enabled[group]) continue;
        if (issues[group].empty()) {
            ++res.passed[group];
            continue;
        }
        ++res.failed[group];
        std::string detail;
        for (const std::string& s : issues[group]) {
            if (!detail.empty()) detail += "; ";
            detail += s;
        }
        res.counterexamples.push_back(
            {suite_check_names()[group], std::move(detail), serialize_graph_file(og)});
    }
}

inline OrientedGraph random_population_item(const SuiteConfig& cfg, std::uint64_t index) {
    Rng rng(splitmix64(cfg.seed ^ splitmix64(index + 0x5eedULL)));
    int n = 1 + rng.below(cfg.n_max);
    int kind = rng.below(100);
    if (kind < 70 || n < 3) {
        double p = 0.2 + 0.15 * rng.below(3);
        return random_oriented_graph(n, p, rng.next());
    }
    if (kind < 85) {
        Graph t = random_tree(n, rng.next());
        return orient_random(t, rng);
    }
    int girth = 3 + rng.below(n - 2);
    Graph u = random_unicyclic(n, girth, rng.next());
    return orient_random(u, rng);
}

}  // namespace detail

/// Runs the selected check groups over the configured population. The result
/// depends only on the config, never on thread count or scheduling: work is
/// split into fixed chunks whose results are merged in chunk order.
inline SuiteReport run_suite(
    const SuiteConfig& cfg,
    const std::function<void(std::uint64_t, std::uint64_t)>& progress = {}) {
    if (cfg.n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    if (cfg.mode == SuiteConfig::Mode::exhaustive && cfg.n_max > 6)
        throw std::invalid_argument("exhaustive mode is limited to n_max <= 6");
    if (cfg.mode == SuiteConfig::Mode::random && cfg.samples < 1)
        throw std::invalid_argument("random mode needs samples >= 1");

    std::array<bool, detail::kGroupCount> enabled{};
    if (cfg.checks.empty()) {
        enabled.fill(true);
    } else {
        for (const std::string& name : cfg.checks) {
            auto& names = suite_check_names();
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) throw std::invalid_argument("unknown check group: " + name);
            enabled[it - names.begin()] = true;
        }
    }

    // Population as a flat index space.
    std::vector<std::uint64_t> offsets;  // exhaustive: population start per n
    std::uint64_t total = 0;
    if (cfg.mode == SuiteConfig::Mode::exhaustive) {
        for (int n = 1; n <= cfg.n_max; ++n) {
            offsets.push_back(total);
            total += oriented_graph_count(n);
        }
    } else {
        total = static_cast<std::uint64_t>(cfg.samples);
    }

    auto item = [&](std::uint64_t index) -> OrientedGraph {
        if (cfg.mode == SuiteConfig::Mode::random)
            return detail::random_population_item(cfg, index);
        int n = cfg.n_max;
        while (n > 1 && offsets[n - 1] > index) --n;
        return oriented_graph_from_index(n, index - offsets[n - 1]);
    };

    auto start = std::chrono::steady_clock::now();
    const std::uint64_t chunk_size = cfg.mode == SuiteConfig::Mode::exhaustive ? 4096 : 256;
    const std::uint64_t num_chunks = total == 0 ? 0 : (total + chunk_size - 1) / chunk_size;
    std::vector<detail::WorkerResult> chunk_results(num_chunks);

    unsigned hw = std::thread::hardware_concurrency();
    int thread_count = cfg.threads > 0 ? cfg.threads : static_cast<int>(hw ? hw : 1);
    thread_count = std::max(1, std::min<int>(thread_count, static_cast<int>(num_chunks ? num_chunks : 1)));

    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> done{0};
    std::mutex progress_mutex;
    auto worker = [&]() {
        while (true) {
            std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= num_chunks) break;
            std::uint64_t lo = c * chunk_size;
            std::uint64_t hi = std::min(total, lo + chunk_size);
            detail::WorkerResult& res = chunk_results[c];
            for (std::uint64_t i = lo; i < hi; ++i)
                detail::check_one_graph(item(i), splitmix64(cfg.seed ^ splitmix64(i)), enabled,
                                        res);
            std::uint64_t d = done.fetch_add(hi - lo) + (hi - lo);
            if (progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                progress(d, total);
            }
        }
    };
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    SuiteReport report;
    report.mode = cfg.mode == SuiteConfig::Mode::exhaustive ? "exhaustive" : "random";
    report.n_max = cfg.n_max;
    report.samples = cfg.mode == SuiteConfig::Mode::random ? cfg.samples : 0;
    report.seed = cfg.seed;
    std::array<std::uint64_t, detail::kGroupCount> passed{}, failed{};
    std::array<int, detail::kGroupCount> ce_used{};
    for (const detail::WorkerResult& res : chunk_results) {
        report.graphs_processed += res.processed;
        report.lower_optimal_found += res.lower_optimal;
        for (int gidx = 0; gidx < detail::kGroupCount; ++gidx) {
            passed[gidx] += res.passed[gidx];
            failed[gidx] += res.failed[gidx];
        }
        for (const Counterexample& ce : res.counterexamples) {
            auto& names = suite_check_names();
            int gidx = static_cast<int>(
                std::find(names.begin(), names.end(), ce.check) - names.begin());
            if (ce_used[gidx] < detail::kMaxCounterexamplesPerCheck) {
                ++ce_used[gidx];
                report.counterexamples.push_back(ce);
            }
        }
    }
    for (int gidx = 0; gidx < detail::kGroupCount; ++gidx)
        if (enabled[gidx])
            report.checks.push_back({suite_check_names()[gidx], passed[gidx], failed[gidx]});
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace skewrank

#endif  // SKEWRANK_SUITE_HPP
