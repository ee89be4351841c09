// skewrank — exact algebraic invariants of oriented graphs.
//
// Subcommands read a GraphFile (see docs/file-format.md): comments start
// with '#', the first data line is the vertex count n, and every further
// data line "u v" is an arc from u to v (0-indexed). Reports are JSON on
// stdout. Exit codes: 0 success / all checks passed, 1 check failure or
// classifier disagreement, 2 input error.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewrank/skewrank.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

skewrank::OrientedGraph load_graph(const std::string& path) {
    return skewrank::parse_graph_file(read_input(path));
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_info(const std::string& path) {
    skewrank::OrientedGraph og = load_graph(path);
    skewrank::InvariantReport iv = skewrank::invariant_report(og);
    ordered_json j;
    j["schema"] = "info-v1";
    j["n"] = iv.n;
    j["edges"] = iv.edge_count;
    j["theta"] = iv.theta;
    j["d"] = iv.d;
    j["r"] = iv.r;
    j["sr"] = iv.sr;
    j["eta"] = iv.eta;
    j["beta"] = iv.beta ? ordered_json(*iv.beta) : ordered_json(nullptr);
    j["m"] = iv.m;
    j["p"] = iv.p;
    emit(j);
    return 0;
}

ordered_json trace_to_json(const skewrank::ReductionTrace& trace) {
    ordered_json steps = ordered_json::array();
    for (const skewrank::DeltaStep& s : trace.steps)
        steps.push_back({{"pendant", s.pendant}, {"neighbor", s.neighbor}});
    ordered_json j;
    j["steps"] = std::move(steps);
    j["success"] = trace.success;
    return j;
}

int cmd_classify(const std::string& path) {
    skewrank::OrientedGraph og = load_graph(path);
    skewrank::Verdict v = skewrank::classify_lower_optimal(og);
    ordered_json j;
    j["schema"] = "classify-v1";
    j["conditions"] = {
        {"cycles_pairwise_vertex_disjoint", v.cond1_disjoint_cycles},
        {"cycles_even_mod4_evenly_oriented", v.cond2_cycles_even_mod4_evenly_oriented},
        {"delta_reduces_to_crucial_subgraph", v.cond3_delta_reduces_to_crucial},
    };
    j["structural"] = v.structural;
    j["direct"] = v.direct;
    j["agreement"] = v.structural == v.direct;
    j["r"] = v.r;
    j["sr"] = v.sr;
    j["d"] = v.d;
    j["witness"] = v.witness ? ordered_json(*v.witness) : ordered_json(nullptr);
    if (v.trace) {
        ordered_json t = trace_to_json(*v.trace);
        t["final"] = skewrank::serialize_graph_file(v.trace->final);
        j["trace"] = std::move(t);
    } else {
        j["trace"] = nullptr;
    }
    emit(j);
    return v.structural == v.direct ? 0 : 1;
}

int cmd_reduce(const std::string& path) {
    skewrank::OrientedGraph og = load_graph(path);
    skewrank::ReductionTrace trace = skewrank::delta_reduce(og.underlying());
    skewrank::OrientedGraph final_og = skewrank::apply_trace(og, trace.steps);
    ordered_json j;
    j["schema"] = "reduce-v1";
    ordered_json t = trace_to_json(trace);
    j["steps"] = std::move(t["steps"]);
    j["success"] = trace.success;
    j["final"] = skewrank::serialize_graph_file(final_og);
    emit(j);
    return 0;
}

int cmd_compress(const std::string& path) {
    skewrank::OrientedGraph og = load_graph(path);
    skewrank::CompressedGraph cg = skewrank::compress(og.underlying());
    ordered_json origin = ordered_json::array();
    for (const skewrank::CompressOrigin& o : cg.origin) {
        if (o.kind == skewrank::CompressOrigin::Kind::original)
            origin.push_back({{"kind", "original"}, {"vertex", o.id}});
        else
            origin.push_back({{"kind", "cycle"}, {"cycle", o.id}});
    }
    ordered_json cycles = ordered_json::array();
    for (const auto& cyc : cg.cycles) cycles.push_back(cyc);
    ordered_json j;
    j["schema"] = "compress-v1";
    j["orientation"] = "dropped";
    j["t_graph"] = skewrank::serialize_graph_file(cg.t_graph);
    j["gamma"] = skewrank::serialize_graph_file(cg.gamma);
    j["origin"] = std::move(origin);
    j["cycles"] = std::move(cycles);
    emit(j);
    return 0;
}

int cmd_cycles(const std::string& path) {
    skewrank::OrientedGraph og = load_graph(path);
    skewrank::CycleDecomposition cd = skewrank::cycle_decomposition(og.underlying());
    if (!cd.blocks_ok)
        throw std::runtime_error(
            "cycles are not well-defined: some biconnected block is neither an edge nor a cycle");
    ordered_json arr = ordered_json::array();
    for (const skewrank::VertexSet& cyc : cd.cycles) {
        skewrank::OrientedGraph sub = skewrank::induced_subgraph(og, [&] {
            skewrank::VertexSet sorted = cyc;
            std::sort(sorted.begin(), sorted.end());
            return sorted;
        }());
        arr.push_back({{"len", static_cast<int>(cyc.size())},
                       {"class", skewrank::to_string(skewrank::orientation_class(sub))}});
    }
    emit(arr);
    return 0;
}

int cmd_verify(const skewrank::SuiteConfig& cfg, bool quiet) {
    auto progress = [&](std::uint64_t done, std::uint64_t total) {
        if (quiet) return;
        static std::uint64_t last = 0;
        if (done != total && done - last < total / 20 + 1) return;
        last = done;
        std::cerr << "verify: " << done << "/" << total << " graphs\r";
        if (done == total) std::cerr << "\n";
    };
    skewrank::SuiteReport rep = skewrank::run_suite(cfg, progress);
    ordered_json checks = ordered_json::array();
    for (const skewrank::CheckStats& c : rep.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}});
    ordered_json ces = ordered_json::array();
    for (const skewrank::Counterexample& ce : rep.counterexamples)
        ces.push_back({{"check", ce.check}, {"detail", ce.detail}, {"graph", ce.graph}});
    ordered_json j;
    j["schema"] = "verify-v1";
    j["mode"] = rep.mode;
    j["n_max"] = rep.n_max;
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["graphs_processed"] = rep.graphs_processed;
    j["lower_optimal_found"] = rep.lower_optimal_found;
    j["checks"] = std::move(checks);
    j["all_passed"] = rep.all_passed();
    j["counterexamples"] = std::move(ces);
    emit(j);
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact skew-rank, rank, and cycle-space invariants of oriented graphs"};
    app.require_subcommand(1);

    std::string path;
    auto add_input = [&path](CLI::App* cmd) {
        cmd->add_option("file", path, "GraphFile path, or - for stdin")->required();
    };

    CLI::App* info = app.add_subcommand("info", "Invariant report (r, sr, d, eta, m, ...)");
    add_input(info);
    CLI::App* classify =
        app.add_subcommand("classify", "Lower-optimality: structural test vs direct computation");
    add_input(classify);
    CLI::App* reduce = app.add_subcommand("reduce", "Greedy pendant-pair reduction trace");
    add_input(reduce);
    CLI::App* compress =
        app.add_subcommand("compress", "Contract each vertex-disjoint cycle to a vertex");
    add_input(compress);
    CLI::App* cycles = app.add_subcommand("cycles", "Cycle lengths and orientation classes");
    add_input(cycles);

    CLI::App* verify = app.add_subcommand("verify", "Run the property-check suite");
    int n_max = 5;
    int samples = 0;
    std::uint64_t seed = 0;
    std::string checks_csv;
    int threads = 0;
    bool exhaustive = false;
    bool allow_large = false;
    bool quiet = false;
    verify->add_option("--n", n_max, "Maximum vertex count")->capture_default_str();
    CLI::Option* opt_ex = verify->add_flag("--exhaustive", exhaustive,
                                           "Enumerate every labeled oriented graph up to --n");
    CLI::Option* opt_samples =
        verify->add_option("--samples", samples, "Number of seeded random graphs");
    opt_ex->excludes(opt_samples);
    verify->add_option("--seed", seed, "Seed for random mode and subset picks")
        ->capture_default_str();
    verify->add_option("--checks", checks_csv,
                       "Comma-separated subset of: bounds, lemmas, classifier_equivalence, "
                       "consequences, order_confluence (default: all)");
    verify->add_option("--threads", threads,
                       "Worker threads (0 = all cores; env SKEWRANK_THREADS overrides)");
    verify->add_flag("--allow-large", allow_large, "Permit exhaustive --n 6 (14.3M graphs)");
    verify->add_flag("--quiet", quiet, "Suppress progress output on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }

    try {
        if (info->parsed()) return cmd_info(path);
        if (classify->parsed()) return cmd_classify(path);
        if (reduce->parsed()) return cmd_reduce(path);
        if (compress->parsed()) return cmd_compress(path);
        if (cycles->parsed()) return cmd_cycles(path);

        skewrank::SuiteConfig cfg;
        cfg.n_max = n_max;
        cfg.seed = seed;
        if (exhaustive) {
            cfg.mode = skewrank::SuiteConfig::Mode::exhaustive;
            if (n_max == 6 && !allow_large)
                throw std::runtime_error(
                    "exhaustive --n 6 enumerates 14,348,907 graphs; pass --allow-large to "
                    "confirm");
        } else if (opt_samples->count() > 0) {
            cfg.mode = skewrank::SuiteConfig::Mode::random;
            cfg.samples = samples;
        } else {
            throw std::runtime_error("verify needs either --exhaustive or --samples N");
        }
        if (!checks_csv.empty()) {
            std::stringstream ss(checks_csv);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) cfg.checks.push_back(tok);
        }
        cfg.threads = threads;
        if (const char* env = std::getenv("SKEWRANK_THREADS"))
            cfg.threads = std::atoi(env);
        return cmd_verify(cfg, quiet);
    } catch (const skewrank::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
