#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef SKEWRANK_CLI_PATH
#error "SKEWRANK_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "skewrank_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out = scratch_dir() / ("out" + std::to_string(counter));
    fs::path err = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;
    std::string cmd = std::string(SKEWRANK_CLI_PATH) + " " + args + " >" + out.string() +
                      " 2>" + err.string();
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

const std::string kEvenC6 = "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
const std::string kOddC6 = "6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n";

}  // namespace

TEST_CASE("info reports the invariant block") {
    fs::path f = write_file("even_c6.graph", kEvenC6);
    RunResult r = run_cli("info " + f.string());
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == "info-v1");
    CHECK(j["n"] == 6);
    CHECK(j["edges"] == 6);
    CHECK(j["theta"] == 1);
    CHECK(j["d"] == 1);
    CHECK(j["r"] == 6);
    CHECK(j["sr"] == 4);
    CHECK(j["eta"] == 0);
    CHECK(j["beta"] == 1);
    CHECK(j["m"] == 3);
    CHECK(j["p"] == 0);
}

TEST_CASE("info on an edgeless graph, beta null when disconnected") {
    fs::path f = write_file("empty3.graph", "3\n");
    RunResult r = run_cli("info " + f.string());
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["r"] == 0);
    CHECK(j["sr"] == 0);
    CHECK(j["eta"] == 3);
    CHECK(j["beta"].is_null());
}

TEST_CASE("info reads stdin when the path is a dash") {
    fs::path f = write_file("stdin_input.graph", kEvenC6);
    RunResult r = run_cli("info - < " + f.string());
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["sr"] == 4);
}

TEST_CASE("classify agrees on an evenly oriented six-cycle") {
    fs::path f = write_file("even_c6b.graph", kEvenC6);
    RunResult r = run_cli("classify " + f.string());
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == "classify-v1");
    CHECK(j["conditions"]["cycles_pairwise_vertex_disjoint"] == true);
    CHECK(j["conditions"]["cycles_even_mod4_evenly_oriented"] == true);
    CHECK(j["conditions"]["delta_reduces_to_crucial_subgraph"] == true);
    CHECK(j["structural"] == true);
    CHECK(j["direct"] == true);
    CHECK(j["agreement"] == true);
    CHECK(j["witness"].is_null());
    CHECK(j["trace"]["success"] == true);
}

TEST_CASE("classify rejects an oddly oriented six-cycle with a witness") {
    fs::path f = write_file("odd_c6.graph", kOddC6);
    RunResult r = run_cli("classify " + f.string());
    REQUIRE(r.exit_code == 0);  // agreement holds; verdict is simply negative
    json j = json::parse(r.out);
    CHECK(j["conditions"]["cycles_even_mod4_evenly_oriented"] == false);
    CHECK(j["structural"] == false);
    CHECK(j["direct"] == false);
    CHECK(j["agreement"] == true);
    CHECK(j["witness"].get<std::string>().find("oddly oriented") != std::string::npos);
}

TEST_CASE("reduce strips a path completely") {
    fs::path f = write_file("p4.graph", "4\n0 1\n1 2\n2 3\n");
    RunResult r = run_cli("reduce " + f.string());
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == "reduce-v1");
    REQUIRE(j["steps"].size() == 2);
    CHECK(j["steps"][0]["pendant"] == 0);
    CHECK(j["steps"][0]["neighbor"] == 1);
    CHECK(j["success"] == true);
    CHECK(j["final"] == "0\n");
}

TEST_CASE("compress is the identity on trees") {
    std::string tree = "4\n0 1\n1 2\n1 3\n";
    fs::path f = write_file("tree.graph", tree);
    RunResult r = run_cli("compress " + f.string());
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == "compress-v1");
    CHECK(j["orientation"] == "dropped");
    CHECK(j["t_graph"] == tree);
    CHECK(j["gamma"] == tree);
    CHECK(j["cycles"].empty());
}

TEST_CASE("compress refuses overlapping cycles naming the shared vertex") {
    fs::path f = write_file("bowtie.graph", "5\n0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n");
    RunResult r = run_cli("compress " + f.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("vertex 2") != std::string::npos);
}

TEST_CASE("cycles lists length and orientation class") {
    fs::path f = write_file("odd_c4.graph", "4\n0 1\n1 2\n2 3\n0 3\n");
    RunResult r = run_cli("cycles " + f.string());
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["len"] == 4);
    CHECK(j[0]["class"] == "oddly_oriented");
}

TEST_CASE("cycles rejects graphs whose blocks are not edges or cycles") {
    fs::path f = write_file("k4.graph", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    RunResult r = run_cli("cycles " + f.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("neither an edge nor a cycle") != std::string::npos);
}

TEST_CASE("parse errors exit 2 and name the line") {
    fs::path f = write_file("selfloop.graph", "3\n0 1\n1 1\n");
    RunResult r = run_cli("info " + f.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("self-loop at line 3") != std::string::npos);
    RunResult missing = run_cli("info " + (scratch_dir() / "nope.graph").string());
    CHECK(missing.exit_code == 2);
}

TEST_CASE("flag errors exit 2 with usage text") {
    CHECK(run_cli("verify").exit_code == 2);          // needs a mode
    CHECK(run_cli("frobnicate x").exit_code == 2);    // unknown subcommand
    CHECK(run_cli("info").exit_code == 2);            // missing file
    RunResult r = run_cli("verify --exhaustive --samples 5");
    CHECK(r.exit_code == 2);  // mutually exclusive
    CHECK(run_cli("verify --n 7 --exhaustive --quiet").exit_code == 2);  // guard
    CHECK(run_cli("verify --n 6 --exhaustive --quiet --checks bounds").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("verify --help").exit_code == 0);
}

TEST_CASE("verify runs the exhaustive suite and reports") {
    RunResult r = run_cli("verify --n 3 --exhaustive --quiet");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == "verify-v1");
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["graphs_processed"] == 31);
    CHECK(j["all_passed"] == true);
    CHECK(j["lower_optimal_found"] == 23);
    REQUIRE(j["checks"].size() == 5);
    CHECK(j["checks"][0]["name"] == "bounds");
    CHECK(j["checks"][0]["passed"] == 31);
    CHECK(j["counterexamples"].empty());
}

TEST_CASE("verify honors check subsets and random mode determinism") {
    RunResult a = run_cli("verify --n 6 --samples 300 --seed 9 --checks bounds,lemmas --quiet");
    RunResult b = run_cli("verify --n 6 --samples 300 --seed 9 --checks bounds,lemmas --quiet");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);  // byte-identical
    json j = json::parse(a.out);
    CHECK(j["mode"] == "random");
    CHECK(j["samples"] == 300);
    REQUIRE(j["checks"].size() == 2);
    CHECK(j["checks"][0]["name"] == "bounds");
    CHECK(j["checks"][1]["name"] == "lemmas");
}

TEST_CASE("thread override env var keeps output identical") {
    RunResult a = run_cli("verify --n 5 --samples 200 --seed 3 --quiet");
    std::string env_cmd = "SKEWRANK_THREADS=1 " + std::string(SKEWRANK_CLI_PATH) +
                          " verify --n 5 --samples 200 --seed 3 --quiet";
    fs::path out = scratch_dir() / "env_out";
    std::string cmd = env_cmd + " >" + out.string() + " 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(slurp(out) == a.out);
}
