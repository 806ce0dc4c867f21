// Drives the installed binary end to end. The path to the built executable
// comes in through FIBERPLAN_CLI_PATH.

#include <doctest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fiberplan/bench.hpp"
#include "fiberplan/io.hpp"

using namespace fiberplan;
namespace fs = std::filesystem;

namespace {

struct RunOutcome {
    int exit_code;
    std::string stdout_text;
};

RunOutcome run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "fiberplan_cli_stdout.txt";
    const std::string cmd =
        std::string(FIBERPLAN_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(out);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {WEXITSTATUS(raw), buf.str()};
}

fs::path sandbox() {
    const fs::path dir = fs::temp_directory_path() / "fiberplan_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string write_tiny_map(std::uint64_t seed) {
    const fs::path path = sandbox() / ("map_" + std::to_string(seed) + ".json");
    io::write_file(path.string(), io::map_to_json(synth_instance(tiny_spec(seed))));
    return path.string();
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("design writes every artifact and validate accepts the export") {
    const std::string map = write_tiny_map(51);
    const fs::path out = sandbox() / "design51";
    const RunOutcome design = run_cli("design --map " + map + " --out " + out.string() +
                                      " --seed 5 --runs 2 --allow-infeasible");
    CHECK(design.exit_code == 0);
    for (const char* artifact : {"solution.json", "report.json", "metrics.csv", "trace.csv",
                                 "solution.geojson", "solution.svg"}) {
        CHECK_MESSAGE(fs::exists(out / artifact), artifact);
    }

    const RunOutcome validate = run_cli("validate --map " + map + " --solution " +
                                        (out / "solution.json").string());
    CHECK((validate.exit_code == 0 || validate.exit_code == 1));

    // The exported report and the validate run agree on the fitness.
    const nlohmann::json report = nlohmann::json::parse(slurp(out / "report.json"));
    const double fitness = report["cost"]["fitness"].get<double>();
    std::ostringstream needle;
    needle << "fitness: " << fitness;
    CHECK(validate.stdout_text.find(needle.str()) != std::string::npos);
}

TEST_CASE("a reference-scale design completes quickly with all artifacts") {
    const fs::path map_path = sandbox() / "map1_scale.json";
    io::write_file(map_path.string(), io::map_to_json(synth_instance(map1_scale_spec(61))));
    const fs::path out = sandbox() / "design_map1";
    const auto start = std::chrono::steady_clock::now();
    const RunOutcome outcome = run_cli("design --map " + map_path.string() + " --out " +
                                       out.string() + " --seed 61 --allow-infeasible");
    const double elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start).count();
    CHECK(outcome.exit_code == 0);
    CHECK(elapsed <= 60.0);
    for (const char* artifact : {"solution.json", "report.json", "metrics.csv", "trace.csv",
                                 "solution.geojson", "solution.svg"}) {
        CHECK_MESSAGE(fs::exists(out / artifact), artifact);
    }
    const std::string trace = slurp(out / "trace.csv");
    CHECK(std::count(trace.begin(), trace.end(), '\n') == 102);  // header + gens 0..100
}

TEST_CASE("fixed seed designs are byte-identical") {
    const std::string map = write_tiny_map(52);
    const fs::path out_a = sandbox() / "rep_a";
    const fs::path out_b = sandbox() / "rep_b";
    const std::string flags = " --seed 11 --runs 2 --allow-infeasible --format csv";
    CHECK(run_cli("design --map " + map + " --out " + out_a.string() + flags).exit_code == 0);
    CHECK(run_cli("design --map " + map + " --out " + out_b.string() + flags).exit_code == 0);
    CHECK(slurp(out_a / "metrics.csv") == slurp(out_b / "metrics.csv"));
    CHECK(slurp(out_a / "trace.csv") == slurp(out_b / "trace.csv"));
    CHECK(slurp(out_a / "solution.json") == slurp(out_b / "solution.json"));
}

TEST_CASE("generations zero exports the best of the initial population") {
    const std::string map = write_tiny_map(53);
    const fs::path out = sandbox() / "gen0";
    const RunOutcome outcome = run_cli("design --map " + map + " --out " + out.string() +
                                       " --seed 3 --generations 0 --allow-infeasible");
    CHECK(outcome.exit_code == 0);
    const std::string trace = slurp(out / "trace.csv");
    CHECK(std::count(trace.begin(), trace.end(), '\n') == 2);  // header + generation 0
}

TEST_CASE("usage and file errors exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("design").exit_code == 2);  // --map missing
    CHECK(run_cli("design --map /nonexistent.json --out /tmp/x").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);

    const std::string map = write_tiny_map(54);
    const fs::path bad_solution = sandbox() / "bad_solution.json";
    io::write_file(bad_solution.string(), R"({"pdos": [99999], "assignments": []})");
    CHECK(run_cli("validate --map " + map + " --solution " + bad_solution.string()).exit_code ==
          2);
}

TEST_CASE("validate flags an over-capacity external solution as infeasible") {
    // A hand-written solution that crams 12 houses onto one pdo.
    std::ostringstream map_json;
    map_json << R"({"nodes":[{"id":0,"x_m":0,"y_m":0,"kind":"olt","demand":0},)";
    map_json << R"({"id":1,"x_m":5,"y_m":0,"kind":"candidate","demand":0})";
    for (int i = 0; i < 12; ++i) {
        map_json << R"(,{"id":)" << 2 + i << R"(,"x_m":5,"y_m":)" << 10 + i
                 << R"(,"kind":"sdu","demand":1})";
    }
    map_json << R"(],"edges":[{"a":0,"b":1,"length_m":5,"route":"aerial"}]})";
    const fs::path map_path = sandbox() / "overcap_map.json";
    io::write_file(map_path.string(), map_json.str());

    nlohmann::json solution;
    solution["pdos"] = {1};
    solution["assignments"] = nlohmann::json::array();
    for (int i = 0; i < 12; ++i) {
        solution["assignments"].push_back({{"client", 2 + i}, {"pdo", 1}});
    }
    const fs::path sol_path = sandbox() / "overcap_solution.json";
    io::write_file(sol_path.string(), solution.dump());

    const RunOutcome outcome =
        run_cli("validate --map " + map_path.string() + " --solution " + sol_path.string());
    CHECK(outcome.exit_code == 1);
    CHECK(outcome.stdout_text.find("capacity") != std::string::npos);
}

TEST_CASE("empty clientless solution validates clean") {
    const std::string map_json = R"({"nodes":[
      {"id":0,"x_m":0,"y_m":0,"kind":"olt","demand":0},
      {"id":1,"x_m":10,"y_m":0,"kind":"candidate","demand":0}],
      "edges":[{"a":0,"b":1,"length_m":10,"route":"aerial"}]})";
    const fs::path map_path = sandbox() / "clientless.json";
    io::write_file(map_path.string(), map_json);
    const fs::path sol_path = sandbox() / "empty_solution.json";
    io::write_file(sol_path.string(), R"({"pdos": [], "assignments": []})");
    const RunOutcome outcome =
        run_cli("validate --map " + map_path.string() + " --solution " + sol_path.string());
    CHECK(outcome.exit_code == 0);
    CHECK(outcome.stdout_text.find("fitness: 0") != std::string::npos);
}

TEST_CASE("bench requires a non-empty instance list") {
    const fs::path empty_spec = sandbox() / "empty_spec.json";
    io::write_file(empty_spec.string(), R"({"instances": []})");
    CHECK(run_cli("bench --spec " + empty_spec.string() + " --out " +
                  (sandbox() / "bench_empty").string())
              .exit_code == 2);
}

TEST_CASE("bench produces comparison artifacts with an oracle column") {
    nlohmann::json spec;
    spec["runs"] = 2;
    spec["instances"] = nlohmann::json::array();
    spec["instances"].push_back({{"name", "t1"},
                                 {"n_candidates", 8},
                                 {"n_sdu", 7},
                                 {"n_mdu", 0},
                                 {"area_m2", 8000.0},
                                 {"topology", "tree"},
                                 {"seed", 21}});
    const fs::path spec_path = sandbox() / "bench_spec.json";
    io::write_file(spec_path.string(), spec.dump());
    const fs::path out = sandbox() / "bench_out";
    const RunOutcome outcome =
        run_cli("bench --spec " + spec_path.string() + " --out " + out.string());
    CHECK(outcome.exit_code == 0);
    CHECK(fs::exists(out / "comparison.csv"));
    CHECK(fs::exists(out / "summary.csv"));
    CHECK(fs::exists(out / "t1.map.json"));
    CHECK(fs::exists(out / "t1.trace.csv"));
    const std::string comparison = slurp(out / "comparison.csv");
    CHECK(comparison.find("t1,21,8,7,") != std::string::npos);
    CHECK(outcome.stdout_text.find("oracle") != std::string::npos);
}

TEST_CASE("rules file and environment default are honoured") {
    const std::string map = write_tiny_map(55);
    const fs::path rules_path = sandbox() / "strict.rules";
    io::write_file(rules_path.string(), "penalty_per_missing = 9000\n[ga]\ngenerations = 5\n");

    const fs::path out = sandbox() / "ruled";
    const RunOutcome with_flag = run_cli("design --map " + map + " --rules " +
                                         rules_path.string() + " --out " + out.string() +
                                         " --seed 2 --allow-infeasible");
    CHECK(with_flag.exit_code == 0);
    const std::string trace = slurp(out / "trace.csv");
    CHECK(std::count(trace.begin(), trace.end(), '\n') == 7);  // header + gens 0..5

    // Same rules through the environment variable.
    const fs::path out_env = sandbox() / "ruled_env";
    const std::string cmd = "FIBERPLAN_RULES=" + rules_path.string() + " " +
                            std::string(FIBERPLAN_CLI_PATH) + " design --map " + map + " --out " +
                            out_env.string() + " --seed 2 --allow-infeasible > /dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK(slurp(out_env / "trace.csv") == trace);
}
