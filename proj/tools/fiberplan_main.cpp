// fiberplan: GPON/FTTH access-network design from street-route maps.
//
// Subcommands:
//   design    evolve PDO placements + client links for a map, export artifacts
//   validate  cost and feasibility of an existing solution document
//   bench     synthetic instance suite, GA vs greedy vs (tiny-only) exact oracle

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fiberplan/bench.hpp"
#include "fiberplan/bom.hpp"
#include "fiberplan/io.hpp"
#include "fiberplan/validator.hpp"

namespace fs = std::filesystem;
using namespace fiberplan;

namespace {

io::RulesDoc resolve_rules(const std::string& rules_path) {
    if (!rules_path.empty()) {
        return io::load_rules_file(rules_path);
    }
    if (const char* env = std::getenv("FIBERPLAN_RULES"); env != nullptr && *env != '\0') {
        return io::load_rules_file(env);
    }
    return {};
}

struct Prepared {
    NetworkMap map;
    std::size_t removed = 0;
};

Prepared prepare_map(const std::string& map_path) {
    NetworkMap loaded = io::load_map_file(map_path);
    PreprocessResult pre = preprocess(loaded);
    return {std::move(pre.map), pre.removed_candidates.size()};
}

void print_map_line(const NetworkMap& map, std::size_t removed) {
    std::cout << "map: " << map.nodes().size() << " nodes (" << map.candidates().size()
              << " candidates, " << map.clients().size() << " clients), " << map.edges().size()
              << " edges, demand " << map.total_demand() << " fibres";
    if (removed > 0) {
        std::cout << ", " << removed << " unreachable candidates filtered";
    }
    std::cout << "\n";
}

void print_breakdown(const CostBreakdown& cost) {
    std::cout << "  pdos: " << cost.n_pdo << "\n"
              << "  drop cable: " << cost.drop_m / 1000.0 << " km (weighted "
              << cost.drop_weighted_m / 1000.0 << " km)\n"
              << "  distribution cable: " << cost.dist_m / 1000.0 << " km (weighted "
              << cost.dist_weighted_m / 1000.0 << " km)\n"
              << "  material cost: " << cost.c_mat << "\n"
              << "  missing clients: " << cost.h_missing << "\n"
              << "  fitness: " << cost.fitness << "\n";
}

int cmd_design(const std::string& map_path, const std::string& rules_path,
               const std::string& out_dir, std::optional<std::uint64_t> seed, int runs,
               std::optional<int> generations, std::optional<int> population,
               bool allow_infeasible, std::vector<std::string> formats) {
    io::RulesDoc doc = resolve_rules(rules_path);
    if (seed) {
        doc.ga.rng_seed = *seed;
    }
    if (generations) {
        doc.ga.generations = *generations;
    }
    if (population) {
        doc.ga.population_size = *population;
    }

    Prepared prep = prepare_map(map_path);
    print_map_line(prep.map, prep.removed);

    PathCache paths;
    const DropTable drops = build_drop_table(prep.map, doc.rules);
    const EvalContext ctx{prep.map, doc.rules, paths, drops};

    StatsReport stats = run_stats(ctx, doc.ga, runs);
    const Individual& best = stats.best_individual;

    FeasibilityReport report = validate(best.genotype, prep.map, doc.rules, paths);
    const EquipmentBill bill = build_bill(best.genotype, prep.map, doc.rules, paths);
    const std::vector<PortOccupancy> occupancy =
        port_occupancy(best.genotype, prep.map, doc.rules);

    fs::create_directories(out_dir);
    const fs::path out(out_dir);
    io::write_file((out / "solution.json").string(),
                   io::solution_to_json(genotype_to_solution(best.genotype, prep.map)));
    io::write_file((out / "report.json").string(),
                   io::report_to_json(best.cost, report, bill, occupancy));

    auto wants = [&formats](const char* f) {
        return formats.empty() || std::find(formats.begin(), formats.end(), f) != formats.end();
    };
    if (wants("csv")) {
        io::write_file((out / "metrics.csv").string(), io::metrics_csv(stats));
        io::write_file((out / "trace.csv").string(), io::trace_csv(stats));
    }
    if (wants("geojson")) {
        io::write_file((out / "solution.geojson").string(),
                       io::geojson_export(prep.map, best.genotype, paths));
    }
    if (wants("svg")) {
        io::write_file((out / "solution.svg").string(),
                       io::svg_export(prep.map, best.genotype, paths));
    }

    std::cout << "best of " << runs << " run(s):\n";
    print_breakdown(best.cost);
    std::cout << "  feasible: " << (report.feasible ? "yes" : "no") << "\n"
              << "artifacts written to " << out_dir << "\n";

    if (!report.feasible && !allow_infeasible) {
        std::cerr << "best solution is infeasible (" << report.violations.size()
                  << " findings); rerun with --allow-infeasible to export anyway\n";
        return 1;
    }
    return 0;
}

int cmd_validate(const std::string& map_path, const std::string& rules_path,
                 const std::string& solution_path) {
    const io::RulesDoc doc = resolve_rules(rules_path);
    Prepared prep = prepare_map(map_path);
    print_map_line(prep.map, prep.removed);

    const DesignSolution solution = io::load_solution_file(solution_path);
    Genotype genotype = solution_to_genotype(solution, prep.map);

    PathCache paths;
    const DropTable drops = build_drop_table(prep.map, doc.rules);
    const EvalContext ctx{prep.map, doc.rules, paths, drops};

    const Individual evaluated = evaluate(std::move(genotype), ctx);
    std::cout << "solution: " << solution.pdos.size() << " pdos, " << solution.assignments.size()
              << " client links\n";
    print_breakdown(evaluated.cost);

    const FeasibilityReport report = validate(evaluated.genotype, prep.map, doc.rules, paths);
    std::cout << "feasible: " << (report.feasible ? "yes" : "no") << "\n";
    for (const Violation& v : report.violations) {
        std::cout << "  [" << to_string(v.kind) << "] " << v.detail << "\n";
    }
    return report.feasible ? 0 : 1;
}

SynthSpec parse_instance(const nlohmann::json& ji, const std::string& where) {
    SynthSpec spec;
    auto get_int = [&](const char* key, int fallback, bool required) {
        if (!ji.contains(key)) {
            if (required) {
                throw ConfigError(where + ": missing " + key);
            }
            return fallback;
        }
        if (!ji[key].is_number_integer()) {
            throw ConfigError(where + "." + key + ": expected an integer");
        }
        return ji[key].get<int>();
    };
    spec.n_candidates = get_int("n_candidates", 0, true);
    spec.n_sdu = get_int("n_sdu", 0, true);
    spec.n_mdu = get_int("n_mdu", 0, false);
    spec.seed = static_cast<std::uint64_t>(get_int("seed", 1, false));
    spec.mdu_demand_min = get_int("mdu_demand_min", spec.mdu_demand_min, false);
    spec.mdu_demand_max = get_int("mdu_demand_max", spec.mdu_demand_max, false);
    if (ji.contains("area_m2")) {
        spec.area_m2 = ji["area_m2"].get<double>();
    }
    if (ji.contains("topology")) {
        const std::string topo = ji["topology"].get<std::string>();
        if (topo == "tree") {
            spec.topology = SynthSpec::Topology::Tree;
        } else if (topo == "grid") {
            spec.topology = SynthSpec::Topology::Grid;
        } else {
            throw ConfigError(where + ".topology: unknown value '" + topo + "'");
        }
    }
    return spec;
}

int cmd_bench(const std::string& spec_path, const std::string& rules_path,
              const std::string& out_dir) {
    const io::RulesDoc doc = resolve_rules(rules_path);
    const nlohmann::json spec = nlohmann::json::parse(io::read_file(spec_path), nullptr, false);
    if (spec.is_discarded() || !spec.is_object() || !spec.contains("instances") ||
        !spec["instances"].is_array() || spec["instances"].empty()) {
        throw ConfigError("bench spec: expected an object with a non-empty `instances` array");
    }
    const int runs = spec.contains("runs") ? spec["runs"].get<int>() : 10;

    fs::create_directories(out_dir);
    const fs::path out(out_dir);
    std::ostringstream comparison;
    comparison << "instance,seed,candidates,clients,ga_best,ga_mean,greedy,oracle\n";
    std::ostringstream summary;
    summary << "instance,metric,best,worst,median,mean,stddev\n";

    std::size_t index = 0;
    for (const nlohmann::json& ji : spec["instances"]) {
        const std::string where = "instances[" + std::to_string(index++) + "]";
        const std::string name =
            ji.contains("name") ? ji["name"].get<std::string>() : "instance" + std::to_string(index);
        const SynthSpec synth = parse_instance(ji, where);

        NetworkMap generated = synth_instance(synth);
        io::write_file((out / (name + ".map.json")).string(), io::map_to_json(generated));
        PreprocessResult pre = preprocess(generated);

        PathCache paths;
        const DropTable drops = build_drop_table(pre.map, doc.rules);
        const EvalContext ctx{pre.map, doc.rules, paths, drops};

        GAConfig ga = doc.ga;
        ga.rng_seed = synth.seed;
        StatsReport stats = run_stats(ctx, ga, runs);
        const Individual greedy = greedy_baseline(ctx);

        std::string oracle = "";
        if (pre.map.candidates().size() <= 12 && pre.map.clients().size() <= 10) {
            std::ostringstream o;
            o << brute_force_oracle(ctx);
            oracle = o.str();
        }

        comparison << name << "," << synth.seed << "," << pre.map.candidates().size() << ","
                   << pre.map.clients().size() << "," << stats.fitness.best << ","
                   << stats.fitness.mean << "," << greedy.fitness << "," << oracle << "\n";

        auto emit = [&](const char* metric, const MetricSummary& s) {
            summary << name << "," << metric << "," << s.best << "," << s.worst << "," << s.median
                    << "," << s.mean << "," << s.stddev << "\n";
        };
        emit("fitness", stats.fitness);
        emit("n_pdo", stats.n_pdo);
        emit("drop_km", stats.drop_km);
        emit("dist_km", stats.dist_km);
        io::write_file((out / (name + ".trace.csv")).string(), io::trace_csv(stats));

        std::cout << name << ": ga best " << stats.fitness.best << ", greedy " << greedy.fitness;
        if (!oracle.empty()) {
            std::cout << ", oracle " << oracle;
        }
        std::cout << "\n";
    }

    io::write_file((out / "comparison.csv").string(), comparison.str());
    io::write_file((out / "summary.csv").string(), summary.str());
    std::cout << "benchmark artifacts written to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fiberplan: automatic GPON/FTTH access network design"};
    app.require_subcommand(1);

    std::string map_path, rules_path, solution_path, spec_path, out_dir = "out";
    std::optional<std::uint64_t> seed;
    std::optional<int> generations, population;
    int runs = 1;
    bool allow_infeasible = false;
    std::vector<std::string> formats;

    CLI::App* design = app.add_subcommand("design", "evolve a design for a map");
    design->add_option("--map", map_path, "map document (json)")->required();
    design->add_option("--rules", rules_path, "rules document (defaults: $FIBERPLAN_RULES)");
    design->add_option("--out", out_dir, "output directory");
    design->add_option("--seed", seed, "base rng seed");
    design->add_option("--runs", runs, "independent evolutionary runs")
        ->check(CLI::PositiveNumber);
    design->add_option("--generations", generations, "override generation count");
    design->add_option("--population", population, "override population size");
    design->add_flag("--allow-infeasible", allow_infeasible,
                     "exit 0 even if the best design is infeasible");
    design->add_option("--format", formats, "artifact formats to write")
        ->check(CLI::IsMember({"geojson", "svg", "csv"}));

    CLI::App* validate = app.add_subcommand("validate", "check an existing solution");
    validate->add_option("--map", map_path, "map document (json)")->required();
    validate->add_option("--rules", rules_path, "rules document");
    validate->add_option("--solution", solution_path, "solution document (json)")->required();

    CLI::App* bench = app.add_subcommand("bench", "synthetic benchmark suite");
    bench->add_option("--spec", spec_path, "benchmark spec (json)")->required();
    bench->add_option("--rules", rules_path, "rules document");
    bench->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (design->parsed()) {
            return cmd_design(map_path, rules_path, out_dir, seed, runs, generations, population,
                              allow_infeasible, formats);
        }
        if (validate->parsed()) {
            return cmd_validate(map_path, rules_path, solution_path);
        }
        return cmd_bench(spec_path, rules_path, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
