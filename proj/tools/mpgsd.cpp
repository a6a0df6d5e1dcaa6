#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mpgsd/bench.hpp"
#include "mpgsd/exact_oracle.hpp"
#include "mpgsd/greedy.hpp"
#include "mpgsd/instance_gen.hpp"
#include "mpgsd/io.hpp"
#include "mpgsd/multiheuristic.hpp"
#include "mpgsd/rng.hpp"

namespace fs = std::filesystem;
using namespace mpgsd;

namespace {

struct GenerateArgs {
    GenSpec spec;
    std::string kind = "general";
    std::string growth = "0.95";
    std::string edge_factor = "2";
    std::int32_t count = 1;
    std::string out_dir = ".";
};

int cmd_generate(GenerateArgs& args) {
    args.spec.kind = args.kind == "tree" ? GraphKind::Tree : GraphKind::General;
    args.spec.growth_fraction = parse_fraction(args.growth);
    args.spec.edge_factor = parse_fraction(args.edge_factor);

    fs::create_directories(args.out_dir);
    nlohmann::json manifest;
    manifest["n_supply"] = args.spec.n_supply;
    manifest["n_demand"] = args.spec.n_demand;
    manifest["kind"] = args.kind;
    manifest["demand_lo"] = args.spec.demand_lo;
    manifest["demand_hi"] = args.spec.demand_hi;
    manifest["growth_fraction"] = args.growth;
    manifest["edge_factor"] = args.edge_factor;
    manifest["base_seed"] = args.spec.seed;
    manifest["instances"] = nlohmann::json::array();

    int failures = 0;
    for (std::int32_t index = 0; index < args.count; ++index) {
        GenSpec spec = args.spec;
        spec.seed = mix_seed(args.spec.seed, static_cast<std::uint64_t>(index));
        const std::string name = "inst_" + std::to_string(spec.n_supply) + "x" +
                                 std::to_string(spec.n_demand) + "_" +
                                 std::to_string(index) + ".mpgsd";
        const std::string path = (fs::path(args.out_dir) / name).string();
        try {
            const GeneratedInstance gen = generate(spec);
            write_instance_file(gen.instance, path);
            manifest["instances"].push_back({{"file", name},
                                             {"seed", spec.seed},
                                             {"optimum", *gen.instance.optimum_hint()}});
            std::cout << path << " optimum=" << *gen.instance.optimum_hint() << "\n";
        } catch (const std::exception& e) {
            std::cerr << "error: " << name << ": " << e.what() << "\n";
            ++failures;
        }
    }

    std::ofstream mf(fs::path(args.out_dir) / "manifest.json");
    mf << manifest.dump(2) << "\n";
    return failures == 0 ? 0 : 1;
}

void print_report(const std::string& label, const SolveOutcome& outcome) {
    std::cout << "config=" << label << " covered=" << outcome.covered;
    if (outcome.optimum) {
        std::cout << " optimum=" << *outcome.optimum << " error=";
        if (outcome.error_pct) {
            std::cout << std::fixed << std::setprecision(2) << *outcome.error_pct << "%";
            std::cout.unsetf(std::ios_base::floatfield);
        } else {
            std::cout << "n/a";
        }
    } else {
        std::cout << " optimum=n/a error=n/a";
    }
    std::cout << " time=" << std::fixed << std::setprecision(3) << outcome.seconds
              << "s\n";
    std::cout.unsetf(std::ios_base::floatfield);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MPGSD solver: greedy construction, corrections, multiheuristic"};
    app.require_subcommand(1);

    // generate
    GenerateArgs gen_args;
    auto* gen = app.add_subcommand("generate", "generate instances with a known optimum");
    gen->add_option("--supply", gen_args.spec.n_supply, "number of supply nodes")->required();
    gen->add_option("--demand", gen_args.spec.n_demand, "number of demand nodes")->required();
    gen->add_option("--kind", gen_args.kind, "general|tree")
        ->check(CLI::IsMember({"general", "tree"}));
    gen->add_option("--count", gen_args.count, "number of instances");
    gen->add_option("--seed", gen_args.spec.seed, "base seed");
    gen->add_option("--demand-lo", gen_args.spec.demand_lo, "min demand magnitude");
    gen->add_option("--demand-hi", gen_args.spec.demand_hi, "max demand magnitude");
    gen->add_option("--growth-fraction", gen_args.growth, "claimed-node fraction");
    gen->add_option("--edge-factor", gen_args.edge_factor, "edges per node (general)");
    gen->add_option("--out", gen_args.out_dir, "output directory")->required();

    // solve
    std::string solve_path, solve_out;
    int hs = 1, hn = 1;
    std::string correct = "none";
    bool multi = false;
    CorrectionLimits limits;
    auto* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("instance", solve_path, "instance file")->required();
    solve->add_option("--hs", hs, "subgraph heuristic")->check(CLI::Range(1, 3));
    solve->add_option("--hn", hn, "node heuristic")->check(CLI::Range(1, 4));
    solve->add_option("--correct", correct, "correction mode")
        ->check(CLI::IsMember({"none", "nl", "combined"}));
    solve->add_flag("--multi", multi, "race all 12 heuristic combinations");
    solve->add_option("--cycle-max", limits.max_cycle_length, "cycle detection window");
    solve->add_option("--stagnation", limits.stagnation_window, "stagnation window");
    solve->add_option("-o,--out", solve_out, "solution file (default: instance with .sol)");

    // bench
    std::string bench_dir, bench_csv;
    std::vector<std::string> bench_configs;
    auto* bench = app.add_subcommand("bench", "benchmark a directory of instances");
    bench->add_option("dir", bench_dir, "directory of .mpgsd files")->required();
    bench->add_option("--config", bench_configs,
                      "pipeline: gr|nl|com-<hs>-<hn> or multi (repeatable)");
    bench->add_option("--csv", bench_csv, "write CSV to this file");
    bench->add_option("--cycle-max", limits.max_cycle_length, "cycle detection window");
    bench->add_option("--stagnation", limits.stagnation_window, "stagnation window");

    // oracle
    std::string oracle_path, oracle_out;
    int oracle_cap = 18;
    auto* oracle = app.add_subcommand("oracle", "exact optimum for a small instance");
    oracle->add_option("instance", oracle_path, "instance file")->required();
    oracle->add_option("--cap", oracle_cap, "max node count");
    oracle->add_option("-o,--out", oracle_out, "witness solution file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            return cmd_generate(gen_args);
        }
        if (solve->parsed()) {
            const Instance instance = read_instance_file(solve_path);
            RunConfig config;
            config.multi = multi;
            config.heuristics = {static_cast<SubgraphRule>(hs), static_cast<NodeRule>(hn)};
            config.correction = parse_correction_mode(correct);
            const SolveOutcome outcome = solve_instance(instance, config, limits);
            const std::string out_path =
                solve_out.empty()
                    ? fs::path(solve_path).replace_extension(".sol").string()
                    : solve_out;
            write_solution_file(outcome.partition, out_path);
            print_report(config.label(), outcome);
            std::cout << "solution=" << out_path << "\n";
            return 0;
        }
        if (bench->parsed()) {
            std::vector<RunConfig> configs;
            if (bench_configs.empty()) {
                bench_configs = {"gr-2-1", "nl-2-1", "com-2-1", "multi"};
            }
            for (const auto& label : bench_configs) {
                configs.push_back(RunConfig::parse(label));
            }
            const auto files = list_instance_files(bench_dir);
            if (files.empty()) {
                std::cerr << "error: no .mpgsd files in " << bench_dir << "\n";
                return 1;
            }
            const BenchReport report = bench_files(files, configs, limits);
            write_table(report, std::cout);
            if (!bench_csv.empty()) {
                std::ofstream csv(bench_csv);
                if (!csv) {
                    std::cerr << "error: cannot write " << bench_csv << "\n";
                    return 1;
                }
                write_csv(report, csv);
            }
            return 0;
        }
        if (oracle->parsed()) {
            const Instance instance = read_instance_file(oracle_path);
            const OracleResult result =
                solve_exact(instance, static_cast<NodeId>(oracle_cap));
            std::cout << "optimum=" << result.optimum << " explored=" << result.explored
                      << "\n";
            if (!oracle_out.empty()) {
                write_solution_file(result.witness, oracle_out);
                std::cout << "witness=" << oracle_out << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
