#include "mpgsd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>

#include "mpgsd/greedy.hpp"
#include "mpgsd/io.hpp"
#include "mpgsd/multiheuristic.hpp"

namespace mpgsd {

CorrectionMode parse_correction_mode(const std::string& text) {
    if (text == "none") return CorrectionMode::None;
    if (text == "nl") return CorrectionMode::NonLocated;
    if (text == "combined") return CorrectionMode::Combined;
    throw std::invalid_argument("unknown correction mode '" + text + "'");
}

std::string to_string(CorrectionMode mode) {
    switch (mode) {
        case CorrectionMode::None: return "none";
        case CorrectionMode::NonLocated: return "nl";
        case CorrectionMode::Combined: return "combined";
    }
    return "?";
}

std::string RunConfig::label() const {
    if (multi) return "multi";
    std::string prefix;
    switch (correction) {
        case CorrectionMode::None: prefix = "gr"; break;
        case CorrectionMode::NonLocated: prefix = "nl"; break;
        case CorrectionMode::Combined: prefix = "com"; break;
    }
    return prefix + "-" + std::to_string(static_cast<int>(heuristics.subgraph_rule)) +
           "-" + std::to_string(static_cast<int>(heuristics.node_rule));
}

RunConfig RunConfig::parse(const std::string& label) {
    if (label == "multi") return {true, {}, CorrectionMode::Combined};
    const auto bad = [&] {
        return std::invalid_argument("cannot parse config '" + label +
                                     "'; expected gr|nl|com-<hs>-<hn> or multi");
    };
    const auto first = label.find('-');
    const auto second = label.find('-', first + 1);
    if (first == std::string::npos || second == std::string::npos) throw bad();
    RunConfig config;
    const auto prefix = label.substr(0, first);
    if (prefix == "gr") {
        config.correction = CorrectionMode::None;
    } else if (prefix == "nl") {
        config.correction = CorrectionMode::NonLocated;
    } else if (prefix == "com") {
        config.correction = CorrectionMode::Combined;
    } else {
        throw bad();
    }
    const auto hs = label.substr(first + 1, second - first - 1);
    const auto hn = label.substr(second + 1);
    if (hs.size() != 1 || hs[0] < '1' || hs[0] > '3') throw bad();
    if (hn.size() != 1 || hn[0] < '1' || hn[0] > '4') throw bad();
    config.heuristics.subgraph_rule = static_cast<SubgraphRule>(hs[0] - '0');
    config.heuristics.node_rule = static_cast<NodeRule>(hn[0] - '0');
    return config;
}

SolveOutcome solve_instance(const Instance& instance, const RunConfig& config,
                            const CorrectionLimits& limits) {
    SolveOutcome out;
    const auto start = std::chrono::steady_clock::now();
    if (config.multi) {
        MultiResult multi = run_multi(instance, limits);
        out.partition = std::move(multi.best);
        out.covered = multi.best_covered;
    } else {
        GreedyResult greedy = run_greedy(instance, config.heuristics);
        if (config.correction == CorrectionMode::NonLocated) {
            run_non_located(greedy.state, limits);
        } else if (config.correction == CorrectionMode::Combined) {
            run_combined(greedy.state, limits);
        }
        out.partition = greedy.state.partition();
        out.covered = greedy.state.covered_demand();
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    out.seconds = elapsed.count();

    if (const auto verdict = check_feasible(instance, out.partition); !verdict) {
        throw std::logic_error("solver produced an infeasible partition: " +
                               verdict.violation);
    }
    out.optimum = instance.optimum_hint();
    if (out.optimum && *out.optimum > 0) {
        out.error_pct = normalized_error(*out.optimum, out.covered);
    }
    return out;
}

double mean(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double population_stdev(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    const double m = mean(xs);
    double sq = 0.0;
    for (double x : xs) sq += (x - m) * (x - m);
    return std::sqrt(sq / static_cast<double>(xs.size()));
}

std::vector<std::string> list_instance_files(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".mpgsd") {
            paths.push_back(entry.path().string());
        }
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

BenchReport bench_files(const std::vector<std::string>& instance_paths,
                        const std::vector<RunConfig>& configs,
                        const CorrectionLimits& limits) {
    struct Group {
        std::vector<double> errors;
        double total_time = 0.0;
    };
    BenchReport report;
    std::vector<std::pair<std::string, std::string>> group_order;  // (size, kind)
    std::map<std::pair<std::string, std::string>, std::map<std::string, Group>> groups;

    std::string first_size;
    for (const auto& path : instance_paths) {
        const Instance instance = read_instance_file(path);
        const std::string size_label = std::to_string(instance.num_supply()) + "x" +
                                       std::to_string(instance.num_demand());
        const std::string kind = to_string(instance.kind());
        if (first_size.empty()) {
            first_size = size_label;
        } else if (size_label != first_size) {
            const std::string warning = "mixed sizes: " + path + " is " + size_label +
                                        ", first instance was " + first_size;
            if (std::find(report.warnings.begin(), report.warnings.end(), warning) ==
                report.warnings.end()) {
                report.warnings.push_back(warning);
            }
        }
        if (!instance.optimum_hint()) {
            report.warnings.push_back("skipping " + path + ": no optimum line");
            continue;
        }
        const auto key = std::make_pair(size_label, kind);
        if (!groups.count(key)) group_order.push_back(key);
        for (const auto& config : configs) {
            const SolveOutcome outcome = solve_instance(instance, config, limits);
            auto& group = groups[key][config.label()];
            group.errors.push_back(outcome.error_pct.value_or(0.0));
            group.total_time += outcome.seconds;
        }
    }

    for (const auto& key : group_order) {
        for (const auto& config : configs) {
            const auto& group = groups[key][config.label()];
            if (group.errors.empty()) continue;
            BenchRow row;
            row.size_label = key.first;
            row.kind = key.second;
            row.config = config.label();
            row.avg_err = mean(group.errors);
            row.max_err = *std::max_element(group.errors.begin(), group.errors.end());
            row.stdev = population_stdev(group.errors);
            row.total_time_s = group.total_time;
            row.instances = static_cast<std::int64_t>(group.errors.size());
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

void write_csv(const BenchReport& report, std::ostream& out) {
    out << "# stdev estimator: population (divide by N)\n";
    out << "size,kind,config,avg_err,max_err,stdev,total_time_s\n";
    for (const auto& row : report.rows) {
        out << row.size_label << "," << row.kind << "," << row.config << ","
            << std::fixed << std::setprecision(4) << row.avg_err << "," << row.max_err
            << "," << row.stdev << "," << std::setprecision(3) << row.total_time_s
            << "\n";
        out.unsetf(std::ios_base::floatfield);
    }
}

void write_table(const BenchReport& report, std::ostream& out) {
    for (const auto& warning : report.warnings) {
        out << "warning: " << warning << "\n";
    }
    out << std::left << std::setw(12) << "size" << std::setw(9) << "kind"
        << std::setw(10) << "config" << std::right << std::setw(9) << "avg"
        << std::setw(9) << "max" << std::setw(9) << "stdev" << std::setw(11)
        << "time[s]" << std::setw(7) << "inst" << "\n";
    for (const auto& row : report.rows) {
        out << std::left << std::setw(12) << row.size_label << std::setw(9) << row.kind
            << std::setw(10) << row.config << std::right << std::fixed
            << std::setprecision(2) << std::setw(9) << row.avg_err << std::setw(9)
            << row.max_err << std::setw(9) << row.stdev << std::setprecision(3)
            << std::setw(11) << row.total_time_s << std::setw(7) << row.instances
            << "\n";
        out.unsetf(std::ios_base::floatfield);
    }
}

}  // namespace mpgsd
