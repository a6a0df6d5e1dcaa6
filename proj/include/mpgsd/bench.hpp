#ifndef MPGSD_BENCH_HPP
#define MPGSD_BENCH_HPP

#include <iosfwd>
#include <optional>

#include "mpgsd/corrections.hpp"
#include "mpgsd/heuristics.hpp"

namespace mpgsd {

enum class CorrectionMode { None, NonLocated, Combined };

CorrectionMode parse_correction_mode(const std::string& text);
std::string to_string(CorrectionMode mode);

/// One solve pipeline: a greedy heuristic pair plus a correction mode, or
/// the 12-combo multiheuristic. Labels: "gr-2-1", "nl-2-1", "com-2-1",
/// "multi".
struct RunConfig {
    bool multi = false;
    HeuristicConfig heuristics;
    CorrectionMode correction = CorrectionMode::None;

    std::string label() const;
    static RunConfig parse(const std::string& label);
};

struct SolveOutcome {
    Partition partition;
    Weight covered = 0;
    std::optional<Weight> optimum;      // from the instance, when present
    std::optional<double> error_pct;
    double seconds = 0.0;
};

/// Runs one pipeline on one instance; checks feasibility of the produced
/// partition and throws logic_error if it is violated (a solver bug, never
/// an input condition).
SolveOutcome solve_instance(const Instance& instance, const RunConfig& config,
                            const CorrectionLimits& limits);

struct BenchRow {
    std::string size_label;  // "<n_supply>x<n_demand>"
    std::string kind;
    std::string config;
    double avg_err = 0.0;
    double max_err = 0.0;
    double stdev = 0.0;      // population standard deviation
    double total_time_s = 0.0;
    std::int64_t instances = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<std::string> warnings;
};

/// Solves every instance file (sorted by path) under each config and
/// aggregates normalized errors per (size, kind, config) group, preserving
/// first-seen group order.
BenchReport bench_files(const std::vector<std::string>& instance_paths,
                        const std::vector<RunConfig>& configs,
                        const CorrectionLimits& limits);

/// All *.mpgsd files directly inside dir, sorted.
std::vector<std::string> list_instance_files(const std::string& dir);

void write_csv(const BenchReport& report, std::ostream& out);
void write_table(const BenchReport& report, std::ostream& out);

double mean(const std::vector<double>& xs);
double population_stdev(const std::vector<double>& xs);

}  // namespace mpgsd

#endif
