#ifndef MPGSD_MULTIHEURISTIC_HPP
#define MPGSD_MULTIHEURISTIC_HPP

#include "mpgsd/corrections.hpp"
#include "mpgsd/greedy.hpp"

namespace mpgsd {

struct ComboResult {
    HeuristicConfig config;
    Weight covered = 0;
    double seconds = 0.0;
};

struct MultiResult {
    Partition best;
    Weight best_covered = 0;
    HeuristicConfig best_config;
    std::vector<ComboResult> per_combo;  // canonical enumeration order
};

/// Races all 12 heuristic combinations, each run_greedy + run_combined,
/// and keeps the partition with maximal covered demand (ties: first in
/// enumeration order). Runs combos on worker threads when parallel is set;
/// the result is identical either way.
MultiResult run_multi(const Instance& instance, const CorrectionLimits& limits,
                      bool parallel = true);

}  // namespace mpgsd

#endif
