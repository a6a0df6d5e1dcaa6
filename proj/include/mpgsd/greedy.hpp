#ifndef MPGSD_GREEDY_HPP
#define MPGSD_GREEDY_HPP

#include "mpgsd/heuristics.hpp"
#include "mpgsd/solver_state.hpp"

namespace mpgsd {

enum class StopReason { SupplyExhausted, NoNeighbors };

struct GreedyResult {
    SolverState state;
    std::int64_t iterations = 0;
    StopReason stop_reason = StopReason::NoNeighbors;
    /// (subgraph, node) in the order they were located.
    std::vector<std::pair<std::int32_t, NodeId>> trace;

    const Partition& partition() const { return state.partition(); }
    Weight covered() const { return state.covered_demand(); }
};

/// Two-stage constructive loop: pick a subgraph by the subgraph rule, a
/// node from its neighbor set by the node rule, locate it, repeat while
/// some supply is uncovered and some neighbor set is nonempty.
/// validate_each_iteration additionally runs check_feasible after every
/// location (tests only; quadratic).
GreedyResult run_greedy(const Instance& instance, const HeuristicConfig& config,
                        bool validate_each_iteration = false);

}  // namespace mpgsd

#endif
