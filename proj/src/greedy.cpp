#include "mpgsd/greedy.hpp"

namespace mpgsd {

GreedyResult run_greedy(const Instance& instance, const HeuristicConfig& config,
                        bool validate_each_iteration) {
    GreedyResult result{SolverState(instance), 0, StopReason::NoNeighbors, {}};
    SolverState& state = result.state;

    const std::int64_t iteration_cap = instance.num_demand();
    while (state.total_available_supply() > 0 && state.total_neighbor_count() > 0) {
        const auto subgraph = select_subgraph(state, config.subgraph_rule);
        if (!subgraph) break;  // unreachable: total_neighbor_count() > 0
        const auto node = select_node(state, *subgraph, config.node_rule);
        if (!node) throw std::logic_error("selected subgraph has an empty neighbor set");

        state.add_node(*subgraph, *node);
        result.trace.emplace_back(*subgraph, *node);
        if (++result.iterations > iteration_cap) {
            throw std::logic_error("greedy exceeded the demand-node iteration cap");
        }
        if (validate_each_iteration) {
            const auto verdict = check_feasible(instance, state.partition());
            if (!verdict) {
                throw std::logic_error("greedy produced infeasible state: " +
                                       verdict.violation);
            }
        }
    }

    result.stop_reason = state.total_available_supply() == 0
                             ? StopReason::SupplyExhausted
                             : StopReason::NoNeighbors;
    return result;
}

}  // namespace mpgsd
