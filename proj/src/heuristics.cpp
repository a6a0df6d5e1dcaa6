#include "mpgsd/heuristics.hpp"

namespace mpgsd {

std::string HeuristicConfig::label() const {
    return "hs" + std::to_string(static_cast<int>(subgraph_rule)) + "-hn" +
           std::to_string(static_cast<int>(node_rule));
}

std::array<HeuristicConfig, 12> all_heuristic_configs() {
    std::array<HeuristicConfig, 12> configs;
    size_t k = 0;
    for (int hs = 1; hs <= 3; ++hs) {
        for (int hn = 1; hn <= 4; ++hn) {
            configs[k++] = {static_cast<SubgraphRule>(hs), static_cast<NodeRule>(hn)};
        }
    }
    return configs;
}

bool score_less(const Score& a, const Score& b) {
    if (a.least_desirable || b.least_desirable) {
        return a.least_desirable && !b.least_desirable;
    }
    // denominators are positive; cross products stay in range because
    // Instance caps the total weight magnitude
    return a.num * b.den < b.num * a.den;
}

bool score_equal(const Score& a, const Score& b) {
    if (a.least_desirable || b.least_desirable) {
        return a.least_desirable == b.least_desirable;
    }
    return a.num * b.den == b.num * a.den;
}

Score score_subgraph(const SolverState& state, std::int32_t i, SubgraphRule rule) {
    const Weight supply = state.available_supply(i);
    const auto degree = static_cast<std::int64_t>(state.neighbor_set(i).size());
    switch (rule) {
        case SubgraphRule::HS1:
            return Score::of(supply);
        case SubgraphRule::HS2:
            return degree == 0 ? Score::sentinel() : Score::ratio(1, degree);
        case SubgraphRule::HS3:
            return degree == 0 ? Score::sentinel() : Score::ratio(supply, degree);
    }
    throw std::logic_error("unknown subgraph rule");
}

namespace {

// |C(u, S_i)|: new neighbors the subgraph gains by adding u, restricted to
// those fitting the capacity left after u itself is paid for.
std::int64_t new_neighbor_count(const SolverState& state, std::int32_t i, NodeId u) {
    const Instance& instance = state.instance();
    const Weight remaining = state.available_supply(i) - instance.demand_magnitude(u);
    std::int64_t count = 0;
    for (NodeId v : instance.neighbors(u)) {
        if (!instance.is_demand(v) || state.located(v)) continue;
        if (state.adjacency_count(v, i) > 0) continue;  // already a neighbor
        if (instance.demand_magnitude(v) <= remaining) ++count;
    }
    return count;
}

}  // namespace

Score score_node(const SolverState& state, std::int32_t i, NodeId u, NodeRule rule) {
    const Weight magnitude = state.instance().demand_magnitude(u);
    switch (rule) {
        case NodeRule::HN1:
            return Score::of(magnitude);
        case NodeRule::HN2:
            return Score::of(new_neighbor_count(state, i, u));
        case NodeRule::HN3:
            return Score::of((new_neighbor_count(state, i, u) + 1) * magnitude);
        case NodeRule::HN4:
            return Score::of(-magnitude);
    }
    throw std::logic_error("unknown node rule");
}

std::optional<std::int32_t> select_subgraph(const SolverState& state, SubgraphRule rule) {
    std::optional<std::int32_t> best;
    Score best_score;
    for (std::int32_t i = 0; i < state.num_subgraphs(); ++i) {
        if (state.neighbor_set(i).empty()) continue;
        const Score s = score_subgraph(state, i, rule);
        if (!best || score_less(best_score, s)) {
            best = i;
            best_score = s;
        }
    }
    return best;
}

std::optional<NodeId> select_node(const SolverState& state, std::int32_t i, NodeRule rule) {
    std::optional<NodeId> best;
    Score best_score;
    for (NodeId u : state.neighbor_set(i)) {
        const Score s = score_node(state, i, u, rule);
        if (!best || score_less(best_score, s)) {
            best = u;
            best_score = s;
        }
    }
    return best;
}

}  // namespace mpgsd
