#ifndef MPGSD_HEURISTICS_HPP
#define MPGSD_HEURISTICS_HPP

#include <array>
#include <optional>
#include <string>

#include "mpgsd/solver_state.hpp"

namespace mpgsd {

enum class SubgraphRule { HS1 = 1, HS2 = 2, HS3 = 3 };
enum class NodeRule { HN1 = 1, HN2 = 2, HN3 = 3, HN4 = 4 };

struct HeuristicConfig {
    SubgraphRule subgraph_rule = SubgraphRule::HS1;
    NodeRule node_rule = NodeRule::HN1;

    std::string label() const;
    bool operator==(const HeuristicConfig&) const = default;
};

/// All 12 subgraph x node combinations in canonical enumeration order
/// (HS1..HS3 outer, HN1..HN4 inner).
std::array<HeuristicConfig, 12> all_heuristic_configs();

/// Desirability score, exact: a rational num/den compared by
/// cross-multiplication, plus a least-desirable sentinel used by HS2/HS3
/// when a subgraph has an empty neighbor set.
struct Score {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool least_desirable = false;

    static Score sentinel() { return {0, 1, true}; }
    static Score of(std::int64_t value) { return {value, 1, false}; }
    static Score ratio(std::int64_t num, std::int64_t den) { return {num, den, false}; }
};

bool score_less(const Score& a, const Score& b);
bool score_equal(const Score& a, const Score& b);

/// HS1 -> available supply; HS2 -> 1/|N_i|; HS3 -> available supply / |N_i|.
/// HS2 and HS3 return the sentinel when |N_i| = 0.
Score score_subgraph(const SolverState& state, std::int32_t i, SubgraphRule rule);

/// HN1 -> demand magnitude; HN2 -> number of new neighbors gained by adding
/// u (nodes adjacent to u, demand, non-located, not yet adjacent to
/// subgraph i, fitting the post-addition capacity); HN3 -> (HN2+1)*HN1;
/// HN4 -> negated magnitude (minimal demand most desirable).
/// Requires u in neighbor_set(i).
Score score_node(const SolverState& state, std::int32_t i, NodeId u, NodeRule rule);

/// Argmax over subgraphs with a nonempty neighbor set; ties broken by the
/// lowest subgraph index. nullopt when every neighbor set is empty.
std::optional<std::int32_t> select_subgraph(const SolverState& state, SubgraphRule rule);

/// Argmax over neighbor_set(i); ties broken by the lowest NodeId. nullopt
/// when the set is empty.
std::optional<NodeId> select_node(const SolverState& state, std::int32_t i, NodeRule rule);

}  // namespace mpgsd

#endif
