#ifndef MPGSD_SOLVER_STATE_HPP
#define MPGSD_SOLVER_STATE_HPP

#include <set>
#include <vector>

#include "mpgsd/graph.hpp"

namespace mpgsd {

/// ch value given to supply nodes; large enough that no sequence of
/// increments or decrements can ever make a supply node look removable.
constexpr std::int64_t kSupplyChBase = std::int64_t{1} << 40;

/// Mutable partial-solution state for the greedy algorithm and the
/// correction procedures.
///
/// Per subgraph i it maintains, eagerly after every mutation:
///   - candidate_set(i): non-located demand nodes adjacent to subgraph i,
///   - neighbor_set(i):  the subset of candidates whose demand magnitude
///                       fits the current available supply (the corrected
///                       neighbor set N_i),
/// plus the per-node child counter ch used for approximate leaf detection.
/// Both sets iterate in ascending NodeId order.
class SolverState {
public:
    explicit SolverState(const Instance& instance);

    const Instance& instance() const { return *instance_; }
    std::int32_t num_subgraphs() const { return num_subgraphs_; }

    const Partition& partition() const { return partition_; }
    const std::set<NodeId>& neighbor_set(std::int32_t i) const {
        return neighbor_sets_[static_cast<size_t>(i)];
    }
    const std::set<NodeId>& candidate_set(std::int32_t i) const {
        return candidate_sets_[static_cast<size_t>(i)];
    }
    const std::set<NodeId>& members(std::int32_t i) const {
        return members_[static_cast<size_t>(i)];
    }
    Weight available_supply(std::int32_t i) const {
        return partition_.available_supply[static_cast<size_t>(i)];
    }
    Weight total_available_supply() const { return total_available_; }
    std::int64_t total_neighbor_count() const { return total_neighbors_; }

    bool located(NodeId v) const { return located_[static_cast<size_t>(v)]; }
    std::int32_t subgraph_of(NodeId v) const {
        return partition_.assignment[static_cast<size_t>(v)];
    }
    std::int64_t ch(NodeId v) const { return ch_[static_cast<size_t>(v)]; }

    /// Number of v's neighbors currently located in subgraph i. Nonzero iff
    /// v is adjacent to subgraph i.
    std::int32_t adjacency_count(NodeId v, std::int32_t i) const {
        return adj_count_[static_cast<size_t>(v) * static_cast<size_t>(num_subgraphs_) +
                          static_cast<size_t>(i)];
    }

    Weight covered_demand() const { return covered_; }

    /// Locates demand node v in subgraph i. Requires v in neighbor_set(i).
    void add_node(std::int32_t i, NodeId v);

    /// Removes demand node v from subgraph i. Requires v located in i with
    /// ch(v) == 0. The caller is responsible for connectivity (see
    /// removal_keeps_connected).
    void remove_node(std::int32_t i, NodeId v);

    /// True when subgraph i stays connected after dropping v (BFS check).
    bool removal_keeps_connected(std::int32_t i, NodeId v) const;

    /// True when (members(i) \ {out}) ∪ {in} induces a connected subgraph.
    bool exchange_keeps_connected(std::int32_t i, NodeId out, NodeId in) const;

    /// From-scratch rebuild of every derived structure (candidate and
    /// neighbor sets, available supplies, located flags, adjacency counts)
    /// from the assignment alone. Test oracle for the incremental updates;
    /// ch is history-dependent and is copied as-is.
    SolverState recompute_reference() const;

    bool operator==(const SolverState& other) const;

private:
    void locate(std::int32_t i, NodeId v);
    void dislocate(std::int32_t i, NodeId v);
    void refilter_after_decrease(std::int32_t i);
    void admit_after_increase(std::int32_t i);
    std::int32_t& adj_count_ref(NodeId v, std::int32_t i) {
        return adj_count_[static_cast<size_t>(v) * static_cast<size_t>(num_subgraphs_) +
                          static_cast<size_t>(i)];
    }

    const Instance* instance_;
    std::int32_t num_subgraphs_;
    Partition partition_;
    std::vector<std::set<NodeId>> members_;
    std::vector<std::set<NodeId>> candidate_sets_;
    std::vector<std::set<NodeId>> neighbor_sets_;
    std::vector<char> located_;
    std::vector<std::int64_t> ch_;
    std::vector<std::int32_t> adj_count_;
    Weight covered_ = 0;
    Weight total_available_ = 0;
    std::int64_t total_neighbors_ = 0;
};

}  // namespace mpgsd

#endif
