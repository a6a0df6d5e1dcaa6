#ifndef MPGSD_GRAPH_HPP
#define MPGSD_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpgsd {

using NodeId = std::int32_t;
using Weight = std::int64_t;

/// Sentinel subgraph index for demand nodes that belong to no subgraph.
constexpr std::int32_t kNonLocated = -1;

enum class GraphKind { General, Tree };

std::string to_string(GraphKind kind);

/// Adds with an overflow check; weight sums in this library must never wrap.
Weight checked_add(Weight a, Weight b);

/// An immutable undirected graph whose nodes carry signed integer weights:
/// positive weights are supply nodes, negative weights are demand nodes.
/// Construction validates connectivity, simple-graph structure, nonzero
/// weights and (for trees) the edge count.
class Instance {
public:
    static Instance create(std::vector<Weight> node_weights,
                           const std::vector<std::pair<NodeId, NodeId>>& edges,
                           GraphKind kind,
                           std::optional<Weight> optimum_hint = std::nullopt);

    NodeId num_nodes() const { return static_cast<NodeId>(weights_.size()); }
    NodeId num_supply() const { return static_cast<NodeId>(supply_nodes_.size()); }
    NodeId num_demand() const { return num_nodes() - num_supply(); }
    std::int64_t num_edges() const { return num_edges_; }

    Weight weight(NodeId v) const { return weights_[static_cast<size_t>(v)]; }
    bool is_supply(NodeId v) const { return weight(v) > 0; }
    bool is_demand(NodeId v) const { return weight(v) < 0; }
    /// |sup(v)| for a demand node.
    Weight demand_magnitude(NodeId v) const { return -weight(v); }

    /// Neighbors of v, sorted ascending by NodeId.
    const std::vector<NodeId>& neighbors(NodeId v) const {
        return adjacency_[static_cast<size_t>(v)];
    }
    bool adjacent(NodeId u, NodeId v) const;

    /// Supply nodes in ascending NodeId order; subgraph i of any Partition
    /// over this instance is rooted at supply_nodes()[i].
    const std::vector<NodeId>& supply_nodes() const { return supply_nodes_; }

    GraphKind kind() const { return kind_; }
    std::optional<Weight> optimum_hint() const { return optimum_hint_; }

    /// Sum of all supply weights (upper bound on any covered demand).
    Weight total_supply() const { return total_supply_; }
    /// Sum of all demand magnitudes.
    Weight total_demand() const { return total_demand_; }

    std::vector<std::pair<NodeId, NodeId>> edge_list() const;

private:
    Instance() = default;

    std::vector<Weight> weights_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<NodeId> supply_nodes_;
    std::int64_t num_edges_ = 0;
    GraphKind kind_ = GraphKind::General;
    std::optional<Weight> optimum_hint_;
    Weight total_supply_ = 0;
    Weight total_demand_ = 0;
};

/// Assignment of every node to a subgraph index in [0, n) or kNonLocated.
/// Subgraph i is rooted at the i-th smallest supply node when produced by
/// this library; foreign numberings are accepted and judged by
/// check_feasible. available_supply[i] is the signed weight sum of the
/// members of subgraph i: its supply minus its located demand.
struct Partition {
    std::vector<std::int32_t> assignment;
    std::vector<NodeId> subgraph_supply_node;   // kNonLocated when missing
    std::vector<Weight> available_supply;

    std::int32_t num_subgraphs() const {
        return static_cast<std::int32_t>(available_supply.size());
    }

    /// All supply nodes placed in their own subgraph, all demand nodes
    /// non-located.
    static Partition initial(const Instance& instance);

    /// Builds a partition from a raw per-node assignment. Throws on indices
    /// outside [0, num_supply) or kNonLocated; all other defects are left
    /// for check_feasible to report.
    static Partition from_assignment(const Instance& instance,
                                     std::vector<std::int32_t> assignment);
};

/// Total absolute demand of all located demand nodes.
Weight covered_demand(const Instance& instance, const Partition& partition);

struct Feasibility {
    bool ok = true;
    std::int32_t subgraph = -1;     // offending subgraph, when applicable
    std::string violation;          // empty when ok

    explicit operator bool() const { return ok; }
};

/// Verifies one-supply-per-subgraph, nonnegative available supply and
/// per-subgraph connectivity; returns the first violation found.
/// Traversal-based; meant for validation and tests, not inner loops.
Feasibility check_feasible(const Instance& instance, const Partition& partition);

/// (optimum - found) / optimum * 100. A found value above optimum means a
/// feasibility or oracle bug somewhere upstream and raises logic_error.
double normalized_error(Weight optimum, Weight found);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mpgsd

#endif
