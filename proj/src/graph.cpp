#include "mpgsd/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace mpgsd {

std::string to_string(GraphKind kind) {
    return kind == GraphKind::Tree ? "tree" : "general";
}

Weight checked_add(Weight a, Weight b) {
    Weight out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("weight sum overflow");
    }
    return out;
}

namespace {

// Together these keep every rational heuristic-score cross product inside
// 64 bits: supply/degree ratios multiply out to at most 2^40 * 2^22.
constexpr Weight kMaxTotalMagnitude = Weight{1} << 40;
constexpr std::int64_t kMaxNodes = std::int64_t{1} << 22;

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

}  // namespace

Instance Instance::create(std::vector<Weight> node_weights,
                          const std::vector<std::pair<NodeId, NodeId>>& edges,
                          GraphKind kind,
                          std::optional<Weight> optimum_hint) {
    require(node_weights.size() >= 1, "instance has no nodes");
    require(node_weights.size() <= static_cast<size_t>(kMaxNodes), "too many nodes");
    const auto n = static_cast<NodeId>(node_weights.size());

    Instance inst;
    inst.kind_ = kind;
    inst.optimum_hint_ = optimum_hint;
    inst.weights_ = std::move(node_weights);
    inst.adjacency_.assign(static_cast<size_t>(n), {});

    Weight magnitude_sum = 0;
    for (NodeId v = 0; v < n; ++v) {
        const Weight w = inst.weights_[static_cast<size_t>(v)];
        require(w != 0, "node " + std::to_string(v) + " has weight 0");
        if (w > 0) {
            inst.supply_nodes_.push_back(v);
            inst.total_supply_ = checked_add(inst.total_supply_, w);
        } else {
            inst.total_demand_ = checked_add(inst.total_demand_, -w);
        }
        magnitude_sum = checked_add(magnitude_sum, w > 0 ? w : -w);
    }
    require(magnitude_sum <= kMaxTotalMagnitude, "total weight magnitude too large");
    require(!inst.supply_nodes_.empty(), "instance has no supply node");

    for (const auto& [u, v] : edges) {
        require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
        require(u != v, "self-loop on node " + std::to_string(u));
        inst.adjacency_[static_cast<size_t>(u)].push_back(v);
        inst.adjacency_[static_cast<size_t>(v)].push_back(u);
    }
    inst.num_edges_ = static_cast<std::int64_t>(edges.size());

    for (NodeId v = 0; v < n; ++v) {
        auto& adj = inst.adjacency_[static_cast<size_t>(v)];
        std::sort(adj.begin(), adj.end());
        require(std::adjacent_find(adj.begin(), adj.end()) == adj.end(),
                "duplicate edge at node " + std::to_string(v));
    }

    if (kind == GraphKind::Tree) {
        require(inst.num_edges_ == n - 1, "tree instance must have |V|-1 edges");
    }

    // connectivity
    if (n > 1) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        std::queue<NodeId> frontier;
        frontier.push(0);
        seen[0] = 1;
        NodeId reached = 1;
        while (!frontier.empty()) {
            const NodeId u = frontier.front();
            frontier.pop();
            for (NodeId w : inst.adjacency_[static_cast<size_t>(u)]) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    ++reached;
                    frontier.push(w);
                }
            }
        }
        require(reached == n, "graph is not connected");
    }

    if (optimum_hint) {
        require(*optimum_hint >= 0, "optimum hint must be nonnegative");
    }
    return inst;
}

bool Instance::adjacent(NodeId u, NodeId v) const {
    const auto& adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Instance::edge_list() const {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<size_t>(num_edges_));
    for (NodeId u = 0; u < num_nodes(); ++u) {
        for (NodeId v : neighbors(u)) {
            if (u < v) edges.emplace_back(u, v);
        }
    }
    return edges;
}

Partition Partition::initial(const Instance& instance) {
    Partition p;
    p.assignment.assign(static_cast<size_t>(instance.num_nodes()), kNonLocated);
    const auto& supplies = instance.supply_nodes();
    p.subgraph_supply_node = supplies;
    p.available_supply.resize(supplies.size());
    for (size_t i = 0; i < supplies.size(); ++i) {
        p.assignment[static_cast<size_t>(supplies[i])] = static_cast<std::int32_t>(i);
        p.available_supply[i] = instance.weight(supplies[i]);
    }
    return p;
}

Partition Partition::from_assignment(const Instance& instance,
                                     std::vector<std::int32_t> assignment) {
    if (assignment.size() != static_cast<size_t>(instance.num_nodes())) {
        throw std::invalid_argument("assignment size does not match instance");
    }
    const auto n_sub = instance.num_supply();
    Partition p;
    p.assignment = std::move(assignment);
    p.subgraph_supply_node.assign(static_cast<size_t>(n_sub), kNonLocated);
    p.available_supply.assign(static_cast<size_t>(n_sub), 0);
    for (NodeId v = 0; v < instance.num_nodes(); ++v) {
        const auto s = p.assignment[static_cast<size_t>(v)];
        if (s == kNonLocated) continue;
        if (s < 0 || s >= n_sub) {
            throw std::invalid_argument("subgraph index " + std::to_string(s) +
                                        " out of range for node " + std::to_string(v));
        }
        p.available_supply[static_cast<size_t>(s)] =
            checked_add(p.available_supply[static_cast<size_t>(s)], instance.weight(v));
        if (instance.is_supply(v) &&
            p.subgraph_supply_node[static_cast<size_t>(s)] == kNonLocated) {
            p.subgraph_supply_node[static_cast<size_t>(s)] = v;
        }
    }
    return p;
}

Weight covered_demand(const Instance& instance, const Partition& partition) {
    if (partition.assignment.size() != static_cast<size_t>(instance.num_nodes())) {
        throw std::invalid_argument("partition does not match instance");
    }
    Weight covered = 0;
    for (NodeId v = 0; v < instance.num_nodes(); ++v) {
        const auto s = partition.assignment[static_cast<size_t>(v)];
        if (s == kNonLocated) continue;
        if (s < 0 || s >= partition.num_subgraphs()) {
            throw std::invalid_argument("subgraph index out of range for node " +
                                        std::to_string(v));
        }
        if (instance.is_demand(v)) {
            covered = checked_add(covered, instance.demand_magnitude(v));
        }
    }
    return covered;
}

Feasibility check_feasible(const Instance& instance, const Partition& partition) {
    const auto n_sub = partition.num_subgraphs();
    auto fail = [](std::int32_t subgraph, std::string why) {
        return Feasibility{false, subgraph, std::move(why)};
    };
    if (partition.assignment.size() != static_cast<size_t>(instance.num_nodes())) {
        return fail(-1, "assignment size does not match instance");
    }

    std::vector<NodeId> supply_of(static_cast<size_t>(n_sub), kNonLocated);
    std::vector<Weight> balance(static_cast<size_t>(n_sub), 0);
    std::vector<std::vector<NodeId>> members(static_cast<size_t>(n_sub));
    for (NodeId v = 0; v < instance.num_nodes(); ++v) {
        const auto s = partition.assignment[static_cast<size_t>(v)];
        if (s == kNonLocated) continue;
        if (s < 0 || s >= n_sub) {
            return fail(s, "subgraph index out of range for node " + std::to_string(v));
        }
        members[static_cast<size_t>(s)].push_back(v);
        balance[static_cast<size_t>(s)] =
            checked_add(balance[static_cast<size_t>(s)], instance.weight(v));
        if (instance.is_supply(v)) {
            if (supply_of[static_cast<size_t>(s)] != kNonLocated) {
                return fail(s, "subgraph " + std::to_string(s) +
                                   " contains more than one supply node");
            }
            supply_of[static_cast<size_t>(s)] = v;
        }
    }

    for (std::int32_t s = 0; s < n_sub; ++s) {
        if (supply_of[static_cast<size_t>(s)] == kNonLocated) {
            return fail(s, "subgraph " + std::to_string(s) + " has no supply node");
        }
        if (balance[static_cast<size_t>(s)] < 0) {
            std::ostringstream oss;
            oss << "subgraph " << s << " available supply "
                << balance[static_cast<size_t>(s)] << " < 0";
            return fail(s, oss.str());
        }
    }

    // connectivity: BFS inside each subgraph from its supply node
    std::vector<char> seen(static_cast<size_t>(instance.num_nodes()), 0);
    for (std::int32_t s = 0; s < n_sub; ++s) {
        const NodeId root = supply_of[static_cast<size_t>(s)];
        std::queue<NodeId> frontier;
        frontier.push(root);
        seen[static_cast<size_t>(root)] = 1;
        size_t reached = 1;
        while (!frontier.empty()) {
            const NodeId u = frontier.front();
            frontier.pop();
            for (NodeId w : instance.neighbors(u)) {
                if (partition.assignment[static_cast<size_t>(w)] == s &&
                    !seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    ++reached;
                    frontier.push(w);
                }
            }
        }
        if (reached != members[static_cast<size_t>(s)].size()) {
            return fail(s, "subgraph " + std::to_string(s) + " disconnected");
        }
    }
    return {};
}

double normalized_error(Weight optimum, Weight found) {
    if (optimum <= 0) {
        throw std::invalid_argument("optimum must be positive");
    }
    if (found > optimum) {
        throw std::logic_error("found value " + std::to_string(found) +
                               " exceeds optimum " + std::to_string(optimum));
    }
    if (found < 0) {
        throw std::invalid_argument("found value must be nonnegative");
    }
    return static_cast<double>(optimum - found) / static_cast<double>(optimum) * 100.0;
}

}  // namespace mpgsd
