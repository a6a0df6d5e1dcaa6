#include "mpgsd/exact_oracle.hpp"

#include <algorithm>

namespace mpgsd {

namespace {

// Branch and bound over subgraphs in supply order. For subgraph i every
// connected, capacity-feasible demand subset around its supply node is
// enumerated exactly once (candidates processed in ascending order, each
// excluded for the remainder of its frame after its include-branch).
class ExactSolver {
public:
    explicit ExactSolver(const Instance& instance)
        : instance_(instance),
          supplies_(instance.supply_nodes()),
          assignment_(static_cast<size_t>(instance.num_nodes()), kNonLocated),
          used_(static_cast<size_t>(instance.num_nodes()), 0),
          excluded_by_(static_cast<size_t>(instance.num_nodes()), -1),
          unused_demand_(instance.total_demand()) {
        const auto n = supplies_.size();
        suffix_supply_.assign(n + 1, 0);
        for (size_t i = n; i-- > 0;) {
            suffix_supply_[i] = suffix_supply_[i + 1] + instance.weight(supplies_[i]);
        }
        for (size_t i = 0; i < n; ++i) {
            assignment_[static_cast<size_t>(supplies_[i])] = static_cast<std::int32_t>(i);
        }
        best_assignment_ = assignment_;
    }

    OracleResult solve() {
        branch(0, 0);
        OracleResult result;
        result.optimum = best_;
        result.witness = Partition::from_assignment(instance_, best_assignment_);
        result.explored = explored_;
        return result;
    }

private:
    void branch(std::int32_t i, Weight covered) {
        ++explored_;
        if (covered > best_) {
            best_ = covered;
            best_assignment_ = assignment_;
        }
        if (i == static_cast<std::int32_t>(supplies_.size())) return;
        if (covered + std::min(unused_demand_, suffix_supply_[static_cast<size_t>(i)]) <=
            best_) {
            return;
        }
        const NodeId root = supplies_[static_cast<size_t>(i)];
        extend(i, covered, instance_.weight(root), collect_candidates(i, {root}, {}));
    }

    std::vector<NodeId> collect_candidates(std::int32_t i,
                                           std::initializer_list<NodeId> around,
                                           const std::vector<NodeId>& base) {
        std::vector<NodeId> out = base;
        for (NodeId u : around) {
            for (NodeId w : instance_.neighbors(u)) {
                if (!instance_.is_demand(w) || used_[static_cast<size_t>(w)]) continue;
                if (excluded_by_[static_cast<size_t>(w)] == i) continue;
                if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
            }
        }
        return out;
    }

    void extend(std::int32_t i, Weight covered, Weight capacity,
                const std::vector<NodeId>& frontier) {
        ++explored_;
        branch(i + 1, covered);  // freeze the subgraph as built so far
        if (covered + std::min(unused_demand_,
                               capacity + suffix_supply_[static_cast<size_t>(i) + 1]) <=
            best_) {
            return;
        }

        std::vector<NodeId> tagged;
        for (size_t k = 0; k < frontier.size(); ++k) {
            const NodeId v = frontier[k];
            const Weight mag = instance_.demand_magnitude(v);
            if (mag <= capacity) {
                used_[static_cast<size_t>(v)] = 1;
                assignment_[static_cast<size_t>(v)] = i;
                unused_demand_ -= mag;

                std::vector<NodeId> rest(frontier.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                                         frontier.end());
                extend(i, covered + mag, capacity - mag, collect_candidates(i, {v}, rest));

                unused_demand_ += mag;
                assignment_[static_cast<size_t>(v)] = kNonLocated;
                used_[static_cast<size_t>(v)] = 0;
            }
            excluded_by_[static_cast<size_t>(v)] = i;
            tagged.push_back(v);
        }
        for (NodeId v : tagged) excluded_by_[static_cast<size_t>(v)] = -1;
    }

    const Instance& instance_;
    const std::vector<NodeId>& supplies_;
    std::vector<std::int32_t> assignment_;
    std::vector<std::int32_t> best_assignment_;
    std::vector<char> used_;
    std::vector<std::int32_t> excluded_by_;
    std::vector<Weight> suffix_supply_;
    Weight unused_demand_;
    Weight best_ = 0;
    std::int64_t explored_ = 0;
};

}  // namespace

OracleResult solve_exact(const Instance& instance, NodeId max_nodes) {
    if (instance.num_nodes() > max_nodes) {
        throw std::invalid_argument("instance has " + std::to_string(instance.num_nodes()) +
                                    " nodes, above the exact-solver cap of " +
                                    std::to_string(max_nodes));
    }
    return ExactSolver(instance).solve();
}

}  // namespace mpgsd
