#include "mpgsd/solver_state.hpp"

#include <algorithm>
#include <queue>

namespace mpgsd {

namespace {

[[noreturn]] void contract_violation(const std::string& what) {
    throw std::logic_error("SolverState contract violation: " + what);
}

}  // namespace

SolverState::SolverState(const Instance& instance)
    : instance_(&instance),
      num_subgraphs_(instance.num_supply()),
      partition_(Partition::initial(instance)) {
    const auto n = static_cast<size_t>(instance.num_nodes());
    members_.resize(static_cast<size_t>(num_subgraphs_));
    candidate_sets_.resize(static_cast<size_t>(num_subgraphs_));
    neighbor_sets_.resize(static_cast<size_t>(num_subgraphs_));
    located_.assign(n, 0);
    ch_.assign(n, 0);
    adj_count_.assign(n * static_cast<size_t>(num_subgraphs_), 0);

    const auto& supplies = instance.supply_nodes();
    for (std::int32_t i = 0; i < num_subgraphs_; ++i) {
        const NodeId s = supplies[static_cast<size_t>(i)];
        located_[static_cast<size_t>(s)] = 1;
        ch_[static_cast<size_t>(s)] = kSupplyChBase;
        members_[static_cast<size_t>(i)].insert(s);
        total_available_ =
            checked_add(total_available_, partition_.available_supply[static_cast<size_t>(i)]);
        for (NodeId w : instance.neighbors(s)) {
            if (!instance.is_demand(w)) continue;
            ++adj_count_ref(w, i);
            candidate_sets_[static_cast<size_t>(i)].insert(w);
            if (instance.demand_magnitude(w) <= available_supply(i)) {
                neighbor_sets_[static_cast<size_t>(i)].insert(w);
                ++total_neighbors_;
            }
        }
    }
}

void SolverState::add_node(std::int32_t i, NodeId v) {
    if (i < 0 || i >= num_subgraphs_) contract_violation("subgraph index out of range");
    if (!neighbor_sets_[static_cast<size_t>(i)].count(v)) {
        contract_violation("node " + std::to_string(v) + " not in neighbor set of subgraph " +
                           std::to_string(i));
    }

    // hook v into the implicit tree: its located neighbor in i with the
    // largest ch, lowest id on ties, gains a child
    NodeId parent = kNonLocated;
    for (NodeId w : instance_->neighbors(v)) {
        if (subgraph_of(w) != i) continue;
        if (parent == kNonLocated || ch_[static_cast<size_t>(w)] > ch_[static_cast<size_t>(parent)]) {
            parent = w;
        }
    }
    if (parent == kNonLocated) contract_violation("neighbor-set node has no located neighbor");
    ++ch_[static_cast<size_t>(parent)];

    locate(i, v);
}

void SolverState::remove_node(std::int32_t i, NodeId v) {
    if (i < 0 || i >= num_subgraphs_) contract_violation("subgraph index out of range");
    if (subgraph_of(v) != i) {
        contract_violation("node " + std::to_string(v) + " not located in subgraph " +
                           std::to_string(i));
    }
    if (!instance_->is_demand(v)) contract_violation("supply nodes cannot be removed");
    if (ch_[static_cast<size_t>(v)] != 0) {
        contract_violation("node " + std::to_string(v) + " has ch > 0, not removable");
    }

    NodeId parent = kNonLocated;
    for (NodeId w : instance_->neighbors(v)) {
        if (subgraph_of(w) != i) continue;
        if (parent == kNonLocated || ch_[static_cast<size_t>(w)] > ch_[static_cast<size_t>(parent)]) {
            parent = w;
        }
    }
    if (parent == kNonLocated) contract_violation("located node has no located neighbor");
    --ch_[static_cast<size_t>(parent)];

    dislocate(i, v);
}

void SolverState::locate(std::int32_t i, NodeId v) {
    const Weight mag = instance_->demand_magnitude(v);

    // v is no longer a candidate anywhere
    for (std::int32_t j = 0; j < num_subgraphs_; ++j) {
        if (adjacency_count(v, j) == 0) continue;
        candidate_sets_[static_cast<size_t>(j)].erase(v);
        if (neighbor_sets_[static_cast<size_t>(j)].erase(v)) --total_neighbors_;
    }

    partition_.assignment[static_cast<size_t>(v)] = i;
    located_[static_cast<size_t>(v)] = 1;
    members_[static_cast<size_t>(i)].insert(v);
    partition_.available_supply[static_cast<size_t>(i)] -= mag;
    total_available_ -= mag;
    covered_ = checked_add(covered_, mag);

    // v's free demand neighbors become (or stay) adjacent to subgraph i
    const Weight avail = available_supply(i);
    for (NodeId w : instance_->neighbors(v)) {
        if (!instance_->is_demand(w)) continue;
        const auto count = ++adj_count_ref(w, i);
        if (located_[static_cast<size_t>(w)] || count != 1) continue;
        candidate_sets_[static_cast<size_t>(i)].insert(w);
        if (instance_->demand_magnitude(w) <= avail) {
            if (neighbor_sets_[static_cast<size_t>(i)].insert(w).second) ++total_neighbors_;
        }
    }

    refilter_after_decrease(i);
}

void SolverState::dislocate(std::int32_t i, NodeId v) {
    const Weight mag = instance_->demand_magnitude(v);

    for (NodeId w : instance_->neighbors(v)) {
        if (!instance_->is_demand(w)) continue;
        const auto count = --adj_count_ref(w, i);
        if (located_[static_cast<size_t>(w)] || count != 0) continue;
        candidate_sets_[static_cast<size_t>(i)].erase(w);
        if (neighbor_sets_[static_cast<size_t>(i)].erase(w)) --total_neighbors_;
    }

    partition_.assignment[static_cast<size_t>(v)] = kNonLocated;
    located_[static_cast<size_t>(v)] = 0;
    members_[static_cast<size_t>(i)].erase(v);
    partition_.available_supply[static_cast<size_t>(i)] += mag;
    total_available_ += mag;
    covered_ -= mag;

    // v re-enters the candidate sets of every adjacent subgraph
    for (std::int32_t j = 0; j < num_subgraphs_; ++j) {
        if (adjacency_count(v, j) == 0) continue;
        candidate_sets_[static_cast<size_t>(j)].insert(v);
        if (mag <= available_supply(j)) {
            if (neighbor_sets_[static_cast<size_t>(j)].insert(v).second) ++total_neighbors_;
        }
    }

    admit_after_increase(i);
}

void SolverState::refilter_after_decrease(std::int32_t i) {
    const Weight avail = available_supply(i);
    auto& nbr = neighbor_sets_[static_cast<size_t>(i)];
    for (auto it = nbr.begin(); it != nbr.end();) {
        if (instance_->demand_magnitude(*it) > avail) {
            it = nbr.erase(it);
            --total_neighbors_;
        } else {
            ++it;
        }
    }
}

void SolverState::admit_after_increase(std::int32_t i) {
    const Weight avail = available_supply(i);
    auto& nbr = neighbor_sets_[static_cast<size_t>(i)];
    for (NodeId w : candidate_sets_[static_cast<size_t>(i)]) {
        if (instance_->demand_magnitude(w) <= avail) {
            if (nbr.insert(w).second) ++total_neighbors_;
        }
    }
}

bool SolverState::removal_keeps_connected(std::int32_t i, NodeId v) const {
    const auto& mem = members_[static_cast<size_t>(i)];
    const NodeId root = partition_.subgraph_supply_node[static_cast<size_t>(i)];
    if (v == root) return false;
    std::queue<NodeId> frontier;
    std::set<NodeId> seen{root};
    frontier.push(root);
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        for (NodeId w : instance_->neighbors(u)) {
            if (w == v || !mem.count(w) || seen.count(w)) continue;
            seen.insert(w);
            frontier.push(w);
        }
    }
    return seen.size() == mem.size() - 1;
}

bool SolverState::exchange_keeps_connected(std::int32_t i, NodeId out, NodeId in) const {
    const auto& mem = members_[static_cast<size_t>(i)];
    const NodeId root = partition_.subgraph_supply_node[static_cast<size_t>(i)];
    if (out == root) return false;
    auto present = [&](NodeId w) { return w == in || (w != out && mem.count(w) != 0); };
    std::queue<NodeId> frontier;
    std::set<NodeId> seen{root};
    frontier.push(root);
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        for (NodeId w : instance_->neighbors(u)) {
            if (!present(w) || seen.count(w)) continue;
            seen.insert(w);
            frontier.push(w);
        }
    }
    return seen.size() == mem.size();
}

SolverState SolverState::recompute_reference() const {
    SolverState ref(*instance_);
    ref.partition_.assignment = partition_.assignment;
    ref.ch_ = ch_;  // history-dependent, copied as-is

    const auto n = static_cast<size_t>(instance_->num_nodes());
    for (auto& m : ref.members_) m.clear();
    for (auto& c : ref.candidate_sets_) c.clear();
    for (auto& s : ref.neighbor_sets_) s.clear();
    ref.located_.assign(n, 0);
    ref.adj_count_.assign(n * static_cast<size_t>(num_subgraphs_), 0);
    ref.covered_ = 0;
    ref.total_available_ = 0;
    ref.total_neighbors_ = 0;
    std::fill(ref.partition_.available_supply.begin(),
              ref.partition_.available_supply.end(), Weight{0});

    for (NodeId v = 0; v < instance_->num_nodes(); ++v) {
        const auto s = ref.partition_.assignment[static_cast<size_t>(v)];
        if (s == kNonLocated) continue;
        ref.located_[static_cast<size_t>(v)] = 1;
        ref.members_[static_cast<size_t>(s)].insert(v);
        ref.partition_.available_supply[static_cast<size_t>(s)] += instance_->weight(v);
        if (instance_->is_demand(v)) {
            ref.covered_ = checked_add(ref.covered_, instance_->demand_magnitude(v));
        }
    }
    for (Weight avail : ref.partition_.available_supply) {
        ref.total_available_ += avail;
    }
    for (NodeId v = 0; v < instance_->num_nodes(); ++v) {
        if (!instance_->is_demand(v)) continue;
        for (NodeId w : instance_->neighbors(v)) {
            const auto s = ref.partition_.assignment[static_cast<size_t>(w)];
            if (s != kNonLocated) ++ref.adj_count_ref(v, s);
        }
    }
    for (NodeId v = 0; v < instance_->num_nodes(); ++v) {
        if (!instance_->is_demand(v) || ref.located_[static_cast<size_t>(v)]) continue;
        for (std::int32_t j = 0; j < num_subgraphs_; ++j) {
            if (ref.adjacency_count(v, j) == 0) continue;
            ref.candidate_sets_[static_cast<size_t>(j)].insert(v);
            if (instance_->demand_magnitude(v) <= ref.available_supply(j)) {
                ref.neighbor_sets_[static_cast<size_t>(j)].insert(v);
                ++ref.total_neighbors_;
            }
        }
    }
    return ref;
}

bool SolverState::operator==(const SolverState& other) const {
    return instance_ == other.instance_ &&
           partition_.assignment == other.partition_.assignment &&
           partition_.available_supply == other.partition_.available_supply &&
           members_ == other.members_ &&
           candidate_sets_ == other.candidate_sets_ &&
           neighbor_sets_ == other.neighbor_sets_ &&
           located_ == other.located_ &&
           ch_ == other.ch_ &&
           adj_count_ == other.adj_count_ &&
           covered_ == other.covered_ &&
           total_available_ == other.total_available_ &&
           total_neighbors_ == other.total_neighbors_;
}

}  // namespace mpgsd
