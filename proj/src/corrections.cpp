#include "mpgsd/corrections.hpp"

#include <algorithm>
#include <map>

namespace mpgsd {

std::string to_string(CorrectionKind kind) {
    switch (kind) {
        case CorrectionKind::NonLocated: return "non-located";
        case CorrectionKind::Switch: return "switch";
        case CorrectionKind::Cutoff: return "cutoff";
    }
    return "?";
}

std::optional<std::int32_t> detect_cycle(const std::deque<CorrectionRecord>& history,
                                         std::int32_t max_len) {
    const auto n = static_cast<std::int32_t>(history.size());
    for (std::int32_t len = 1; len <= std::min(max_len, n); ++len) {
        std::map<NodeId, std::int32_t> first_origin;
        std::map<NodeId, std::int32_t> last_dest;
        for (std::int32_t k = n - len; k < n; ++k) {
            for (const auto& move : history[static_cast<size_t>(k)].moved) {
                first_origin.emplace(move.node, move.from);
                last_dest[move.node] = move.to;
            }
        }
        if (first_origin.empty()) continue;
        bool closed = true;
        for (const auto& [node, origin] : first_origin) {
            if (last_dest.at(node) != origin) {
                closed = false;
                break;
            }
        }
        if (closed) return len;
    }
    return std::nullopt;
}

CorrectionContext::CorrectionContext(const CorrectionLimits& limits,
                                     const Instance& instance, bool validate_each_step)
    : limits_(limits),
      hard_cap_(limits.stagnation_window * static_cast<std::int64_t>(instance.num_nodes())),
      validate_(validate_each_step) {
    if (limits.max_cycle_length < 1 || limits.stagnation_window < 1) {
        throw std::invalid_argument("correction limits must be >= 1");
    }
}

void CorrectionContext::on_applied(const SolverState& state, CorrectionRecord record,
                                   bool gained) {
    if (validate_) {
        const auto verdict = check_feasible(state.instance(), state.partition());
        if (!verdict) {
            throw std::logic_error("correction produced infeasible state: " +
                                   verdict.violation);
        }
    }

    ++applied_;
    ++applied_by_kind_[static_cast<size_t>(record.kind)];
    history_.push_back(std::move(record));
    while (static_cast<std::int32_t>(history_.size()) > limits_.max_cycle_length) {
        history_.pop_front();
    }

    barred_.clear();  // the bar only ever applies to the very next correction
    if (const auto len = detect_cycle(history_, limits_.max_cycle_length)) {
        ++cycles_detected_;
        const auto& first = history_[history_.size() - static_cast<size_t>(*len)];
        for (const auto& move : first.moved) barred_.insert(move.node);
    }

    since_gain_ = gained ? 0 : since_gain_ + 1;
    if (since_gain_ >= limits_.stagnation_window) stopped_ = true;
    if (applied_ > hard_cap_) {
        throw std::logic_error("correction application count exceeded hard cap");
    }
}

std::vector<NodeId> exchange_set(const SolverState& state, NodeId u, std::int32_t i) {
    const Instance& instance = state.instance();
    const Weight u_mag = instance.demand_magnitude(u);
    const Weight avail = state.available_supply(i);
    std::vector<NodeId> out;
    for (NodeId v : state.members(i)) {
        if (!instance.is_demand(v) || state.ch(v) != 0) continue;
        const Weight v_mag = instance.demand_magnitude(v);
        if (v_mag < u_mag && u_mag <= v_mag + avail) out.push_back(v);
    }
    return out;
}

namespace {

std::vector<NodeId> non_located_demand_nodes(const SolverState& state) {
    std::vector<NodeId> out;
    const Instance& instance = state.instance();
    for (NodeId v = 0; v < instance.num_nodes(); ++v) {
        if (instance.is_demand(v) && !state.located(v)) out.push_back(v);
    }
    return out;
}

void apply_exchange(SolverState& state, CorrectionContext& ctx, CorrectionKind kind,
                    NodeId u, std::int32_t i, NodeId v, bool gained) {
    state.remove_node(i, v);
    state.add_node(i, u);
    ctx.on_applied(state,
                   {kind, {{u, kNonLocated, i}, {v, i, kNonLocated}}},
                   gained);
}

// Shared pass structure of the non-located correction and its switch
// variant. pick_exchange chooses the member to swap out, or nullopt.
template <typename PickExchange>
bool exchange_passes(SolverState& state, CorrectionContext& ctx, CorrectionKind kind,
                     bool allow_direct_add, PickExchange pick_exchange) {
    const Instance& instance = state.instance();
    bool any_change = false;
    bool pass_changed = true;
    while (pass_changed && !ctx.stopped()) {
        pass_changed = false;
        for (NodeId u : non_located_demand_nodes(state)) {
            if (ctx.stopped()) break;
            if (state.located(u) || ctx.barred(u)) continue;
            const Weight u_mag = instance.demand_magnitude(u);
            for (std::int32_t i = 0; i < state.num_subgraphs(); ++i) {
                if (state.adjacency_count(u, i) == 0) continue;
                if (allow_direct_add && u_mag <= state.available_supply(i)) {
                    state.add_node(i, u);
                    ctx.on_applied(state, {kind, {{u, kNonLocated, i}}}, true);
                    pass_changed = any_change = true;
                    break;
                }
                if (const auto v = pick_exchange(state, ctx, u, i)) {
                    apply_exchange(state, ctx, kind, u, i, *v,
                                   kind == CorrectionKind::NonLocated);
                    pass_changed = any_change = true;
                    break;
                }
            }
        }
    }
    return any_change;
}

}  // namespace

bool correction_non_located(SolverState& state, CorrectionContext& ctx) {
    auto pick = [](SolverState& state, CorrectionContext& ctx, NodeId u,
                   std::int32_t i) -> std::optional<NodeId> {
        auto candidates = exchange_set(state, u, i);
        // maximal gain first: smallest magnitude, then lowest id (the set
        // is already id-ascending, so a stable sort keeps the tie rule)
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](NodeId a, NodeId b) {
                             return state.instance().demand_magnitude(a) <
                                    state.instance().demand_magnitude(b);
                         });
        for (NodeId v : candidates) {
            if (ctx.barred(v)) continue;
            if (!state.exchange_keeps_connected(i, v, u)) continue;  // ch false positive
            return v;
        }
        return std::nullopt;
    };
    return exchange_passes(state, ctx, CorrectionKind::NonLocated,
                           /*allow_direct_add=*/true, pick);
}

bool correction_switch(SolverState& state, CorrectionContext& ctx) {
    auto pick = [](SolverState& state, CorrectionContext& ctx, NodeId u,
                   std::int32_t i) -> std::optional<NodeId> {
        const Instance& instance = state.instance();
        const Weight u_mag = instance.demand_magnitude(u);
        for (NodeId v : state.members(i)) {
            if (!instance.is_demand(v) || state.ch(v) != 0) continue;
            if (instance.demand_magnitude(v) != u_mag) continue;
            if (ctx.barred(v)) continue;
            if (!state.exchange_keeps_connected(i, v, u)) continue;
            return v;
        }
        return std::nullopt;
    };
    return exchange_passes(state, ctx, CorrectionKind::Switch,
                           /*allow_direct_add=*/false, pick);
}

namespace {

struct CutoffCandidate {
    NodeId node = kNonLocated;
    std::int32_t origin = kNonLocated;
};

// Highest-demand member of Ex(S), non-located candidates strictly before
// located ones, lowest id on ties; barred nodes and moves that would
// disconnect their source subgraph are skipped.
std::optional<CutoffCandidate> pick_cutoff_candidate(const SolverState& state,
                                                     const CorrectionContext& ctx,
                                                     std::int32_t s) {
    const Instance& instance = state.instance();

    std::optional<NodeId> best_free;
    for (NodeId v : state.neighbor_set(s)) {  // non-located, fits by invariant
        if (ctx.barred(v)) continue;
        if (!best_free || instance.demand_magnitude(v) >
                              instance.demand_magnitude(*best_free)) {
            best_free = v;
        }
    }
    if (best_free) return CutoffCandidate{*best_free, kNonLocated};

    const Weight avail = state.available_supply(s);
    std::optional<NodeId> best_located;
    std::set<NodeId> considered;
    for (NodeId u : state.members(s)) {
        for (NodeId v : instance.neighbors(u)) {
            if (!instance.is_demand(v) || state.subgraph_of(v) == s) continue;
            if (!state.located(v) || state.ch(v) != 0) continue;
            if (instance.demand_magnitude(v) > avail) continue;
            if (!considered.insert(v).second) continue;
            if (ctx.barred(v)) continue;
            if (!state.removal_keeps_connected(state.subgraph_of(v), v)) continue;
            if (!best_located ||
                instance.demand_magnitude(v) > instance.demand_magnitude(*best_located) ||
                (instance.demand_magnitude(v) ==
                     instance.demand_magnitude(*best_located) &&
                 v < *best_located)) {
                best_located = v;
            }
        }
    }
    if (best_located) return CutoffCandidate{*best_located, state.subgraph_of(*best_located)};
    return std::nullopt;
}

}  // namespace

bool correction_cutoff(SolverState& state, CorrectionContext& ctx) {
    if (ctx.stopped()) return false;

    // MaxSupplyExpandable: among subgraphs with a candidate, maximal
    // available supply, lowest index on ties
    std::optional<std::int32_t> target;
    for (std::int32_t i = 0; i < state.num_subgraphs(); ++i) {
        if (!pick_cutoff_candidate(state, ctx, i)) continue;
        if (!target || state.available_supply(i) > state.available_supply(*target)) {
            target = i;
        }
    }
    if (!target) return false;

    bool changed = false;
    while (!ctx.stopped()) {
        const auto cand = pick_cutoff_candidate(state, ctx, *target);
        if (!cand) break;
        const bool gained = cand->origin == kNonLocated;
        if (!gained) state.remove_node(cand->origin, cand->node);
        state.add_node(*target, cand->node);
        ctx.on_applied(state,
                       {CorrectionKind::Cutoff, {{cand->node, cand->origin, *target}}},
                       gained);
        changed = true;
    }
    return changed;
}

namespace {

CorrectionSummary summarize(const SolverState& state, const CorrectionContext& ctx,
                            Weight before) {
    CorrectionSummary s;
    s.covered_before = before;
    s.covered_after = state.covered_demand();
    s.non_located_applied = ctx.applied(CorrectionKind::NonLocated);
    s.switch_applied = ctx.applied(CorrectionKind::Switch);
    s.cutoff_applied = ctx.applied(CorrectionKind::Cutoff);
    s.total_applied = ctx.total_applied();
    s.cycles_detected = ctx.cycles_detected();
    s.stopped_by_stagnation = ctx.stopped();
    return s;
}

void non_located_phase(SolverState& state, CorrectionContext& ctx) {
    while (!ctx.stopped()) {
        if (!correction_non_located(state, ctx)) break;
        correction_switch(state, ctx);
    }
}

}  // namespace

CorrectionSummary run_combined(SolverState& state, const CorrectionLimits& limits,
                               bool validate_each_step) {
    CorrectionContext ctx(limits, state.instance(), validate_each_step);
    const Weight before = state.covered_demand();

    bool outer_changed = true;
    while (outer_changed && !ctx.stopped()) {
        const auto applied_before_pass = ctx.total_applied();
        non_located_phase(state, ctx);
        while (!ctx.stopped()) {
            if (!correction_cutoff(state, ctx)) break;
        }
        outer_changed = ctx.total_applied() != applied_before_pass;
    }
    return summarize(state, ctx, before);
}

CorrectionSummary run_non_located(SolverState& state, const CorrectionLimits& limits,
                                  bool validate_each_step) {
    CorrectionContext ctx(limits, state.instance(), validate_each_step);
    const Weight before = state.covered_demand();
    non_located_phase(state, ctx);
    return summarize(state, ctx, before);
}

}  // namespace mpgsd
