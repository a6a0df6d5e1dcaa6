#ifndef MPGSD_CORRECTIONS_HPP
#define MPGSD_CORRECTIONS_HPP

#include <deque>
#include <optional>

#include "mpgsd/solver_state.hpp"

namespace mpgsd {

enum class CorrectionKind { NonLocated, Switch, Cutoff };

std::string to_string(CorrectionKind kind);

struct CorrectionMove {
    NodeId node;
    std::int32_t from;  // subgraph index or kNonLocated
    std::int32_t to;

    bool operator==(const CorrectionMove&) const = default;
};

/// One applied correction: a direct addition, an exchange (two moves) or a
/// single cutoff move.
struct CorrectionRecord {
    CorrectionKind kind;
    std::vector<CorrectionMove> moved;
};

struct CorrectionLimits {
    std::int32_t max_cycle_length = 6;
    std::int64_t stagnation_window = 50;
};

/// Smallest L <= max_len such that after the last L corrections every
/// touched node is back in the subgraph it occupied before that window;
/// nullopt when no such window exists.
std::optional<std::int32_t> detect_cycle(const std::deque<CorrectionRecord>& history,
                                         std::int32_t max_len);

/// Shared bookkeeping for a run of corrections: the rolling history used
/// for cycle detection, the one-shot barred set (the cycle-breaking rule:
/// the correction following a detected cycle may not repeat the cycle's
/// first correction), stagnation accounting and a hard application cap.
class CorrectionContext {
public:
    CorrectionContext(const CorrectionLimits& limits, const Instance& instance,
                      bool validate_each_step = false);

    const CorrectionLimits& limits() const { return limits_; }
    bool stopped() const { return stopped_; }
    bool stopped_by_stagnation() const { return stopped_; }
    bool barred(NodeId v) const { return barred_.count(v) != 0; }

    std::int64_t total_applied() const { return applied_; }
    std::int64_t applied(CorrectionKind kind) const {
        return applied_by_kind_[static_cast<size_t>(kind)];
    }
    std::int64_t cycles_detected() const { return cycles_detected_; }
    const std::deque<CorrectionRecord>& history() const { return history_; }

    /// Registers an applied correction: consumes the barred set, runs cycle
    /// detection (possibly arming a new bar), updates stagnation counters
    /// and enforces the hard cap.
    void on_applied(const SolverState& state, CorrectionRecord record, bool gained);

private:
    CorrectionLimits limits_;
    std::deque<CorrectionRecord> history_;
    std::set<NodeId> barred_;
    std::int64_t applied_ = 0;
    std::int64_t applied_by_kind_[3] = {0, 0, 0};
    std::int64_t since_gain_ = 0;
    std::int64_t cycles_detected_ = 0;
    std::int64_t hard_cap_;
    bool stopped_ = false;
    bool validate_ = false;
};

/// Ex(u, S_i): demand leaves v of subgraph i (ch(v)=0) whose replacement by
/// the non-located node u strictly increases located demand while keeping
/// the supply balance nonnegative: |sup(v)| < |sup(u)| <= |sup(v)| +
/// available_supply(i). Ascending NodeId; connectivity is checked at
/// application time, not here.
std::vector<NodeId> exchange_set(const SolverState& state, NodeId u, std::int32_t i);

/// One non-located correction: repeated passes over all non-located demand
/// nodes, adding each into an adjacent subgraph directly when it fits, or
/// exchanging it against the smallest-magnitude member of its exchange set.
/// Passes repeat until one changes nothing. Returns whether anything was
/// applied.
bool correction_non_located(SolverState& state, CorrectionContext& ctx);

/// The switch variant: only equal-demand exchanges, covered demand
/// unchanged. Cycle detection and the stagnation window bound the
/// oscillations this intentionally allows.
bool correction_switch(SolverState& state, CorrectionContext& ctx);

/// Cutoff correction: picks the subgraph with maximal available supply
/// among those with a nonempty expansion set (adjacent demand leaves that
/// fit), then repeatedly pulls in the highest-demand candidate, preferring
/// non-located candidates over located ones, until the set empties.
bool correction_cutoff(SolverState& state, CorrectionContext& ctx);

struct CorrectionSummary {
    Weight covered_before = 0;
    Weight covered_after = 0;
    std::int64_t non_located_applied = 0;
    std::int64_t switch_applied = 0;
    std::int64_t cutoff_applied = 0;
    std::int64_t total_applied = 0;
    std::int64_t cycles_detected = 0;
    bool stopped_by_stagnation = false;
};

/// Full correction driver: exhaust non-located corrections (running a
/// switch pass after every non-located pass that changed something), then
/// exhaust cutoff corrections, and repeat both phases until an entire
/// outer pass changes nothing or the stagnation window closes.
CorrectionSummary run_combined(SolverState& state, const CorrectionLimits& limits,
                               bool validate_each_step = false);

/// Non-located(+switch) phase only.
CorrectionSummary run_non_located(SolverState& state, const CorrectionLimits& limits,
                                  bool validate_each_step = false);

}  // namespace mpgsd

#endif
