#pragma once

// Deterministic greedy constructive search with over-assignment repair.
//
// Coverage layer: repeatedly pick the most under-covered position, assign
// the nurse giving the greatest cost drop, repair over-assignment, and keep
// the cycle only if the objective went down. When no single nurse can fill
// a position, a bounded repair chain (assign, remove the conflicting
// assignment, refill, ...) is searched instead.
//
// Sweep layer: every assigned cell is tried as the start of a repair chain;
// any chain that lowers the objective without leaving a hard defect open is
// applied. Layers alternate until neither changes the schedule.

#include <chrono>
#include <compare>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "roster_forge/cost.hpp"
#include "roster_forge/model.hpp"

namespace roster {

enum class Selection { greatest_drop, paper_3b };

inline std::string_view selection_name(Selection s) {
  return s == Selection::greatest_drop ? "greatest-drop" : "paper-3b";
}

struct SolverConfig {
  Selection selection = Selection::greatest_drop;
  std::optional<long> max_iterations;  // default 10 * N * S * D
  int repair_depth = 6;                // longest repair chain in the coverage layer
  int sweep_depth = 4;                 // longest chain in the sweep layer
  long chain_node_budget = 200000;     // nodes per chain search
  bool sweep = true;
};

inline long default_max_iterations(const Instance& inst) {
  return 10L * inst.num_nurses() * inst.num_shifts() * inst.horizon_days;
}

struct Position {
  int shift = 0;
  int day = 0;
  int tier = 0;

  auto operator<=>(const Position&) const = default;
};

struct OpenPosition {
  Position position;
  int shortfall = 0;
};

// ---------------------------------------------------------------------------
// Trace

struct ImbalancePicked {
  Position position;
  int shortfall = 0;
};

/// `delta` is the objective change of the whole accepted cycle the
/// assignment belongs to (assignment plus its repairs), always negative.
struct Assigned {
  int nurse = 0;
  Position position;
  Money delta = 0;
};

struct RemovedOverAssigned {
  int nurse = 0;
  Position position;
  std::string reason;
};

struct Terminated {
  std::string reason;
};

using TraceEvent = std::variant<ImbalancePicked, Assigned, RemovedOverAssigned, Terminated>;

struct SolveTrace {
  std::vector<TraceEvent> events;
};

/// Applies the trace's assignments and removals, in order, to an empty
/// schedule.
inline Schedule replay(const SolveTrace& trace, std::shared_ptr<const Instance> inst) {
  Schedule x(std::move(inst));
  for (const auto& ev : trace.events) {
    if (const auto* a = std::get_if<Assigned>(&ev)) x.set(a->nurse, a->position.shift, a->position.day, true);
    if (const auto* r = std::get_if<RemovedOverAssigned>(&ev))
      x.set(r->nurse, r->position.shift, r->position.day, false);
  }
  return x;
}

struct SolveResult {
  Schedule schedule;
  CostBreakdown breakdown;
  SolveTrace trace;
  bool feasible = false;
  bool converged = true;
  long iterations = 0;
  std::chrono::nanoseconds wall_time{0};
};

// ---------------------------------------------------------------------------
// Imbalance search

/// Positions with a shortfall, most imbalanced first; ties in (day, shift,
/// tier) order.
inline std::vector<OpenPosition> open_positions(const Schedule& x) {
  std::vector<OpenPosition> out;
  if (!x.instance().enabled(Family::C8)) return out;
  for (int d = 0; d < x.days(); ++d)
    for (int s = 0; s < x.shifts(); ++s) {
      auto shortfall = tier_shortfalls(x, s, d);
      for (int t = 0; t < static_cast<int>(shortfall.size()); ++t)
        if (shortfall[static_cast<std::size_t>(t)] > 0) out.push_back({{s, d, t}, shortfall[static_cast<std::size_t>(t)]});
    }
  std::stable_sort(out.begin(), out.end(),
                   [](const OpenPosition& a, const OpenPosition& b) { return a.shortfall > b.shortfall; });
  return out;
}

inline std::optional<Position> find_most_imbalanced(const Schedule& x) {
  auto open = open_positions(x);
  if (open.empty()) return std::nullopt;
  return open.front().position;
}

// ---------------------------------------------------------------------------
// Nurse selection

namespace detail {

inline bool tier_fits(const Instance& inst, int nurse_tier, int position_tier) {
  return inst.enabled(Family::C9) ? nurse_tier >= position_tier : nurse_tier == position_tier;
}

// Hard rules an assignment may never break, whatever repair follows.
inline bool hard_admissible(const Schedule& x, int n, int s, int d) {
  const auto& inst = x.instance();
  if (inst.is_hard(Family::C5) && inst.nurse(n).on_leave(d)) return false;
  auto night = inst.night_shift();
  auto morning = inst.morning_shift();
  if (inst.is_hard(Family::C6) && night && morning) {
    if (s == *morning && d > 0 && x(n, *night, d - 1)) return false;
    if (s == *night && d + 1 < x.days() && x(n, *morning, d + 1)) return false;
  }
  return true;
}

inline bool quota_left(const Schedule& x, int n, int s) {
  const auto& inst = x.instance();
  if (!inst.enabled(Family::C10)) return true;
  const auto& quota = inst.nurse(n).required_shifts[static_cast<std::size_t>(s)];
  if (quota) return x.shift_count(n, s) < *quota;
  if (inst.rules.max_shift_type) return x.shift_count(n, s) < *inst.rules.max_shift_type;
  return true;
}

}  // namespace detail

/// Whether nurse `n` may be placed on `pos` directly (no repair needed for
/// tier, leave, same-day, night-morning, or quota).
inline bool eligible(const Schedule& x, int n, const Position& pos) {
  const auto& inst = x.instance();
  if (!detail::tier_fits(inst, inst.nurse(n).skill_tier, pos.tier)) return false;
  if (x(n, pos.shift, pos.day)) return false;
  if (!detail::hard_admissible(x, n, pos.shift, pos.day)) return false;
  if (inst.is_hard(Family::C1) && x.day_load(n, pos.day) > 0) return false;
  return detail::quota_left(x, n, pos.shift);
}

/// Nurse to place on `pos`, or none when no eligible nurse lowers the
/// objective. greatest_drop takes the most negative delta; paper_3b takes
/// the highest unit cost among improving nurses. Ties go to the lowest id.
inline std::optional<int> select_nurse(const Schedule& x, const Position& pos,
                                       Selection selection = Selection::greatest_drop,
                                       const std::function<bool(int)>& excluded = {}) {
  std::optional<int> best;
  Money best_delta = 0;
  for (int n = 0; n < x.nurses(); ++n) {
    if (excluded && excluded(n)) continue;
    if (!eligible(x, n, pos)) continue;
    Money delta = delta_evaluate(x, n, pos.shift, pos.day, true);
    if (delta >= 0) continue;
    bool better = false;
    if (!best) {
      better = true;
    } else if (selection == Selection::greatest_drop) {
      better = delta < best_delta;
    } else {
      better = x.instance().nurse(n).unit_cost > x.instance().nurse(*best).unit_cost;
    }
    if (better) {
      best = n;
      best_delta = delta;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Over-assignment repair

struct Removal {
  int nurse = 0;
  Position position;
  std::string reason;
  Money delta = 0;  // objective change of this removal alone
};

namespace detail {

inline Removal remove_cell(Schedule& x, int n, int s, int d, std::string reason) {
  Money delta = delta_evaluate(x, n, s, d, false);
  x.set(n, s, d, false);
  return {n, {s, d, x.instance().nurse(n).skill_tier}, std::move(reason), delta};
}

// Among the nurse's assignments accepted by `pick`, the one whose removal
// lowers the objective most; ties to the earliest (day, shift).
template <typename Pick>
std::optional<std::pair<int, int>> cheapest_removal(const Schedule& x, int n, Pick pick) {
  std::optional<std::pair<int, int>> best;
  Money best_delta = 0;
  for (int d = 0; d < x.days(); ++d)
    for (int s = 0; s < x.shifts(); ++s) {
      if (!x(n, s, d) || !pick(s, d)) continue;
      Money delta = delta_evaluate(x, n, s, d, false);
      if (!best || delta < best_delta) {
        best = {s, d};
        best_delta = delta;
      }
    }
  return best;
}

}  // namespace detail

/// Called right after `nurse` was placed on `pos`. First undoes the
/// nurse's earlier assignments that now break a hard per-nurse cap
/// (same-day, total work days, shift quota), then, if the shift is
/// over-covered, unassigns its cheapest nurse. Returns what was removed.
inline std::vector<Removal> repair_over_assignment(Schedule& x, int nurse, const Position& pos) {
  const auto& inst = x.instance();
  std::vector<Removal> removed;
  const int s0 = pos.shift;
  const int d0 = pos.day;

  if (inst.is_hard(Family::C1))
    for (int s = 0; s < x.shifts(); ++s)
      if (s != s0 && x(nurse, s, d0)) removed.push_back(detail::remove_cell(x, nurse, s, d0, "same-day"));

  if (inst.is_hard(Family::C2))
    while (x.total_assignments(nurse) > inst.rules.max_work_days) {
      auto cell = detail::cheapest_removal(x, nurse, [&](int s, int d) { return !(s == s0 && d == d0); });
      if (!cell) break;
      removed.push_back(detail::remove_cell(x, nurse, cell->first, cell->second, "work-day cap"));
    }

  if (inst.is_hard(Family::C10)) {
    const auto& quota = inst.nurse(nurse).required_shifts[static_cast<std::size_t>(s0)];
    auto cap = quota ? quota : inst.rules.max_shift_type;
    while (cap && x.shift_count(nurse, s0) > *cap) {
      auto cell = detail::cheapest_removal(x, nurse, [&](int s, int d) { return s == s0 && d != d0; });
      if (!cell) break;
      removed.push_back(detail::remove_cell(x, nurse, cell->first, cell->second, "quota"));
    }
  }

  if (inst.enabled(Family::C7))
    while (x.pooled_coverage(s0, d0) > inst.demand.pooled(s0, d0)) {
      std::optional<int> cheapest;
      for (int n = 0; n < x.nurses(); ++n)
        if (x(n, s0, d0) && (!cheapest || inst.nurse(n).unit_cost < inst.nurse(*cheapest).unit_cost)) cheapest = n;
      if (!cheapest) break;
      removed.push_back(detail::remove_cell(x, *cheapest, s0, d0, "over-coverage"));
    }
  return removed;
}

// ---------------------------------------------------------------------------
// Repair chains

struct ChainMove {
  bool assign = true;
  int nurse = 0;
  Position position;
  std::string reason;  // why a removal happened
};

struct Chain {
  std::vector<ChainMove> moves;
  Money delta = 0;
};

namespace detail {

enum class DefectKind { cell_short, cell_excess, nurse_deficit, nurse_excess, nurse_day, nurse_total };

struct Defect {
  DefectKind kind;
  int nurse = -1;
  int shift = -1;
  int day = -1;
  int tier = 0;
};

class ChainSearch {
public:
  ChainSearch(Schedule& x, long node_budget) : x_(x), inst_(x.instance()), budget_(node_budget) {}

  /// Chain that starts by filling `pos`.
  std::optional<Chain> from_position(const Position& pos, int max_depth) {
    Defect seed{DefectKind::cell_short, -1, pos.shift, pos.day, pos.tier};
    for (int depth = 1; depth <= max_depth; ++depth) {
      reset();
      std::vector<Defect> pending{seed};
      if (dfs(pending, depth)) return result_;
      if (nodes_ >= budget_) break;
    }
    return std::nullopt;
  }

  /// Chain that starts by giving nurse `n` one more shift `s` toward its
  /// quota.
  std::optional<Chain> from_deficit(int n, int s, int max_depth) {
    Defect seed{DefectKind::nurse_deficit, n, s, -1};
    for (int depth = 1; depth <= max_depth; ++depth) {
      reset();
      if (dfs({seed}, depth)) return result_;
      if (nodes_ >= budget_) break;
    }
    return std::nullopt;
  }

  /// Chain that starts by flipping the cell (n, s, d).
  std::optional<Chain> from_flip(int n, int s, int d, int max_depth) {
    const bool assign = !x_(n, s, d);
    for (int depth = 1; depth <= max_depth; ++depth) {
      reset();
      std::vector<Defect> pending;
      apply(assign, n, s, d, inst_.nurse(n).skill_tier, assign ? "" : "sweep", pending);
      bool found = dfs(pending, depth - 1);
      undo();
      if (found) return result_;
      if (nodes_ >= budget_) break;
    }
    return std::nullopt;
  }

private:
  struct Step {
    ChainMove move;
    Money delta;
  };

  void reset() {
    path_.clear();
    touched_.assign(x_.cells(), 0);
    running_ = 0;
    nodes_ = 0;
  }

  std::size_t cell(int n, int s, int d) const {
    return (static_cast<std::size_t>(n) * x_.shifts() + s) * x_.days() + d;
  }

  bool still_open(const Defect& def) const {
    switch (def.kind) {
      case DefectKind::cell_short: {
        auto shortfall = tier_shortfalls(x_, def.shift, def.day);
        for (int v : shortfall)
          if (v > 0) return true;
        return false;
      }
      case DefectKind::cell_excess:
        return x_.pooled_coverage(def.shift, def.day) > inst_.demand.pooled(def.shift, def.day);
      case DefectKind::nurse_deficit: {
        const auto& quota = inst_.nurse(def.nurse).required_shifts[static_cast<std::size_t>(def.shift)];
        return quota && x_.shift_count(def.nurse, def.shift) < *quota;
      }
      case DefectKind::nurse_excess: {
        const auto& quota = inst_.nurse(def.nurse).required_shifts[static_cast<std::size_t>(def.shift)];
        auto cap = quota ? quota : inst_.rules.max_shift_type;
        return cap && x_.shift_count(def.nurse, def.shift) > *cap;
      }
      case DefectKind::nurse_day:
        return x_.day_load(def.nurse, def.day) > 1;
      case DefectKind::nurse_total:
        return x_.total_assignments(def.nurse) > inst_.rules.max_work_days;
    }
    return false;
  }

  bool hard(const Defect& def) const {
    switch (def.kind) {
      case DefectKind::cell_short: return inst_.is_hard(Family::C8);
      case DefectKind::cell_excess: return inst_.is_hard(Family::C7);
      case DefectKind::nurse_deficit:
      case DefectKind::nurse_excess: return inst_.is_hard(Family::C10);
      case DefectKind::nurse_day: return inst_.is_hard(Family::C1);
      case DefectKind::nurse_total: return inst_.is_hard(Family::C2);
    }
    return false;
  }

  void apply(bool assign, int n, int s, int d, int tier, std::string reason, std::vector<Defect>& pending) {
    Money delta = delta_evaluate(x_, n, s, d, assign);
    x_.set(n, s, d, assign);
    touched_[cell(n, s, d)] = 1;
    running_ += delta;
    path_.push_back({{assign, n, {s, d, tier}, std::move(reason)}, delta});

    if (assign) {
      if (inst_.is_hard(Family::C2) && x_.total_assignments(n) > inst_.rules.max_work_days)
        pending.push_back({DefectKind::nurse_total, n, -1, -1});
      if (inst_.enabled(Family::C1) && x_.day_load(n, d) > 1) pending.push_back({DefectKind::nurse_day, n, -1, d});
      if (inst_.enabled(Family::C10) && still_open({DefectKind::nurse_excess, n, s, -1}))
        pending.push_back({DefectKind::nurse_excess, n, s, -1});
      if (inst_.enabled(Family::C7) && still_open({DefectKind::cell_excess, -1, s, d}))
        pending.push_back({DefectKind::cell_excess, -1, s, d});
    } else {
      if (inst_.enabled(Family::C10) && still_open({DefectKind::nurse_deficit, n, s, -1}))
        pending.push_back({DefectKind::nurse_deficit, n, s, -1});
      if (inst_.enabled(Family::C8)) {
        auto shortfall = tier_shortfalls(x_, s, d);
        for (int t = 0; t < static_cast<int>(shortfall.size()); ++t)
          if (shortfall[static_cast<std::size_t>(t)] > 0) {
            pending.push_back({DefectKind::cell_short, -1, s, d, t});
            break;
          }
      }
    }
  }

  void undo() {
    const auto& step = path_.back();
    const auto& m = step.move;
    x_.set(m.nurse, m.position.shift, m.position.day, !m.assign);
    touched_[cell(m.nurse, m.position.shift, m.position.day)] = 0;
    running_ -= step.delta;
    path_.pop_back();
  }

  bool acceptable(const std::vector<Defect>& pending) const {
    if (running_ >= 0) return false;
    for (const auto& def : pending)
      if (hard(def) && still_open(def)) return false;
    return true;
  }

  struct Candidate {
    Money delta;
    int nurse, shift, day;
  };

  std::vector<Candidate> candidates(const Defect& def) const {
    std::vector<Candidate> out;
    auto consider = [&](bool assign, int n, int s, int d) {
      if (touched_[cell(n, s, d)] || x_(n, s, d) == assign) return;
      if (assign && !hard_admissible(x_, n, s, d)) return;
      out.push_back({delta_evaluate(x_, n, s, d, assign), n, s, d});
    };
    switch (def.kind) {
      case DefectKind::cell_short:
        for (int n = 0; n < x_.nurses(); ++n)
          if (tier_fits(inst_, inst_.nurse(n).skill_tier, def.tier)) consider(true, n, def.shift, def.day);
        break;
      case DefectKind::nurse_deficit:
        for (int d = 0; d < x_.days(); ++d) consider(true, def.nurse, def.shift, d);
        break;
      case DefectKind::cell_excess:
        for (int n = 0; n < x_.nurses(); ++n) consider(false, n, def.shift, def.day);
        break;
      case DefectKind::nurse_excess:
        for (int d = 0; d < x_.days(); ++d) consider(false, def.nurse, def.shift, d);
        break;
      case DefectKind::nurse_day:
        for (int s = 0; s < x_.shifts(); ++s) consider(false, def.nurse, s, def.day);
        break;
      case DefectKind::nurse_total:
        for (int d = 0; d < x_.days(); ++d)
          for (int s = 0; s < x_.shifts(); ++s) consider(false, def.nurse, s, d);
        break;
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.delta < b.delta; });
    return out;
  }

  static const char* removal_reason(DefectKind kind) {
    switch (kind) {
      case DefectKind::cell_excess: return "over-coverage";
      case DefectKind::nurse_excess: return "quota";
      case DefectKind::nurse_day: return "same-day";
      case DefectKind::nurse_total: return "work-day cap";
      default: return "";
    }
  }

  bool dfs(std::vector<Defect> pending, int remaining) {
    if (!path_.empty() && acceptable(pending)) {
      result_ = Chain{};
      for (const auto& step : path_) result_.moves.push_back(step.move);
      result_.delta = running_;
      return true;
    }
    while (!pending.empty() && !still_open(pending.back())) pending.pop_back();
    if (remaining == 0 || pending.empty() || nodes_ >= budget_) return false;

    const Defect def = pending.back();
    pending.pop_back();
    const bool assign = def.kind == DefectKind::cell_short || def.kind == DefectKind::nurse_deficit;
    for (const auto& c : candidates(def)) {
      if (++nodes_ > budget_) return false;
      auto next = pending;
      int tier = def.kind == DefectKind::cell_short ? def.tier : inst_.nurse(c.nurse).skill_tier;
      apply(assign, c.nurse, c.shift, c.day, tier, assign ? "" : removal_reason(def.kind), next);
      bool found = dfs(std::move(next), remaining - 1);
      undo();
      if (found) return true;
    }
    return false;
  }

  Schedule& x_;
  const Instance& inst_;
  long budget_;
  long nodes_ = 0;
  std::vector<Step> path_;
  std::vector<char> touched_;
  Money running_ = 0;
  Chain result_;
};

}  // namespace detail

/// Shortest improving repair chain that starts by filling `pos`, or none.
inline std::optional<Chain> find_repair_chain(Schedule& x, const Position& pos, int max_depth,
                                              long node_budget = 200000) {
  return detail::ChainSearch(x, node_budget).from_position(pos, max_depth);
}

// ---------------------------------------------------------------------------
// Main loop

namespace detail {

class Solver {
public:
  Solver(std::shared_ptr<const Instance> inst, const SolverConfig& config)
      : config_(config), x_(std::move(inst)) {
    cap_ = config.max_iterations.value_or(default_max_iterations(x_.instance()));
    total_ = evaluate(x_).total;
  }

  SolveResult run() {
    auto started = std::chrono::steady_clock::now();
    std::string reason;
    while (true) {
      if (!coverage_layer()) {
        reason = "iteration cap reached";
        break;
      }
      if (!config_.sweep) {
        reason = "no open position can be filled";
        break;
      }
      auto swept = sweep_layer();
      if (!swept) {
        reason = "iteration cap reached";
        break;
      }
      if (!*swept) {
        reason = "no assignment lowers the objective";
        break;
      }
    }
    trace_.events.push_back(Terminated{reason});
    auto elapsed = std::chrono::steady_clock::now() - started;

    SolveResult result{x_, evaluate(x_), std::move(trace_), false, converged_, iterations_,
                       std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)};
    result.feasible = result.breakdown.hard_penalty == 0;
    return result;
  }

private:
  bool tick() {
    if (iterations_ >= cap_) {
      converged_ = false;
      return false;
    }
    ++iterations_;
    return true;
  }

  // Returns false when the iteration cap stops the layer.
  bool coverage_layer() {
    std::set<Position> blocked;
    std::set<std::pair<Position, int>> tabu;
    while (true) {
      std::optional<OpenPosition> target;
      for (const auto& open : open_positions(x_))
        if (!blocked.count(open.position)) {
          target = open;
          break;
        }
      if (!target) return true;
      if (!tick()) return false;
      const Position pos = target->position;
      trace_.events.push_back(ImbalancePicked{pos, target->shortfall});

      auto nurse = select_nurse(x_, pos, config_.selection, [&](int n) { return tabu.count({pos, n}) != 0; });
      if (nurse) {
        Schedule trial = x_;
        Money cycle = delta_evaluate(trial, *nurse, pos.shift, pos.day, true);
        trial.set(*nurse, pos.shift, pos.day, true);
        auto removals = repair_over_assignment(trial, *nurse, pos);
        for (const auto& r : removals) cycle += r.delta;
        if (cycle < 0) {
          x_ = std::move(trial);
          total_ += cycle;
          trace_.events.push_back(Assigned{*nurse, pos, cycle});
          for (auto& r : removals) trace_.events.push_back(RemovedOverAssigned{r.nurse, r.position, r.reason});
          blocked.clear();
        } else {
          tabu.insert({pos, *nurse});
        }
        continue;
      }

      auto chain = find_repair_chain(x_, pos, config_.repair_depth, config_.chain_node_budget);
      if (chain) {
        commit(*chain);
        blocked.clear();
      } else {
        blocked.insert(pos);
      }
    }
  }

  // nullopt on iteration cap, otherwise whether anything improved.
  std::optional<bool> sweep_layer() {
    bool improved = false;
    while (true) {
      if (!tick()) return std::nullopt;
      bool found = false;
      // Quotas owed on shifts without open demand are never reached by
      // the coverage layer.
      if (x_.instance().enabled(Family::C10))
        for (int n = 0; n < x_.nurses() && !found; ++n)
          for (int s = 0; s < x_.shifts() && !found; ++s) {
            const auto& quota = x_.instance().nurse(n).required_shifts[static_cast<std::size_t>(s)];
            if (!quota || x_.shift_count(n, s) >= *quota) continue;
            auto chain = detail::ChainSearch(x_, config_.chain_node_budget).from_deficit(n, s, config_.sweep_depth);
            if (chain) {
              commit(*chain);
              found = true;
            }
          }
      // Removals of every assignment, and additions where a preference
      // could pay for them.
      for (int d = 0; d < x_.days() && !found; ++d)
        for (int s = 0; s < x_.shifts() && !found; ++s)
          for (int n = 0; n < x_.nurses() && !found; ++n) {
            if (!x_(n, s, d) && x_.instance().nurse(n).preference_at(s, d, x_.days()) == 0) continue;
            if (!x_(n, s, d) && !detail::hard_admissible(x_, n, s, d)) continue;
            auto chain = detail::ChainSearch(x_, config_.chain_node_budget).from_flip(n, s, d, config_.sweep_depth);
            if (chain) {
              commit(*chain);
              found = true;
            }
          }
      if (!found) return improved;
      improved = true;
    }
  }

  void commit(const Chain& chain) {
    for (const auto& m : chain.moves) {
      x_.set(m.nurse, m.position.shift, m.position.day, m.assign);
      if (m.assign)
        trace_.events.push_back(Assigned{m.nurse, m.position, chain.delta});
      else
        trace_.events.push_back(RemovedOverAssigned{m.nurse, m.position, m.reason});
    }
    total_ += chain.delta;
  }

  SolverConfig config_;
  Schedule x_;
  SolveTrace trace_;
  Money total_ = 0;
  long cap_ = 0;
  long iterations_ = 0;
  bool converged_ = true;
};

}  // namespace detail

/// Runs the layered search. Throws ValidationError for invalid instances.
/// A result with converged == false hit the iteration cap and carries the
/// schedule reached so far.
inline SolveResult solve(std::shared_ptr<const Instance> inst, const SolverConfig& config = {}) {
  require_structurally_valid(*inst);
  return detail::Solver(std::move(inst), config).run();
}

inline SolveResult solve(const Instance& inst, const SolverConfig& config = {}) {
  return solve(std::make_shared<const Instance>(inst), config);
}

}  // namespace roster
