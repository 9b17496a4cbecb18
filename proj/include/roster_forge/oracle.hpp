#pragma once

// Exact solver for tiny instances, used to measure the heuristic's gap.
//
// Cells are decided in tensor order (nurse, shift, day), 0 before 1, so the
// first optimum reached is the lexicographically smallest tensor. A subtree
// is cut when its lower bound cannot beat the incumbent.

#include <algorithm>
#include <optional>

#include "roster_forge/cost.hpp"
#include "roster_forge/model.hpp"
#include "roster_forge/solver.hpp"

namespace roster {

class OracleRefusal : public Error {
public:
  using Error::Error;
};

struct OracleLimits {
  std::size_t max_cells = 24;
  std::optional<long> node_limit;  // stop early; result is then not proven optimal
};

struct OracleResult {
  Money optimal_cost = 0;
  Schedule optimal_schedule;
  long nodes_explored = 0;
  bool proven_optimal = false;
};

namespace detail {

class BranchAndBound {
public:
  BranchAndBound(std::shared_ptr<const Instance> inst, const OracleLimits& limits)
      : inst_(*inst), limits_(limits), x_(inst), best_(inst) {}

  OracleResult run() {
    cells_ = x_.cells();
    current_ = evaluate(x_).total;  // all-zero tensor
    dfs(0);
    return {best_cost_.value_or(current_), best_, nodes_, !aborted_};
  }

private:
  std::tuple<int, int, int> unpack(std::size_t idx) const {
    const int D = x_.days(), S = x_.shifts();
    int d = static_cast<int>(idx % static_cast<std::size_t>(D));
    int s = static_cast<int>((idx / static_cast<std::size_t>(D)) % static_cast<std::size_t>(S));
    int n = static_cast<int>(idx / (static_cast<std::size_t>(D) * static_cast<std::size_t>(S)));
    return {n, s, d};
  }

  // Cells [next, cells_) are undecided. Penalties of C1-C3 and C5-C7 never
  // drop when a 1 is added, so their value on the current tensor (undecided
  // cells at 0) already bounds every completion. C4, C8 and C10 can drop and
  // are bounded separately.
  Money lower_bound(std::size_t next) const {
    const int N = x_.nurses(), S = x_.shifts(), D = x_.days();
    auto undecided = [&](int n, int s, int d) {
      return (static_cast<std::size_t>(n) * S + s) * D + d >= next;
    };

    Money bound = current_;
    // Remove the non-monotone terms included in current_ ...
    for (const auto& v : check_night_rest(x_)) bound -= v.penalty;
    for (const auto& v : check_coverage(x_))
      if (v.family == Family::C8) bound -= v.penalty;
    for (const auto& v : check_required_shifts(x_)) bound -= v.penalty;

    // ... and add their admissible bounds back.
    if (inst_.enabled(Family::C4)) {
      const int first_open_nurse = static_cast<int>(next / (static_cast<std::size_t>(S) * D));
      for (const auto& v : check_night_rest(x_))
        if (*v.nurse < first_open_nurse) bound += v.penalty;
    }
    if (inst_.enabled(Family::C8)) {
      Schedule maximal = x_;
      for (std::size_t idx = next; idx < cells_; ++idx) {
        auto [n, s, d] = unpack(idx);
        maximal.set(n, s, d, true);
      }
      for (const auto& v : check_coverage(maximal))
        if (v.family == Family::C8) bound += v.penalty;
    }
    if (inst_.enabled(Family::C10)) {
      for (int n = 0; n < N; ++n)
        for (int s = 0; s < S; ++s) {
          int ones = x_.shift_count(n, s);
          int open = 0;
          for (int d = 0; d < D; ++d) open += undecided(n, s, d);
          const auto& quota = inst_.nurse(n).required_shifts[static_cast<std::size_t>(s)];
          int magnitude = 0;
          if (quota)
            magnitude = *quota < ones ? ones - *quota : std::max(0, *quota - (ones + open));
          else if (inst_.rules.max_shift_type)
            magnitude = std::max(0, ones - *inst_.rules.max_shift_type);
          bound += inst_.weight(Family::C10) * magnitude;
        }
    }
    // Undecided cells may still lower the base cost.
    for (std::size_t idx = next; idx < cells_; ++idx) {
      auto [n, s, d] = unpack(idx);
      const auto& nurse = inst_.nurse(n);
      bound += std::min<Money>(0, nurse.unit_cost - nurse.preference_at(s, d, D));
    }
    return bound;
  }

  void dfs(std::size_t next) {
    if (aborted_) return;
    ++nodes_;
    if (limits_.node_limit && nodes_ > *limits_.node_limit) {
      aborted_ = true;
      return;
    }
    if (next == cells_) {
      if (!best_cost_ || current_ < *best_cost_) {
        best_cost_ = current_;
        best_ = x_;
      }
      return;
    }
    if (best_cost_ && lower_bound(next) >= *best_cost_) return;

    dfs(next + 1);
    auto [n, s, d] = unpack(next);
    Money delta = delta_evaluate(x_, n, s, d, true);
    x_.set(n, s, d, true);
    current_ += delta;
    dfs(next + 1);
    x_.set(n, s, d, false);
    current_ -= delta;
  }

  const Instance& inst_;
  OracleLimits limits_;
  Schedule x_;
  Schedule best_;
  std::size_t cells_ = 0;
  Money current_ = 0;
  std::optional<Money> best_cost_;
  long nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

/// Minimum-total schedule by branch and bound. Throws OracleRefusal above
/// `limits.max_cells` cells.
inline OracleResult solve_exact(std::shared_ptr<const Instance> inst, const OracleLimits& limits = {}) {
  require_structurally_valid(*inst);
  const std::size_t cells = static_cast<std::size_t>(inst->num_nurses()) * inst->num_shifts() * inst->horizon_days;
  if (cells > limits.max_cells)
    throw OracleRefusal("instance has " + std::to_string(cells) + " cells; the exact solver is capped at " +
                        std::to_string(limits.max_cells));
  return detail::BranchAndBound(std::move(inst), limits).run();
}

/// Plain enumeration of every tensor, scoring each with a full evaluate.
/// Same tie-break as solve_exact; meant for cross-checking it.
inline OracleResult enumerate_exact(std::shared_ptr<const Instance> inst, std::size_t max_cells = 20) {
  require_structurally_valid(*inst);
  Schedule x(inst);
  const std::size_t cells = x.cells();
  if (cells > max_cells) throw OracleRefusal("enumeration capped at " + std::to_string(max_cells) + " cells");
  OracleResult result{0, x, 0, true};
  std::optional<Money> best;
  const std::uint64_t count = std::uint64_t{1} << cells;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    // The first cell is the most significant bit, so masks ascend in
    // lexicographic tensor order.
    for (std::size_t idx = 0; idx < cells; ++idx) {
      const bool bit = (mask >> (cells - 1 - idx)) & 1U;
      const int D = x.days(), S = x.shifts();
      x.set(static_cast<int>(idx / (static_cast<std::size_t>(D) * S)), static_cast<int>((idx / D) % S),
            static_cast<int>(idx % D), bit);
    }
    ++result.nodes_explored;
    Money total = evaluate(x).total;
    if (!best || total < *best) {
      best = total;
      result.optimal_schedule = x;
    }
  }
  result.optimal_cost = *best;
  return result;
}

struct GapReport {
  Money heuristic_cost = 0;
  Money optimal_cost = 0;
  double relative_gap = 0.0;
  bool heuristic_feasible = false;
  bool optimum_feasible = false;
};

/// Heuristic cost against the exact optimum:
/// gap = (heuristic - optimal) / max(1, optimal).
inline GapReport gap_report(std::shared_ptr<const Instance> inst, const SolverConfig& config = {},
                            const OracleLimits& limits = {}) {
  auto exact = solve_exact(inst, limits);
  auto heuristic = solve(inst, config);
  GapReport r;
  r.heuristic_cost = heuristic.breakdown.total;
  r.optimal_cost = exact.optimal_cost;
  r.relative_gap = static_cast<double>(r.heuristic_cost - r.optimal_cost) /
                   static_cast<double>(std::max<Money>(1, r.optimal_cost));
  r.heuristic_feasible = heuristic.feasible;
  r.optimum_feasible = evaluate(exact.optimal_schedule).hard_penalty == 0;
  return r;
}

}  // namespace roster
