#pragma once

// Penalized objective: total = base cost - preference reductions + penalties.
//
// Each check_* scans the whole schedule for one constraint family and lists
// its violations. delta_evaluate is written separately and only touches the
// terms a single flip can reach; tests hold the two routes against each other.

#include <map>
#include <optional>
#include <vector>

#include "roster_forge/model.hpp"

namespace roster {

struct Violation {
  Family family = Family::C1;
  std::optional<int> nurse;
  std::optional<int> shift;
  std::optional<int> day;
  std::optional<int> tier;
  int magnitude = 0;
  Money penalty = 0;

  bool operator==(const Violation&) const = default;
};

struct CostBreakdown {
  Money base_cost = 0;
  Money preference_reduction = 0;
  std::map<Family, Money> penalties;
  Money hard_penalty = 0;
  Money soft_penalty = 0;
  Money total = 0;

  Money penalty(Family f) const {
    auto it = penalties.find(f);
    return it == penalties.end() ? 0 : it->second;
  }

  bool operator==(const CostBreakdown&) const = default;
};

namespace detail {

inline Violation make_violation(const Instance& inst, Family f, int magnitude) {
  Violation v;
  v.family = f;
  v.magnitude = magnitude;
  v.penalty = inst.weight(f) * magnitude;
  return v;
}

}  // namespace detail

/// C1: one violation per (nurse, day) working more than one shift.
inline std::vector<Violation> check_one_shift_per_day(const Schedule& x) {
  const auto& inst = x.instance();
  std::vector<Violation> out;
  if (!inst.enabled(Family::C1)) return out;
  for (int n = 0; n < x.nurses(); ++n)
    for (int d = 0; d < x.days(); ++d) {
      int load = x.day_load(n, d);
      if (load <= 1) continue;
      auto v = detail::make_violation(inst, Family::C1, load - 1);
      v.nurse = n;
      v.day = d;
      out.push_back(v);
    }
  return out;
}

/// C2: nurses whose total assignments exceed y.
inline std::vector<Violation> check_max_work_days(const Schedule& x) {
  const auto& inst = x.instance();
  std::vector<Violation> out;
  if (!inst.enabled(Family::C2)) return out;
  for (int n = 0; n < x.nurses(); ++n) {
    int excess = x.total_assignments(n) - inst.rules.max_work_days;
    if (excess <= 0) continue;
    auto v = detail::make_violation(inst, Family::C2, excess);
    v.nurse = n;
    out.push_back(v);
  }
  return out;
}

/// C3: every window of z+1 consecutive days must hold a rest day. One
/// violation (magnitude 1) per fully worked window, located at its first day.
inline std::vector<Violation> check_consecutive_work(const Schedule& x) {
  const auto& inst = x.instance();
  std::vector<Violation> out;
  if (!inst.enabled(Family::C3)) return out;
  const int window = inst.rules.consecutive_work_limit + 1;
  for (int n = 0; n < x.nurses(); ++n)
    for (int start = 0; start + window <= x.days(); ++start) {
      bool all_worked = true;
      for (int d = start; d < start + window && all_worked; ++d) all_worked = x.day_load(n, d) > 0;
      if (!all_worked) continue;
      auto v = detail::make_violation(inst, Family::C3, 1);
      v.nurse = n;
      v.day = start;
      out.push_back(v);
    }
  return out;
}

/// C4: after a maximal run of at least i night shifts, the next h+1 days
/// must be free. Magnitude is the number of worked days inside that block.
inline std::vector<Violation> check_night_rest(const Schedule& x) {
  const auto& inst = x.instance();
  std::vector<Violation> out;
  auto night = inst.night_shift();
  if (!inst.enabled(Family::C4) || !night) return out;
  const int min_run = inst.rules.max_consecutive_nights;
  const int block = inst.rules.rest_after_nights + 1;
  for (int n = 0; n < x.nurses(); ++n) {
    int d = 0;
    while (d < x.days()) {
      if (!x(n, *night, d)) {
        ++d;
        continue;
      }
      int end = d;
      while (end + 1 < x.days() && x(n, *night, end + 1)) ++end;
      if (end - d + 1 >= min_run) {
        int worked = 0;
        for (int k = end + 1; k <= end + block && k < x.days(); ++k) worked += x.day_load(n, k) > 0;
        if (worked > 0) {
          auto v = detail::make_violation(inst, Family::C4, worked);
          v.nurse = n;
          v.shift = *night;
          v.day = end;
          out.push_back(v);
        }
      }
      d = end + 1;
    }
  }
  return out;
}

/// C5: assignments on a leave day; magnitude is the number of shifts worked.
inline std::vector<Violation> check_leave(const Schedule& x) {
  const auto& inst = x.instance();
  std::vector<Violation> out;
  if (!inst.enabled(Family::C5)) return out;
  for (int n = 0; n < x.nurses(); ++n)
    for (int d : inst.nurse(n).leave_days) {
      int load = x.day_load(n, d);
      if (load == 0) continue;
      auto v = detail::make_violation(inst, Family::C5, load);
      v.nurse = n;
      v.day = d;
      out.push_back(v);
    }
  return out;
}

/// C6: a night shift on day d followed by the morning shift on d+1.
inline std::vector<Violation> check_night_morning(const Schedule& x) {
  const auto& inst = x.instance();
  std::vector<Violation> out;
  auto night = inst.night_shift();
  auto morning = inst.morning_shift();
  if (!inst.enabled(Family::C6) || !night || !morning) return out;
  for (int n = 0; n < x.nurses(); ++n)
    for (int d = 0; d + 1 < x.days(); ++d) {
      if (!x(n, *night, d) || !x(n, *morning, d + 1)) continue;
      auto v = detail::make_violation(inst, Family::C6, 1);
      v.nurse = n;
      v.shift = *night;
      v.day = d;
      out.push_back(v);
    }
  return out;
}

/// Per-tier shortfall of one (shift, day) cell. With C9 enabled, surplus
/// at tier t+1 counts toward tier t, one level at a time from the top.
inline std::vector<int> tier_shortfalls(const Schedule& x, int s, int d) {
  const auto& inst = x.instance();
  const int tiers = inst.num_tiers();
  std::vector<int> supply(static_cast<std::size_t>(tiers), 0);
  for (int n = 0; n < x.nurses(); ++n)
    if (x(n, s, d)) ++supply[static_cast<std::size_t>(inst.nurse(n).skill_tier)];

  const bool cascade = inst.enabled(Family::C9);
  std::vector<int> shortfall(static_cast<std::size_t>(tiers), 0);
  int surplus = 0;
  for (int t = tiers - 1; t >= 0; --t) {
    int available = supply[static_cast<std::size_t>(t)] + (cascade ? surplus : 0);
    int demand = inst.demand.at(s, d, t);
    shortfall[static_cast<std::size_t>(t)] = std::max(0, demand - available);
    surplus = std::max(0, available - demand);
  }
  return shortfall;
}

/// C8 shortfall per (shift, day, tier) and C7 pooled over-coverage per
/// (shift, day).
inline std::vector<Violation> check_coverage(const Schedule& x) {
  const auto& inst = x.instance();
  std::vector<Violation> out;
  const bool shortfall_on = inst.enabled(Family::C8);
  const bool excess_on = inst.enabled(Family::C7);
  for (int d = 0; d < x.days(); ++d)
    for (int s = 0; s < x.shifts(); ++s) {
      if (shortfall_on) {
        auto shortfall = tier_shortfalls(x, s, d);
        for (int t = 0; t < static_cast<int>(shortfall.size()); ++t) {
          if (shortfall[static_cast<std::size_t>(t)] == 0) continue;
          auto v = detail::make_violation(inst, Family::C8, shortfall[static_cast<std::size_t>(t)]);
          v.shift = s;
          v.day = d;
          v.tier = t;
          out.push_back(v);
        }
      }
      if (excess_on) {
        int excess = x.pooled_coverage(s, d) - inst.demand.pooled(s, d);
        if (excess > 0) {
          auto v = detail::make_violation(inst, Family::C7, excess);
          v.shift = s;
          v.day = d;
          out.push_back(v);
        }
      }
    }
  return out;
}

/// C10: per (nurse, shift) count must equal E when a quota is set. Without
/// a quota the optional per-shift-type cap q bounds the count from above.
inline std::vector<Violation> check_required_shifts(const Schedule& x) {
  const auto& inst = x.instance();
  std::vector<Violation> out;
  if (!inst.enabled(Family::C10)) return out;
  for (int n = 0; n < x.nurses(); ++n)
    for (int s = 0; s < x.shifts(); ++s) {
      const auto& quota = inst.nurse(n).required_shifts[static_cast<std::size_t>(s)];
      int count = x.shift_count(n, s);
      int magnitude = 0;
      if (quota)
        magnitude = std::abs(count - *quota);
      else if (inst.rules.max_shift_type)
        magnitude = std::max(0, count - *inst.rules.max_shift_type);
      if (magnitude == 0) continue;
      auto v = detail::make_violation(inst, Family::C10, magnitude);
      v.nurse = n;
      v.shift = s;
      out.push_back(v);
    }
  return out;
}

/// Every violation of every enabled family, in family order.
inline std::vector<Violation> all_violations(const Schedule& x) {
  std::vector<Violation> out;
  auto append = [&](std::vector<Violation> part) { out.insert(out.end(), part.begin(), part.end()); };
  append(check_one_shift_per_day(x));
  append(check_max_work_days(x));
  append(check_consecutive_work(x));
  append(check_night_rest(x));
  append(check_leave(x));
  append(check_night_morning(x));
  auto cov = check_coverage(x);
  std::stable_partition(cov.begin(), cov.end(), [](const Violation& v) { return v.family == Family::C7; });
  append(std::move(cov));
  append(check_required_shifts(x));
  return out;
}

inline CostBreakdown evaluate(const Schedule& x) {
  const auto& inst = x.instance();
  CostBreakdown b;
  for (int n = 0; n < x.nurses(); ++n) {
    const auto& nurse = inst.nurse(n);
    for (int s = 0; s < x.shifts(); ++s)
      for (int d = 0; d < x.days(); ++d) {
        if (!x(n, s, d)) continue;
        b.base_cost += nurse.unit_cost;
        b.preference_reduction += nurse.preference_at(s, d, x.days());
      }
  }
  for (const auto& v : all_violations(x)) {
    b.penalties[v.family] += v.penalty;
    (inst.is_hard(v.family) ? b.hard_penalty : b.soft_penalty) += v.penalty;
  }
  b.total = b.base_cost - b.preference_reduction + b.hard_penalty + b.soft_penalty;
  return b;
}

inline bool has_hard_violation(const Schedule& x) { return evaluate(x).hard_penalty > 0; }

namespace detail {

// Total C4 magnitude for one nurse, given its worked-day and night flags.
inline int night_rest_load(const std::vector<char>& worked, const std::vector<char>& night, int min_run,
                           int block) {
  const int days = static_cast<int>(worked.size());
  int load = 0;
  int run = 0;
  for (int d = 0; d <= days; ++d) {
    if (d < days && night[static_cast<std::size_t>(d)]) {
      ++run;
      continue;
    }
    if (run >= min_run)
      for (int k = d; k < d + block && k < days; ++k) load += worked[static_cast<std::size_t>(k)];
    run = 0;
  }
  return load;
}

// Coverage penalty (C8 + C7) of one cell given its per-tier supply.
inline Money cell_coverage_penalty(const Instance& inst, int s, int d, const std::vector<int>& supply) {
  Money penalty = 0;
  const bool cascade = inst.enabled(Family::C9);
  if (inst.enabled(Family::C8)) {
    int carry = 0;
    for (int t = inst.num_tiers() - 1; t >= 0; --t) {
      int have = supply[static_cast<std::size_t>(t)] + carry;
      int need = inst.demand.at(s, d, t);
      if (have < need) penalty += inst.weight(Family::C8) * (need - have);
      carry = cascade && have > need ? have - need : 0;
    }
  }
  if (inst.enabled(Family::C7)) {
    int pooled = 0;
    for (int v : supply) pooled += v;
    int over = pooled - inst.demand.pooled(s, d);
    if (over > 0) penalty += inst.weight(Family::C7) * over;
  }
  return penalty;
}

inline int quota_magnitude(const Instance& inst, int n, int s, int count) {
  const auto& quota = inst.nurse(n).required_shifts[static_cast<std::size_t>(s)];
  if (quota) return std::abs(count - *quota);
  if (inst.rules.max_shift_type) return std::max(0, count - *inst.rules.max_shift_type);
  return 0;
}

}  // namespace detail

/// Objective change of setting x[n][s][d] to `value`, touching only the
/// terms that share the flipped nurse, day, or (shift, day) cell.
inline Money delta_evaluate(const Schedule& x, int n, int s, int d, bool value) {
  x.check(n, s, d);
  if (x(n, s, d) == value) throw ContractError("delta_evaluate: flip would not change x[n][s][d]");
  const auto& inst = x.instance();
  const auto& nurse = inst.nurse(n);
  const int sign = value ? 1 : -1;
  const int D = x.days();

  Money delta = sign * (nurse.unit_cost - nurse.preference_at(s, d, D));

  const int load_before = x.day_load(n, d);
  const int load_after = load_before + sign;
  const bool worked_before = load_before > 0;
  const bool worked_after = load_after > 0;

  if (inst.enabled(Family::C1))
    delta += inst.weight(Family::C1) * (std::max(0, load_after - 1) - std::max(0, load_before - 1));

  if (inst.enabled(Family::C2)) {
    const int y = inst.rules.max_work_days;
    const int total_before = x.total_assignments(n);
    delta += inst.weight(Family::C2) * (std::max(0, total_before + sign - y) - std::max(0, total_before - y));
  }

  if (inst.enabled(Family::C3) && worked_before != worked_after) {
    // Windows [start, start + z] that contain d flip between full and not
    // full exactly when every other day in them is worked.
    const int window = inst.rules.consecutive_work_limit + 1;
    int full_others = 0;
    for (int start = std::max(0, d - window + 1); start <= d && start + window <= D; ++start) {
      bool others = true;
      for (int k = start; k < start + window && others; ++k)
        if (k != d) others = x.day_load(n, k) > 0;
      full_others += others;
    }
    delta += inst.weight(Family::C3) * (worked_after ? full_others : -full_others);
  }

  const auto night = inst.night_shift();
  if (inst.enabled(Family::C4) && night && (s == *night || worked_before != worked_after)) {
    std::vector<char> worked(static_cast<std::size_t>(D)), nights(static_cast<std::size_t>(D));
    for (int k = 0; k < D; ++k) {
      worked[static_cast<std::size_t>(k)] = x.day_load(n, k) > 0;
      nights[static_cast<std::size_t>(k)] = x(n, *night, k);
    }
    const int min_run = inst.rules.max_consecutive_nights;
    const int block = inst.rules.rest_after_nights + 1;
    int before = detail::night_rest_load(worked, nights, min_run, block);
    worked[static_cast<std::size_t>(d)] = worked_after;
    if (s == *night) nights[static_cast<std::size_t>(d)] = value;
    int after = detail::night_rest_load(worked, nights, min_run, block);
    delta += inst.weight(Family::C4) * (after - before);
  }

  if (inst.enabled(Family::C5) && nurse.on_leave(d)) delta += inst.weight(Family::C5) * sign;

  const auto morning = inst.morning_shift();
  if (inst.enabled(Family::C6) && night && morning) {
    int pairs = 0;
    if (s == *night && d + 1 < D) pairs += x(n, *morning, d + 1);
    if (s == *morning && d > 0) pairs += x(n, *night, d - 1);
    delta += inst.weight(Family::C6) * sign * pairs;
  }

  if (inst.enabled(Family::C7) || inst.enabled(Family::C8)) {
    std::vector<int> supply(static_cast<std::size_t>(inst.num_tiers()), 0);
    for (int m = 0; m < x.nurses(); ++m)
      if (x(m, s, d)) ++supply[static_cast<std::size_t>(inst.nurse(m).skill_tier)];
    Money before = detail::cell_coverage_penalty(inst, s, d, supply);
    supply[static_cast<std::size_t>(nurse.skill_tier)] += sign;
    Money after = detail::cell_coverage_penalty(inst, s, d, supply);
    delta += after - before;
  }

  if (inst.enabled(Family::C10)) {
    const int count = x.shift_count(n, s);
    delta += inst.weight(Family::C10) *
             (detail::quota_magnitude(inst, n, s, count + sign) - detail::quota_magnitude(inst, n, s, count));
  }
  return delta;
}

}  // namespace roster
