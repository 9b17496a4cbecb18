#pragma once

// Domain types for cost-based nurse rostering: instances, schedules and the
// constraint catalogue.
//
// Index conventions: every index used in the C++ API is 0-based (nurse n,
// shift s, day d, skill tier t). Files and rendered output use the 1-based
// ids that appear in rosters (shift 1 = first shift of the day, day 1 =
// first day of the horizon).

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace roster {

/// Money in integer minor units. Exact delta/recompute equality depends on
/// never touching floating point.
using Money = std::int64_t;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (e.g. a no-op flip).
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Thrown when an operation receives a structurally invalid instance.
class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<std::string> defects)
      : Error(summarize(defects)), defects_(std::move(defects)) {}

  const std::vector<std::string>& defects() const noexcept { return defects_; }

private:
  static std::string summarize(const std::vector<std::string>& defects) {
    std::string msg = "invalid instance:";
    for (const auto& d : defects) {
      msg += "\n  - ";
      msg += d;
    }
    return msg;
  }

  std::vector<std::string> defects_;
};

// ---------------------------------------------------------------------------
// Constraint catalogue

enum class Family : std::uint8_t { C1 = 1, C2, C3, C4, C5, C6, C7, C8, C9, C10 };

inline constexpr std::array<Family, 10> kAllFamilies = {
    Family::C1, Family::C2, Family::C3, Family::C4, Family::C5,
    Family::C6, Family::C7, Family::C8, Family::C9, Family::C10};

inline constexpr std::string_view family_name(Family f) {
  constexpr std::array<std::string_view, 10> names = {"C1", "C2", "C3", "C4", "C5",
                                                      "C6", "C7", "C8", "C9", "C10"};
  return names[static_cast<std::size_t>(f) - 1];
}

inline std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

/// What each family checks.
inline constexpr std::string_view family_description(Family f) {
  switch (f) {
    case Family::C1: return "at most one shift per nurse per day";
    case Family::C2: return "total assignments per nurse capped at y";
    case Family::C3: return "a rest day in every z+1 consecutive days";
    case Family::C4: return "rest block after a run of night shifts";
    case Family::C5: return "no assignment on leave days";
    case Family::C6: return "no night shift followed by a morning shift";
    case Family::C7: return "no over-coverage of a shift";
    case Family::C8: return "demand met at every skill tier";
    case Family::C9: return "senior surplus cascades to the tier below";
    case Family::C10: return "required shift counts per nurse";
  }
  return "";
}

enum class ConstraintClass : std::uint8_t { hard, soft };

struct ConstraintSpec {
  Family family = Family::C1;
  ConstraintClass cls = ConstraintClass::hard;
  Money penalty_weight = 0;
  bool enabled = true;

  bool operator==(const ConstraintSpec&) const = default;
};

// ---------------------------------------------------------------------------
// Instance data

struct ShiftType {
  int id = 1;  // 1-based, contiguous
  std::string label;
  bool is_night = false;

  bool operator==(const ShiftType&) const = default;
};

struct Nurse {
  int id = 1;  // 1-based, contiguous
  std::string name;
  int skill_tier = 0;
  Money unit_cost = 0;
  // E quota per shift index; nullopt leaves the count unconstrained.
  std::vector<std::optional<int>> required_shifts;
  std::set<int> leave_days;  // 0-based day indices
  // Cost reduction per assignment, dense [shift][day].
  std::vector<Money> preference;

  Money preference_at(int shift, int day, int horizon) const {
    return preference[static_cast<std::size_t>(shift * horizon + day)];
  }
  bool on_leave(int day) const { return leave_days.count(day) != 0; }

  bool operator==(const Nurse&) const = default;
};

struct RuleParams {
  int max_work_days = 1;           // y
  int consecutive_work_limit = 1;  // z
  int max_consecutive_nights = 1;  // i: night-run length that triggers rest
  int rest_after_nights = 0;       // h: extra rest days after the sleep day
  std::optional<int> max_shift_type;  // q: per-shift-type cap where no quota is set

  bool operator==(const RuleParams&) const = default;
};

/// Demand M[shift][day][tier], dense.
class Demand {
public:
  Demand() = default;
  Demand(int shifts, int days, int tiers)
      : shifts_(shifts), days_(days), tiers_(tiers),
        counts_(static_cast<std::size_t>(shifts) * days * tiers, 0) {}

  int shifts() const noexcept { return shifts_; }
  int days() const noexcept { return days_; }
  int tiers() const noexcept { return tiers_; }

  int at(int s, int d, int t) const { return counts_[index(s, d, t)]; }
  int& at(int s, int d, int t) { return counts_[index(s, d, t)]; }

  int pooled(int s, int d) const {
    int sum = 0;
    for (int t = 0; t < tiers_; ++t) sum += at(s, d, t);
    return sum;
  }

  /// Grows the tier axis, keeping existing counts.
  void resize_tiers(int tiers) {
    if (tiers <= tiers_) return;
    Demand grown(shifts_, days_, tiers);
    for (int s = 0; s < shifts_; ++s)
      for (int d = 0; d < days_; ++d)
        for (int t = 0; t < tiers_; ++t) grown.at(s, d, t) = at(s, d, t);
    *this = std::move(grown);
  }

  bool operator==(const Demand&) const = default;

private:
  std::size_t index(int s, int d, int t) const {
    return (static_cast<std::size_t>(s) * days_ + d) * tiers_ + t;
  }

  int shifts_ = 0;
  int days_ = 0;
  int tiers_ = 0;
  std::vector<int> counts_;
};

struct Instance {
  std::string name;
  std::string provenance;
  int horizon_days = 0;
  std::vector<ShiftType> shifts;
  std::vector<Nurse> nurses;
  Demand demand;
  RuleParams rules;
  std::vector<ConstraintSpec> constraint_catalogue;

  int num_nurses() const noexcept { return static_cast<int>(nurses.size()); }
  int num_shifts() const noexcept { return static_cast<int>(shifts.size()); }
  int num_tiers() const noexcept { return demand.tiers(); }

  std::optional<int> night_shift() const {
    for (int s = 0; s < num_shifts(); ++s)
      if (shifts[static_cast<std::size_t>(s)].is_night) return s;
    return std::nullopt;
  }

  /// The morning shift is shift id 1; C6 only applies when it differs from
  /// the night shift.
  std::optional<int> morning_shift() const {
    auto night = night_shift();
    if (!night || *night == 0) return std::nullopt;
    return 0;
  }

  const ConstraintSpec* spec(Family f) const {
    for (const auto& c : constraint_catalogue)
      if (c.family == f) return &c;
    return nullptr;
  }
  bool enabled(Family f) const {
    const auto* c = spec(f);
    return c != nullptr && c->enabled;
  }
  bool is_hard(Family f) const {
    const auto* c = spec(f);
    return c != nullptr && c->enabled && c->cls == ConstraintClass::hard;
  }
  Money weight(Family f) const {
    const auto* c = spec(f);
    return (c != nullptr && c->enabled) ? c->penalty_weight : 0;
  }

  const Nurse& nurse(int n) const { return nurses[static_cast<std::size_t>(n)]; }

  std::optional<int> shift_by_label(std::string_view label) const {
    for (int s = 0; s < num_shifts(); ++s)
      if (shifts[static_cast<std::size_t>(s)].label == label) return s;
    return std::nullopt;
  }

  bool operator==(const Instance&) const = default;
};

/// Catalogue with every family enabled: C2 soft at `soft_weight`, the
/// rest hard at `hard_weight`. Benchmarks and generators adjust from here.
inline std::vector<ConstraintSpec> default_catalogue(Money hard_weight, Money soft_weight) {
  std::vector<ConstraintSpec> out;
  for (Family f : kAllFamilies) {
    bool soft = f == Family::C2;
    out.push_back({f, soft ? ConstraintClass::soft : ConstraintClass::hard,
                   soft ? soft_weight : hard_weight, true});
  }
  return out;
}

inline ConstraintSpec& catalogue_entry(Instance& inst, Family f) {
  for (auto& c : inst.constraint_catalogue)
    if (c.family == f) return c;
  inst.constraint_catalogue.push_back({f, ConstraintClass::soft, 0, false});
  return inst.constraint_catalogue.back();
}

// ---------------------------------------------------------------------------
// Hierarchy bound

/// Upper bound on base cost plus every soft penalty for any binary tensor.
/// Preference reductions only lower the objective, so they are ignored.
inline Money soft_cost_upper_bound(const Instance& inst) {
  const Money N = inst.num_nurses(), S = inst.num_shifts(), D = inst.horizon_days;
  Money bound = 0;
  for (const auto& nurse : inst.nurses) bound += std::max<Money>(0, nurse.unit_cost) * S * D;

  auto soft = [&](Family f) {
    const auto* c = inst.spec(f);
    return c != nullptr && c->enabled && c->cls == ConstraintClass::soft;
  };
  auto add = [&](Family f, Money max_magnitude) {
    if (soft(f)) bound += max_magnitude * inst.weight(f);
  };

  add(Family::C1, N * D * std::max<Money>(0, S - 1));
  add(Family::C2, N * std::max<Money>(0, S * D - inst.rules.max_work_days));
  add(Family::C3, N * std::max<Money>(0, D - inst.rules.consecutive_work_limit));
  add(Family::C4, N * D);
  Money leave_load = 0;
  for (const auto& nurse : inst.nurses) leave_load += static_cast<Money>(nurse.leave_days.size()) * S;
  add(Family::C5, leave_load);
  add(Family::C6, N * D);
  add(Family::C7, N * S * D);
  Money demand_total = 0;
  for (int s = 0; s < inst.num_shifts(); ++s)
    for (int d = 0; d < D; ++d) demand_total += inst.demand.pooled(s, d);
  add(Family::C8, demand_total);
  Money quota_spread = 0;
  for (const auto& nurse : inst.nurses)
    for (const auto& e : nurse.required_shifts) quota_spread += e ? std::max<Money>(*e, D - *e) : D;
  add(Family::C10, quota_spread);
  return bound;
}

// ---------------------------------------------------------------------------
// Validation

/// Structural defects: everything except the hard/soft weight separation.
inline std::vector<std::string> structural_defects(const Instance& inst) {
  std::vector<std::string> defects;
  auto defect = [&](std::string msg) { defects.push_back(std::move(msg)); };
  const int D = inst.horizon_days;
  const int S = inst.num_shifts();

  if (D <= 0) defect("horizon_days: must be positive (got " + std::to_string(D) + ")");
  if (S == 0) defect("shifts: at least one shift is required");
  if (inst.nurses.empty()) defect("nurses: at least one nurse is required");

  int nights = 0;
  std::set<std::string> labels;
  for (int s = 0; s < S; ++s) {
    const auto& sh = inst.shifts[static_cast<std::size_t>(s)];
    if (sh.id != s + 1)
      defect("shifts[" + std::to_string(s) + "].id: ids must be contiguous 1..S (got " +
             std::to_string(sh.id) + ")");
    if (sh.label.empty()) defect("shifts[" + std::to_string(s) + "].label: must not be empty");
    if (!labels.insert(sh.label).second) defect("shifts[" + std::to_string(s) + "].label: duplicate '" + sh.label + "'");
    if (sh.is_night) ++nights;
  }
  if (nights > 1) defect("shifts: at most one night shift is allowed (got " + std::to_string(nights) + ")");

  int max_tier = -1;
  for (int n = 0; n < inst.num_nurses(); ++n) {
    const auto& nurse = inst.nurse(n);
    const std::string where = "nurses[" + std::to_string(n) + "] (" + nurse.name + ")";
    if (nurse.id != n + 1)
      defect(where + ".id: ids must be contiguous 1..N (got " + std::to_string(nurse.id) + ")");
    if (nurse.skill_tier < 0) defect(where + ".skill_tier: must be non-negative");
    max_tier = std::max(max_tier, nurse.skill_tier);
    if (nurse.unit_cost < 0) defect(where + ".unit_cost: must be non-negative");
    if (static_cast<int>(nurse.required_shifts.size()) != S) {
      defect(where + ".required_shifts: expected one entry per shift");
    } else {
      long owed = 0;
      for (const auto& e : nurse.required_shifts) {
        if (e && *e < 0) defect(where + ".required_shifts: counts must be non-negative");
        if (e) owed += *e;
      }
      if (owed > D)
        defect(where + ".required_shifts: owes " + std::to_string(owed) + " duties over a " +
               std::to_string(D) + "-day horizon");
    }
    for (int day : nurse.leave_days)
      if (day < 0 || day >= D)
        defect(where + ".leave_days: day " + std::to_string(day + 1) + " outside 1.." + std::to_string(D));
    if (nurse.preference.size() != static_cast<std::size_t>(S) * static_cast<std::size_t>(std::max(D, 0))) {
      defect(where + ".preference: expected a [shift][day] table");
    } else if (std::any_of(nurse.preference.begin(), nurse.preference.end(), [](Money p) { return p < 0; })) {
      defect(where + ".preference: reductions must be non-negative");
    }
  }

  const auto& r = inst.rules;
  if (r.max_work_days <= 0) defect("rules.max_work_days: must be positive");
  if (r.consecutive_work_limit <= 0) defect("rules.consecutive_work_limit: must be positive");
  if (r.max_consecutive_nights <= 0) defect("rules.max_consecutive_nights: must be positive");
  if (r.rest_after_nights < 0) defect("rules.rest_after_nights: must be non-negative");
  if (r.max_shift_type && *r.max_shift_type <= 0) defect("rules.max_shift_type: must be positive when present");
  if (r.consecutive_work_limit > r.max_work_days)
    defect("rules.consecutive_work_limit: must not exceed max_work_days");
  if (D > 0 && r.max_work_days > D) defect("rules.max_work_days: must not exceed horizon_days");

  const auto& dm = inst.demand;
  if (dm.shifts() != S || dm.days() != D) {
    defect("demand: must be defined for every (shift, day) pair of the horizon");
  } else {
    const bool cascade = inst.enabled(Family::C9);
    for (int t = 0; t < dm.tiers(); ++t) {
      bool used = false;
      for (int s = 0; s < S && !used; ++s)
        for (int d = 0; d < D && !used; ++d) {
          if (dm.at(s, d, t) < 0) {
            defect("demand: negative count at shift " + std::to_string(s + 1) + ", day " + std::to_string(d + 1));
          }
          used = dm.at(s, d, t) > 0;
        }
      if (!used) continue;
      bool staffed = std::any_of(inst.nurses.begin(), inst.nurses.end(), [&](const Nurse& nurse) {
        return cascade ? nurse.skill_tier >= t : nurse.skill_tier == t;
      });
      if (!staffed)
        defect("demand: structurally infeasible, tier " + std::to_string(t) +
               " has demand but no nurse at that tier" + (cascade ? " or above" : ""));
    }
    if (max_tier >= dm.tiers() && !inst.nurses.empty())
      defect("demand: tier axis must cover every nurse skill tier (highest is " + std::to_string(max_tier) + ")");
  }

  std::set<Family> seen;
  std::optional<Money> hard_weight;
  for (const auto& c : inst.constraint_catalogue) {
    const std::string where = "constraints." + std::string(family_name(c.family));
    if (!seen.insert(c.family).second) defect(where + ": listed more than once");
    if (c.penalty_weight < 0) defect(where + ".weight: must be non-negative");
    if (!c.enabled || c.cls != ConstraintClass::hard) continue;
    if (hard_weight && *hard_weight != c.penalty_weight)
      defect(where + ".weight: every hard constraint must share one penalty magnitude");
    if (!hard_weight) hard_weight = c.penalty_weight;
  }
  return defects;
}

/// Set when the shared hard weight does not dominate base cost plus every
/// soft penalty.
inline std::optional<std::string> hierarchy_defect(const Instance& inst) {
  for (const auto& c : inst.constraint_catalogue) {
    if (!c.enabled || c.cls != ConstraintClass::hard) continue;
    Money bound = soft_cost_upper_bound(inst);
    if (c.penalty_weight <= bound)
      return "constraints: hard weight " + std::to_string(c.penalty_weight) + " must exceed the soft-cost bound " +
             std::to_string(bound);
    break;
  }
  return std::nullopt;
}

/// Every defect; empty iff all instance invariants hold.
inline std::vector<std::string> validate_instance(const Instance& inst) {
  auto defects = structural_defects(inst);
  if (defects.empty())
    if (auto h = hierarchy_defect(inst)) defects.push_back(*h);
  return defects;
}

inline void require_valid(const Instance& inst) {
  auto defects = validate_instance(inst);
  if (!defects.empty()) throw ValidationError(std::move(defects));
}

/// Weaker precondition of the search routines: they stay well defined when
/// weights are overridden below the hierarchy bound.
inline void require_structurally_valid(const Instance& inst) {
  auto defects = structural_defects(inst);
  if (!defects.empty()) throw ValidationError(std::move(defects));
}

// ---------------------------------------------------------------------------
// Schedule

/// Binary assignment tensor x[nurse][shift][day] bound to its instance.
/// Single writer; copies share the (immutable) instance.
class Schedule {
public:
  explicit Schedule(std::shared_ptr<const Instance> inst)
      : inst_(std::move(inst)),
        nurses_(inst_->num_nurses()),
        shifts_(inst_->num_shifts()),
        days_(inst_->horizon_days),
        x_(static_cast<std::size_t>(nurses_) * shifts_ * days_, 0) {}

  const Instance& instance() const noexcept { return *inst_; }
  const std::shared_ptr<const Instance>& instance_ptr() const noexcept { return inst_; }

  int nurses() const noexcept { return nurses_; }
  int shifts() const noexcept { return shifts_; }
  int days() const noexcept { return days_; }
  std::size_t cells() const noexcept { return x_.size(); }

  bool operator()(int n, int s, int d) const { return x_[index(n, s, d)] != 0; }

  bool at(int n, int s, int d) const {
    check(n, s, d);
    return (*this)(n, s, d);
  }

  void set(int n, int s, int d, bool v) { x_[index(n, s, d)] = v ? 1 : 0; }

  /// Raw tensor in [nurse][shift][day] row-major order.
  const std::vector<std::uint8_t>& raw() const noexcept { return x_; }

  int day_load(int n, int d) const {
    int load = 0;
    for (int s = 0; s < shifts_; ++s) load += (*this)(n, s, d);
    return load;
  }
  int shift_count(int n, int s) const {
    int count = 0;
    for (int d = 0; d < days_; ++d) count += (*this)(n, s, d);
    return count;
  }
  int total_assignments(int n) const {
    int count = 0;
    for (int s = 0; s < shifts_; ++s) count += shift_count(n, s);
    return count;
  }
  int pooled_coverage(int s, int d) const {
    int count = 0;
    for (int n = 0; n < nurses_; ++n) count += (*this)(n, s, d);
    return count;
  }

  void check(int n, int s, int d) const {
    if (n < 0 || n >= nurses_ || s < 0 || s >= shifts_ || d < 0 || d >= days_)
      throw std::out_of_range("schedule index (" + std::to_string(n) + ", " + std::to_string(s) + ", " +
                              std::to_string(d) + ") outside " + std::to_string(nurses_) + "x" +
                              std::to_string(shifts_) + "x" + std::to_string(days_));
  }

  /// Tensor equality; both schedules must describe the same dimensions.
  bool operator==(const Schedule& other) const {
    return nurses_ == other.nurses_ && shifts_ == other.shifts_ && days_ == other.days_ && x_ == other.x_;
  }

private:
  std::size_t index(int n, int s, int d) const {
    return (static_cast<std::size_t>(n) * shifts_ + s) * days_ + d;
  }

  std::shared_ptr<const Instance> inst_;
  int nurses_;
  int shifts_;
  int days_;
  std::vector<std::uint8_t> x_;
};

/// All-zero schedule; every nurse starts unassigned.
inline Schedule new_empty_schedule(std::shared_ptr<const Instance> inst) {
  require_valid(*inst);
  return Schedule(std::move(inst));
}

inline Schedule new_empty_schedule(const Instance& inst) {
  return new_empty_schedule(std::make_shared<const Instance>(inst));
}

/// Number of nurses of exactly `tier` working shift `s` on day `d`.
inline int coverage(const Schedule& x, int s, int d, int tier) {
  const auto& inst = x.instance();
  if (s < 0 || s >= x.shifts() || d < 0 || d >= x.days() || tier < 0 || tier >= inst.num_tiers())
    throw std::out_of_range("coverage index (shift " + std::to_string(s) + ", day " + std::to_string(d) +
                            ", tier " + std::to_string(tier) + ") out of range");
  int count = 0;
  for (int n = 0; n < x.nurses(); ++n)
    if (inst.nurse(n).skill_tier == tier && x(n, s, d)) ++count;
  return count;
}

}  // namespace roster
