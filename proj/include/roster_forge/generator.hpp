#pragma once

// Seeded random instances for gap runs, fuzzing and property tests.

#include <cstdint>
#include <random>

#include "roster_forge/model.hpp"

namespace roster {

struct RandomInstanceParams {
  int nurses = 3;
  int shifts = 2;
  int days = 3;
};

namespace detail {

// Portable bounded draw; std::uniform_int_distribution differs across
// standard libraries and would break seed reproducibility.
inline int draw(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

inline bool coin(std::mt19937_64& rng, int percent) { return draw(rng, 0, 99) < percent; }

}  // namespace detail

/// A valid instance drawn from `rng`. Sizes are exact; everything else
/// (tiers, quotas, leave, preferences, rule parameters, hard/soft split,
/// night shift) is random. Demand may exceed what the nurses can cover.
inline Instance random_instance(std::mt19937_64& rng, const RandomInstanceParams& p) {
  using detail::coin;
  using detail::draw;
  Instance inst;
  inst.name = "random";
  inst.horizon_days = p.days;
  const int S = p.shifts, D = p.days;

  const int night = S >= 2 && coin(rng, 50) ? S - 1 : -1;
  for (int s = 0; s < S; ++s) inst.shifts.push_back({s + 1, "S" + std::to_string(s + 1), s == night});

  const bool tiered = p.nurses >= 2 && coin(rng, 40);
  for (int n = 0; n < p.nurses; ++n) {
    Nurse nurse;
    nurse.id = n + 1;
    nurse.name = "R" + std::to_string(n + 1);
    nurse.skill_tier = tiered && n > 0 && coin(rng, 50) ? 1 : 0;
    nurse.unit_cost = 10 * draw(rng, 1, 10);
    nurse.required_shifts.assign(static_cast<std::size_t>(S), std::nullopt);
    if (coin(rng, 60)) {
      int budget = D;
      for (int s = 0; s < S; ++s) {
        int e = draw(rng, 0, std::min(budget, 2));
        nurse.required_shifts[static_cast<std::size_t>(s)] = e;
        budget -= e;
      }
    }
    if (coin(rng, 30)) nurse.leave_days.insert(draw(rng, 0, D - 1));
    nurse.preference.assign(static_cast<std::size_t>(S) * D, 0);
    if (coin(rng, 30)) nurse.preference[static_cast<std::size_t>(draw(rng, 0, S * D - 1))] = draw(rng, 1, 12) * 10;
    inst.nurses.push_back(std::move(nurse));
  }
  const bool has_senior = std::any_of(inst.nurses.begin(), inst.nurses.end(), [](const Nurse& n) { return n.skill_tier == 1; });

  inst.demand = Demand(S, D, has_senior ? 2 : 1);
  for (int s = 0; s < S; ++s)
    for (int d = 0; d < D; ++d) {
      inst.demand.at(s, d, 0) = draw(rng, 0, std::min(2, p.nurses));
      if (has_senior && coin(rng, 25)) inst.demand.at(s, d, 1) = 1;
    }

  inst.rules.max_work_days = draw(rng, 1, D);
  inst.rules.consecutive_work_limit = draw(rng, 1, inst.rules.max_work_days);
  inst.rules.max_consecutive_nights = draw(rng, 1, 2);
  inst.rules.rest_after_nights = draw(rng, 0, 1);
  if (coin(rng, 30)) inst.rules.max_shift_type = draw(rng, 1, D);

  for (Family f : kAllFamilies) {
    ConstraintSpec c{f, ConstraintClass::hard, 0, true};
    const bool always_hard = f == Family::C1 || f == Family::C8 || f == Family::C9;
    if (!always_hard && coin(rng, 40)) {
      c.cls = ConstraintClass::soft;
      c.penalty_weight = draw(rng, 1, 50);
    }
    if (f == Family::C9) c.enabled = coin(rng, 70);
    inst.constraint_catalogue.push_back(c);
  }
  // One hard magnitude above everything soft can add up to.
  const Money hard = std::max<Money>(1000, soft_cost_upper_bound(inst) + 1);
  for (auto& c : inst.constraint_catalogue)
    if (c.cls == ConstraintClass::hard) c.penalty_weight = hard;
  return inst;
}

inline Instance random_instance(std::uint64_t seed, const RandomInstanceParams& p) {
  std::mt19937_64 rng(seed);
  return random_instance(rng, p);
}

}  // namespace roster
