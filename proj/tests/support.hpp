#pragma once

#include <memory>
#include <string>

#include "roster_forge/roster_forge.hpp"

namespace roster::testing {

inline constexpr Money kHard = 1'000'000;

// N nurses on S shifts over D days with no demand, no quotas and rules
// loose enough that nothing but C1 fires. C2 is soft at weight 10.
inline Instance blank(int N, int S, int D, Money unit_cost = 100) {
  Instance inst;
  inst.name = "blank";
  inst.horizon_days = D;
  for (int s = 0; s < S; ++s) inst.shifts.push_back({s + 1, "S" + std::to_string(s + 1), false});
  for (int n = 0; n < N; ++n) {
    Nurse nurse;
    nurse.id = n + 1;
    nurse.name = "N" + std::to_string(n + 1);
    nurse.unit_cost = unit_cost;
    nurse.required_shifts.assign(static_cast<std::size_t>(S), std::nullopt);
    nurse.preference.assign(static_cast<std::size_t>(S) * D, 0);
    inst.nurses.push_back(nurse);
  }
  inst.demand = Demand(S, D, 1);
  inst.rules.max_work_days = D;
  inst.rules.consecutive_work_limit = D;
  inst.rules.max_consecutive_nights = 1;
  inst.rules.rest_after_nights = 0;
  inst.constraint_catalogue = default_catalogue(kHard, 10);
  return inst;
}

inline std::shared_ptr<const Instance> share(Instance inst) { return std::make_shared<const Instance>(std::move(inst)); }

// Full-recompute difference of one flip; the reference for delta_evaluate.
inline Money recompute_delta(const Schedule& x, int n, int s, int d, bool value) {
  Schedule y = x;
  y.set(n, s, d, value);
  return evaluate(y).total - evaluate(x).total;
}

}  // namespace roster::testing
