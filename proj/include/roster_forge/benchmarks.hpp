#pragma once

// The two embedded benchmark instances and their published final rosters.
// data/*.roster.json and data/*.published.csv hold the same content as
// files; tests keep the copies in sync.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "roster_forge/io.hpp"
#include "roster_forge/model.hpp"

namespace roster::benchmarks {

inline constexpr std::string_view kOzkarahan89 = R"json({
  "schema_version": "roster-forge/1",
  "name": "ozkarahan89",
  "provenance": [
    "Two 12-hour periods per day (A, M), 14 nurses (aides = tier 0, RNs = tier 1), 7-day horizon.",
    "unit_cost: derived-from-figure. The published cost column equals 300 x the nurse's assignment count, so every nurse costs 300 per shift.",
    "demand: derived-from-figure. Per-(shift, day, tier) column sums of the published final roster (Figure 2).",
    "required_shifts: derived-from-figure. Per-nurse, per-shift row sums of Figure 2.",
    "leave_days: derived-from-figure. Requested days off are not tabulated; this set is chosen among the zero days of Figure 2.",
    "rules and weights: the 100 penalty on RN2 in Figure 2 is reproduced by a soft work-day cap y = 5 (weight 100 per excess assignment).",
    "Shifts are independent day periods; there is no night shift, so night-rest and night-morning rules are inert."
  ],
  "horizon_days": 7,
  "skill_tiers": 2,
  "shifts": [
    {
      "id": 1,
      "label": "A",
      "is_night": false
    },
    {
      "id": 2,
      "label": "M",
      "is_night": false
    }
  ],
  "nurses": [
    {
      "id": 1,
      "name": "AID12",
      "skill_tier": 0,
      "unit_cost": 300,
      "required_shifts": {
        "A": 2,
        "M": 0
      },
      "leave_days": [
        1,
        2
      ],
      "preferences": []
    },
    {
      "id": 2,
      "name": "AID13",
      "skill_tier": 0,
      "unit_cost": 300,
      "required_shifts": {
        "A": 3,
        "M": 0
      },
      "leave_days": [],
      "preferences": []
    },
    {
      "id": 3,
      "name": "AID14",
      "skill_tier": 0,
      "unit_cost": 300,
      "required_shifts": {
        "A": 2,
        "M": 0
      },
      "leave_days": [
        6,
        7
      ],
      "preferences": []
    },
    {
      "id": 4,
      "name": "RN1",
      "skill_tier": 1,
      "unit_cost": 300,
      "required_shifts": {
        "A": 0,
        "M": 5
      },
      "leave_days": [
        1,
        2
      ],
      "preferences": []
    },
    {
      "id": 5,
      "name": "RN10",
      "skill_tier": 1,
      "unit_cost": 300,
      "required_shifts": {
        "A": 3,
        "M": 0
      },
      "leave_days": [
        7
      ],
      "preferences": []
    },
    {
      "id": 6,
      "name": "RN11",
      "skill_tier": 1,
      "unit_cost": 300,
      "required_shifts": {
        "A": 3,
        "M": 0
      },
      "leave_days": [],
      "preferences": []
    },
    {
      "id": 7,
      "name": "RN2",
      "skill_tier": 1,
      "unit_cost": 300,
      "required_shifts": {
        "A": 0,
        "M": 6
      },
      "leave_days": [],
      "preferences": []
    },
    {
      "id": 8,
      "name": "RN3",
      "skill_tier": 1,
      "unit_cost": 300,
      "required_shifts": {
        "A": 0,
        "M": 3
      },
      "leave_days": [
        6,
        7
      ],
      "preferences": []
    },
    {
      "id": 9,
      "name": "RN4",
      "skill_tier": 1,
      "unit_cost": 300,
      "required_shifts": {
        "A": 3,
        "M": 0
      },
      "leave_days": [],
      "preferences": []
    },
    {
      "id": 10,
      "name": "RN5",
      "skill_tier": 1,
      "unit_cost": 300,
      "required_shifts": {
        "A": 4,
        "M": 0
      },
      "leave_days": [],
      "preferences": []
    },
    {
      "id": 11,
      "name": "RN6",
      "skill_tier": 1,
      "unit_cost": 300,
      "required_shifts": {
        "A": 2,
        "M": 0
      },
      "leave_days": [
        4
      ],
      "preferences": []
    },
    {
      "id": 12,
      "name": "RN7",
      "skill_tier": 1,
      "unit_cost": 300,
      "required_shifts": {
        "A": 3,
        "M": 0
      },
      "leave_days": [],
      "preferences": []
    },
    {
      "id": 13,
      "name": "RN8",
      "skill_tier": 1,
      "unit_cost": 300,
      "required_shifts": {
        "A": 1,
        "M": 3
      },
      "leave_days": [],
      "preferences": []
    },
    {
      "id": 14,
      "name": "RN9",
      "skill_tier": 1,
      "unit_cost": 300,
      "required_shifts": {
        "A": 4,
        "M": 0
      },
      "leave_days": [],
      "preferences": []
    }
  ],
  "demand": [
    {
      "shift": "A",
      "tier": 0,
      "days": [
        1,
        1,
        1,
        1,
        1,
        1,
        1
      ]
    },
    {
      "shift": "A",
      "tier": 1,
      "days": [
        4,
        4,
        4,
        4,
        3,
        2,
        2
      ]
    },
    {
      "shift": "M",
      "tier": 0,
      "days": [
        0,
        0,
        0,
        0,
        0,
        0,
        0
      ]
    },
    {
      "shift": "M",
      "tier": 1,
      "days": [
        2,
        2,
        2,
        3,
        3,
        3,
        2
      ]
    }
  ],
  "rules": {
    "max_work_days": 5,
    "consecutive_work_limit": 5,
    "max_consecutive_nights": 2,
    "rest_after_nights": 1
  },
  "constraints": [
    {
      "family": "C1",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C2",
      "class": "soft",
      "weight": 100,
      "enabled": true
    },
    {
      "family": "C3",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C4",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C5",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C6",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C7",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C8",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C9",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C10",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    }
  ]
}
)json";

inline constexpr std::string_view kLi03 = R"json({
  "schema_version": "roster-forge/1",
  "name": "li03",
  "provenance": [
    "Three 8-hour shifts per day (A, P, M; M is the night shift), 16 nurses, 7-day horizon, no skill tiers.",
    "unit_cost: per-nurse cost column of the published rosters. The initial roster (Figure 4) lists 15 nurses; the final roster (Figure 5) adds nurse 16 at cost 60, which is included here.",
    "demand: derived-from-figure. Per-(shift, day) column sums of the published final roster (Figure 5).",
    "required_shifts: derived-from-figure. Per-nurse, per-shift row sums of Figure 5. Nurse 14 has an all-zero row, so every quota is 0.",
    "leave_days: derived-from-figure. Leaves are soft and not tabulated; this set is chosen among the zero days of Figure 5 (nurse 14 is on leave all week).",
    "preferences: derived-from-figure. Shift requests are soft and not tabulated; each one matches an assignment of Figure 5.",
    "one-shift-per-day is soft: Figure 5 gives nurse 9 two shifts on day 5 and nurse 16 two shifts on day 6."
  ],
  "horizon_days": 7,
  "skill_tiers": 1,
  "shifts": [
    {
      "id": 1,
      "label": "A",
      "is_night": false
    },
    {
      "id": 2,
      "label": "P",
      "is_night": false
    },
    {
      "id": 3,
      "label": "M",
      "is_night": true
    }
  ],
  "nurses": [
    {
      "id": 1,
      "name": "N1",
      "skill_tier": 0,
      "unit_cost": 50,
      "required_shifts": {
        "A": 2,
        "P": 2,
        "M": 1
      },
      "leave_days": [],
      "preferences": []
    },
    {
      "id": 2,
      "name": "N2",
      "skill_tier": 0,
      "unit_cost": 40,
      "required_shifts": {
        "A": 2,
        "P": 2,
        "M": 1
      },
      "leave_days": [],
      "preferences": [
        {
          "shift": "P",
          "day": 2,
          "reduction": 20
        }
      ]
    },
    {
      "id": 3,
      "name": "N3",
      "skill_tier": 0,
      "unit_cost": 50,
      "required_shifts": {
        "A": 2,
        "P": 1,
        "M": 1
      },
      "leave_days": [
        2,
        3
      ],
      "preferences": []
    },
    {
      "id": 4,
      "name": "N4",
      "skill_tier": 0,
      "unit_cost": 50,
      "required_shifts": {
        "A": 3,
        "P": 1,
        "M": 1
      },
      "leave_days": [],
      "preferences": []
    },
    {
      "id": 5,
      "name": "N5",
      "skill_tier": 0,
      "unit_cost": 30,
      "required_shifts": {
        "A": 2,
        "P": 2,
        "M": 0
      },
      "leave_days": [
        6,
        7
      ],
      "preferences": []
    },
    {
      "id": 6,
      "name": "N6",
      "skill_tier": 0,
      "unit_cost": 60,
      "required_shifts": {
        "A": 2,
        "P": 1,
        "M": 1
      },
      "leave_days": [],
      "preferences": []
    },
    {
      "id": 7,
      "name": "N7",
      "skill_tier": 0,
      "unit_cost": 50,
      "required_shifts": {
        "A": 2,
        "P": 1,
        "M": 1
      },
      "leave_days": [],
      "preferences": [
        {
          "shift": "M",
          "day": 7,
          "reduction": 20
        }
      ]
    },
    {
      "id": 8,
      "name": "N8",
      "skill_tier": 0,
      "unit_cost": 50,
      "required_shifts": {
        "A": 2,
        "P": 3,
        "M": 0
      },
      "leave_days": [],
      "preferences": [
        {
          "shift": "A",
          "day": 7,
          "reduction": 20
        }
      ]
    },
    {
      "id": 9,
      "name": "N9",
      "skill_tier": 0,
      "unit_cost": 30,
      "required_shifts": {
        "A": 1,
        "P": 1,
        "M": 2
      },
      "leave_days": [],
      "preferences": []
    },
    {
      "id": 10,
      "name": "N10",
      "skill_tier": 0,
      "unit_cost": 40,
      "required_shifts": {
        "A": 1,
        "P": 1,
        "M": 1
      },
      "leave_days": [
        6,
        7
      ],
      "preferences": []
    },
    {
      "id": 11,
      "name": "N11",
      "skill_tier": 0,
      "unit_cost": 40,
      "required_shifts": {
        "A": 2,
        "P": 2,
        "M": 0
      },
      "leave_days": [],
      "preferences": [
        {
          "shift": "A",
          "day": 1,
          "reduction": 20
        }
      ]
    },
    {
      "id": 12,
      "name": "N12",
      "skill_tier": 0,
      "unit_cost": 30,
      "required_shifts": {
        "A": 1,
        "P": 1,
        "M": 2
      },
      "leave_days": [
        1,
        2
      ],
      "preferences": [
        {
          "shift": "M",
          "day": 3,
          "reduction": 20
        }
      ]
    },
    {
      "id": 13,
      "name": "N13",
      "skill_tier": 0,
      "unit_cost": 40,
      "required_shifts": {
        "A": 2,
        "P": 2,
        "M": 1
      },
      "leave_days": [],
      "preferences": []
    },
    {
      "id": 14,
      "name": "N14",
      "skill_tier": 0,
      "unit_cost": 30,
      "required_shifts": {
        "A": 0,
        "P": 0,
        "M": 0
      },
      "leave_days": [
        1,
        2,
        3,
        4,
        5,
        6,
        7
      ],
      "preferences": []
    },
    {
      "id": 15,
      "name": "N15",
      "skill_tier": 0,
      "unit_cost": 40,
      "required_shifts": {
        "A": 1,
        "P": 2,
        "M": 1
      },
      "leave_days": [],
      "preferences": []
    },
    {
      "id": 16,
      "name": "N16",
      "skill_tier": 0,
      "unit_cost": 60,
      "required_shifts": {
        "A": 2,
        "P": 3,
        "M": 1
      },
      "leave_days": [],
      "preferences": []
    }
  ],
  "demand": [
    {
      "shift": "A",
      "tier": 0,
      "days": [
        4,
        3,
        4,
        7,
        5,
        3,
        1
      ]
    },
    {
      "shift": "P",
      "tier": 0,
      "days": [
        5,
        5,
        2,
        3,
        3,
        3,
        4
      ]
    },
    {
      "shift": "M",
      "tier": 0,
      "days": [
        3,
        2,
        1,
        0,
        2,
        3,
        3
      ]
    }
  ],
  "rules": {
    "max_work_days": 6,
    "consecutive_work_limit": 5,
    "max_consecutive_nights": 2,
    "rest_after_nights": 1
  },
  "constraints": [
    {
      "family": "C1",
      "class": "soft",
      "weight": 100,
      "enabled": true
    },
    {
      "family": "C2",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C3",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C4",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C5",
      "class": "soft",
      "weight": 50,
      "enabled": true
    },
    {
      "family": "C6",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C7",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C8",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C9",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    },
    {
      "family": "C10",
      "class": "hard",
      "weight": 1000000,
      "enabled": true
    }
  ]
}
)json";

// Published final rosters, one row per nurse in instance order. Cells are
// grouped by day ("|") with one digit per shift.
inline const std::vector<std::string_view>& ozkarahan89_published_rows() {
  static const std::vector<std::string_view> rows = {
      "0 0 | 0 0 | 0 0 | 0 0 | 0 0 | 1 0 | 1 0",
      "0 0 | 0 0 | 1 0 | 1 0 | 1 0 | 0 0 | 0 0",
      "1 0 | 1 0 | 0 0 | 0 0 | 0 0 | 0 0 | 0 0",
      "0 0 | 0 0 | 0 1 | 0 1 | 0 1 | 0 1 | 0 1",
      "0 0 | 0 0 | 1 0 | 1 0 | 1 0 | 0 0 | 0 0",
      "1 0 | 1 0 | 0 0 | 0 0 | 0 0 | 0 0 | 1 0",
      "0 1 | 0 1 | 0 0 | 0 1 | 0 1 | 0 1 | 0 1",
      "0 1 | 0 1 | 0 1 | 0 0 | 0 0 | 0 0 | 0 0",
      "0 0 | 0 0 | 0 0 | 1 0 | 1 0 | 1 0 | 0 0",
      "1 0 | 0 0 | 1 0 | 0 0 | 0 0 | 1 0 | 1 0",
      "0 0 | 1 0 | 0 0 | 0 0 | 1 0 | 0 0 | 0 0",
      "0 0 | 1 0 | 1 0 | 1 0 | 0 0 | 0 0 | 0 0",
      "1 0 | 0 0 | 0 0 | 0 1 | 0 1 | 0 1 | 0 0",
      "1 0 | 1 0 | 1 0 | 1 0 | 0 0 | 0 0 | 0 0",
  };
  return rows;
}

inline const std::vector<std::string_view>& li03_published_rows() {
  static const std::vector<std::string_view> rows = {
      "0 0 1 | 0 1 0 | 0 0 0 | 1 0 0 | 0 0 0 | 1 0 0 | 0 1 0",
      "0 0 1 | 0 1 0 | 0 0 0 | 1 0 0 | 0 0 0 | 1 0 0 | 0 1 0",
      "1 0 0 | 0 0 0 | 0 0 0 | 1 0 0 | 0 0 1 | 0 1 0 | 0 0 0",
      "1 0 0 | 1 0 0 | 0 0 0 | 1 0 0 | 0 1 0 | 0 0 1 | 0 0 0",
      "0 1 0 | 1 0 0 | 0 0 0 | 1 0 0 | 0 1 0 | 0 0 0 | 0 0 0",
      "0 0 0 | 0 0 1 | 0 0 0 | 1 0 0 | 1 0 0 | 0 1 0 | 0 0 0",
      "1 0 0 | 0 0 0 | 1 0 0 | 0 0 0 | 0 1 0 | 0 0 0 | 0 0 1",
      "0 1 0 | 0 1 0 | 0 0 0 | 0 0 0 | 1 0 0 | 0 1 0 | 1 0 0",
      "0 0 1 | 0 1 0 | 0 0 0 | 0 0 0 | 1 0 1 | 0 0 0 | 0 0 0",
      "0 0 0 | 0 0 1 | 0 1 0 | 1 0 0 | 0 0 0 | 0 0 0 | 0 0 0",
      "1 0 0 | 0 1 0 | 1 0 0 | 0 1 0 | 0 0 0 | 0 0 0 | 0 0 0",
      "0 0 0 | 0 0 0 | 0 0 1 | 0 0 0 | 1 0 0 | 0 0 1 | 0 1 0",
      "0 1 0 | 1 0 0 | 0 1 0 | 0 0 0 | 1 0 0 | 0 0 0 | 0 0 1",
      "0 0 0 | 0 0 0 | 0 0 0 | 0 0 0 | 0 0 0 | 0 0 0 | 0 0 0",
      "0 1 0 | 0 0 0 | 1 0 0 | 0 1 0 | 0 0 0 | 0 0 0 | 0 0 1",
      "0 1 0 | 0 0 0 | 1 0 0 | 0 1 0 | 0 0 0 | 1 0 1 | 0 1 0",
  };
  return rows;
}

inline const std::vector<std::string_view>& names() {
  static const std::vector<std::string_view> all = {"ozkarahan89", "li03"};
  return all;
}

inline std::optional<std::string_view> instance_text(std::string_view name) {
  if (name == "ozkarahan89") return kOzkarahan89;
  if (name == "li03") return kLi03;
  return std::nullopt;
}

inline std::shared_ptr<const Instance> load(std::string_view name) {
  auto text = instance_text(name);
  if (!text) throw Error("unknown benchmark '" + std::string(name) + "'");
  return std::make_shared<const Instance>(parse_instance(*text));
}

/// Builds a schedule from day-grouped rows ("0 1 | 1 0 | ...").
inline Schedule schedule_from_rows(std::shared_ptr<const Instance> inst, const std::vector<std::string_view>& rows) {
  Schedule x(std::move(inst));
  if (static_cast<int>(rows.size()) != x.nurses()) throw Error("published roster: expected one row per nurse");
  for (int n = 0; n < x.nurses(); ++n) {
    std::vector<int> digits;
    for (char c : rows[static_cast<std::size_t>(n)])
      if (c == '0' || c == '1') digits.push_back(c - '0');
    if (static_cast<int>(digits.size()) != x.shifts() * x.days()) throw Error("published roster: row has the wrong width");
    for (int d = 0; d < x.days(); ++d)
      for (int s = 0; s < x.shifts(); ++s) x.set(n, s, d, digits[static_cast<std::size_t>(d * x.shifts() + s)] == 1);
  }
  return x;
}

/// Published final roster for a benchmark, bound to `inst`.
inline Schedule published_solution(std::string_view name, std::shared_ptr<const Instance> inst) {
  if (name == "ozkarahan89") return schedule_from_rows(std::move(inst), ozkarahan89_published_rows());
  if (name == "li03") return schedule_from_rows(std::move(inst), li03_published_rows());
  throw Error("no published roster for '" + std::string(name) + "'");
}

}  // namespace roster::benchmarks
