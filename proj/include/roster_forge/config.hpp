#pragma once

// Run configuration shared by the command-line tool: selection rule,
// iteration cap and penalty-weight overrides.
//
// Config file (JSON, all keys optional, unknown keys rejected):
//   {"selection": "greatest-drop" | "paper-3b", "max_iterations": N,
//    "hard_weight": W, "shortfall_weight": W, "excess_weight": W}

#include "roster_forge/io.hpp"
#include "roster_forge/model.hpp"
#include "roster_forge/solver.hpp"

namespace roster {

struct Config {
  Selection selection = Selection::greatest_drop;
  std::optional<long> max_iterations;
  std::optional<Money> hard_weight;       // every hard family
  std::optional<Money> shortfall_weight;  // C8
  std::optional<Money> excess_weight;     // C7

  SolverConfig solver() const {
    SolverConfig sc;
    sc.selection = selection;
    sc.max_iterations = max_iterations;
    return sc;
  }
};

inline std::optional<Selection> selection_from_name(std::string_view name) {
  if (name == "greatest-drop") return Selection::greatest_drop;
  if (name == "paper-3b") return Selection::paper_3b;
  return std::nullopt;
}

inline Config parse_config(std::string_view text) {
  using detail::Reader;
  const auto doc = detail::parse_json_text(text);
  Reader root(doc, "");
  root.require_object({"selection", "max_iterations", "hard_weight", "shortfall_weight", "excess_weight"});
  Config c;
  if (root.has("selection")) {
    auto sel = selection_from_name(root.at("selection").string());
    if (!sel) throw ParseError("expected 'greatest-drop' or 'paper-3b'", "selection");
    c.selection = *sel;
  }
  if (root.has("max_iterations")) {
    c.max_iterations = root.at("max_iterations").integer();
    if (*c.max_iterations <= 0) throw ParseError("must be positive", "max_iterations");
  }
  auto weight = [&](std::string_view key, std::optional<Money>& slot) {
    if (!root.has(key)) return;
    slot = root.at(key).integer();
    if (*slot < 0) throw ParseError("must be non-negative", std::string(key));
  };
  weight("hard_weight", c.hard_weight);
  weight("shortfall_weight", c.shortfall_weight);
  weight("excess_weight", c.excess_weight);
  return c;
}

/// Applies the weight overrides. The result may fail validation (for
/// example a shortfall weight that differs from the other hard weights).
inline Instance with_weights(Instance inst, const Config& c) {
  if (c.hard_weight)
    for (auto& spec : inst.constraint_catalogue)
      if (spec.cls == ConstraintClass::hard) spec.penalty_weight = *c.hard_weight;
  if (c.shortfall_weight) catalogue_entry(inst, Family::C8).penalty_weight = *c.shortfall_weight;
  if (c.excess_weight) catalogue_entry(inst, Family::C7).penalty_weight = *c.excess_weight;
  return inst;
}

/// Non-fatal problems with the configured weights.
inline std::vector<std::string> weight_warnings(const Instance& inst) {
  std::vector<std::string> out;
  if (auto h = hierarchy_defect(inst)) out.push_back(*h);
  return out;
}

}  // namespace roster
