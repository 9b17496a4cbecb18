#pragma once

// Instance files (`.roster.json`), schedule files (csv / json) and roster
// rendering.
//
// Instance schema, version "roster-forge/1". Every key below is required
// unless marked optional; unknown keys are rejected.
//
//   schema_version   "roster-forge/1"
//   name             string
//   provenance       string or array of lines                  (optional)
//   horizon_days     D
//   skill_tiers      number of tiers T (tiers are 0..T-1)
//   shifts           [{id, label, is_night}]                    ids 1..S
//   nurses           [{id, name, skill_tier, unit_cost,
//                      required_shifts: {label: E | null},     (optional, missing = unconstrained)
//                      leave_days: [day],                      (optional, 1-based)
//                      preferences: [{shift, day, reduction}]}](optional)
//   demand           [{shift, tier, days: [D counts]}]          missing rows are zero
//   rules            {max_work_days, consecutive_work_limit, max_consecutive_nights,
//                     rest_after_nights, max_shift_type (optional)}
//   constraints      [{family: "C1".."C10", class: "hard"|"soft", weight, enabled (optional)}]
//
// Schedule csv: header `nurse_id,day,shift,assigned`, 1-based ids, one row
// per cell in (nurse, day, shift) order. Rows may come in any order but
// every cell must appear exactly once.

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "roster_forge/cost.hpp"
#include "roster_forge/model.hpp"
#include "roster_forge/solver.hpp"

namespace roster {

inline constexpr std::string_view kSchemaVersion = "roster-forge/1";

/// Parse failure. `line`/`column` are set for syntax errors, `field` for
/// schema violations (a path such as "nurses[3].unit_cost").
class ParseError : public Error {
public:
  ParseError(std::string message, std::string field = {}, int line = 0, int column = 0)
      : Error(format(message, field, line, column)), field_(std::move(field)), line_(line), column_(column) {}

  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  static std::string format(const std::string& message, const std::string& field, int line, int column) {
    std::string out = "parse error";
    if (line > 0) out += " at line " + std::to_string(line) + ", column " + std::to_string(column);
    if (!field.empty()) out += " in " + field;
    return out + ": " + message;
  }

  std::string field_;
  int line_;
  int column_;
};

enum class Format { table, csv, json };

inline std::optional<Format> format_from_name(std::string_view name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  return std::nullopt;
}

namespace detail {

using nlohmann::json;

inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    int line = 1, column = 1;
    std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(text.empty() ? "empty document" : "malformed JSON", {}, line, column);
  }
}

// Typed accessors that report the offending field path.
class Reader {
public:
  Reader(const json& node, std::string path) : node_(node), path_(std::move(path)) {}

  void require_object(std::initializer_list<std::string_view> allowed) const {
    if (!node_.is_object()) throw ParseError("expected an object", path_);
    for (const auto& [key, _] : node_.items()) {
      bool known = false;
      for (auto a : allowed) known = known || key == a;
      if (!known) throw ParseError("unknown field", child(key));
    }
  }

  bool has(std::string_view key) const { return node_.contains(std::string(key)); }

  Reader at(std::string_view key) const {
    if (!has(key)) throw ParseError("missing required field", child(key));
    return {node_.at(std::string(key)), child(key)};
  }

  Reader operator[](std::size_t i) const { return {node_.at(i), path_ + "[" + std::to_string(i) + "]"}; }

  std::size_t array_size() const {
    if (!node_.is_array()) throw ParseError("expected an array", path_);
    return node_.size();
  }

  long long integer() const {
    if (!node_.is_number_integer()) throw ParseError("expected an integer", path_);
    return node_.get<long long>();
  }
  int small_int() const {
    long long v = integer();
    if (v < -1000000000LL || v > 1000000000LL) throw ParseError("integer out of range", path_);
    return static_cast<int>(v);
  }
  std::string string() const {
    if (!node_.is_string()) throw ParseError("expected a string", path_);
    return node_.get<std::string>();
  }
  bool boolean() const {
    if (!node_.is_boolean()) throw ParseError("expected a boolean", path_);
    return node_.get<bool>();
  }
  bool is_null() const { return node_.is_null(); }
  bool is_string() const { return node_.is_string(); }

  const json& node() const { return node_; }
  const std::string& path() const { return path_; }

private:
  std::string child(std::string_view key) const { return path_.empty() ? std::string(key) : path_ + "." + std::string(key); }

  const json& node_;
  std::string path_;
};

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find('\n', start);
    out.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

/// Parses and validates an instance document.
inline Instance parse_instance(std::string_view text) {
  using detail::Reader;
  const auto doc = detail::parse_json_text(text);
  Reader root(doc, "");
  root.require_object({"schema_version", "name", "provenance", "horizon_days", "skill_tiers", "shifts", "nurses",
                       "demand", "rules", "constraints"});
  if (root.at("schema_version").string() != kSchemaVersion)
    throw ParseError("unsupported schema version (expected " + std::string(kSchemaVersion) + ")", "schema_version");

  Instance inst;
  inst.name = root.at("name").string();
  if (root.has("provenance")) {
    auto prov = root.at("provenance");
    if (prov.is_string()) {
      inst.provenance = prov.string();
    } else {
      for (std::size_t i = 0; i < prov.array_size(); ++i) {
        if (i > 0) inst.provenance += '\n';
        inst.provenance += prov[i].string();
      }
    }
  }
  inst.horizon_days = root.at("horizon_days").small_int();
  if (inst.horizon_days <= 0 || inst.horizon_days > 366) throw ParseError("must be in 1..366", "horizon_days");
  const int D = inst.horizon_days;
  const int tiers = root.at("skill_tiers").small_int();
  if (tiers <= 0 || tiers > 64) throw ParseError("must be in 1..64", "skill_tiers");

  auto shifts = root.at("shifts");
  for (std::size_t i = 0; i < shifts.array_size(); ++i) {
    auto sh = shifts[i];
    sh.require_object({"id", "label", "is_night"});
    inst.shifts.push_back({sh.at("id").small_int(), sh.at("label").string(), sh.at("is_night").boolean()});
  }
  const int S = inst.num_shifts();
  auto shift_index = [&](const Reader& r) {
    auto label = r.string();
    auto s = inst.shift_by_label(label);
    if (!s) throw ParseError("unknown shift label '" + label + "'", r.path());
    return *s;
  };
  auto day_index = [&](const Reader& r) {
    int day = r.small_int();
    if (day < 1 || day > D) throw ParseError("day must be in 1.." + std::to_string(D), r.path());
    return day - 1;
  };

  auto nurses = root.at("nurses");
  for (std::size_t i = 0; i < nurses.array_size(); ++i) {
    auto nr = nurses[i];
    nr.require_object({"id", "name", "skill_tier", "unit_cost", "required_shifts", "leave_days", "preferences"});
    Nurse nurse;
    nurse.id = nr.at("id").small_int();
    nurse.name = nr.at("name").string();
    nurse.skill_tier = nr.at("skill_tier").small_int();
    if (nurse.skill_tier < 0 || nurse.skill_tier >= tiers)
      throw ParseError("must be in 0.." + std::to_string(tiers - 1), nr.at("skill_tier").path());
    nurse.unit_cost = nr.at("unit_cost").integer();
    nurse.required_shifts.assign(static_cast<std::size_t>(S), std::nullopt);
    if (nr.has("required_shifts")) {
      auto req = nr.at("required_shifts");
      if (!req.node().is_object()) throw ParseError("expected an object", req.path());
      for (const auto& [label, value] : req.node().items()) {
        auto s = inst.shift_by_label(label);
        if (!s) throw ParseError("unknown shift label '" + label + "'", req.path());
        Reader entry(value, req.path() + "." + label);
        if (!entry.is_null()) nurse.required_shifts[static_cast<std::size_t>(*s)] = entry.small_int();
      }
    }
    if (nr.has("leave_days")) {
      auto leave = nr.at("leave_days");
      for (std::size_t k = 0; k < leave.array_size(); ++k)
        if (!nurse.leave_days.insert(day_index(leave[k])).second)
          throw ParseError("duplicate leave day", leave[k].path());
    }
    nurse.preference.assign(static_cast<std::size_t>(S) * D, 0);
    if (nr.has("preferences")) {
      auto prefs = nr.at("preferences");
      for (std::size_t k = 0; k < prefs.array_size(); ++k) {
        auto p = prefs[k];
        p.require_object({"shift", "day", "reduction"});
        int s = shift_index(p.at("shift"));
        int d = day_index(p.at("day"));
        auto& slot = nurse.preference[static_cast<std::size_t>(s * D + d)];
        if (slot != 0) throw ParseError("duplicate preference", p.path());
        slot = p.at("reduction").integer();
        if (slot <= 0) throw ParseError("reduction must be positive", p.at("reduction").path());
      }
    }
    inst.nurses.push_back(std::move(nurse));
  }

  inst.demand = Demand(S, D, tiers);
  auto demand = root.at("demand");
  std::set<std::pair<int, int>> rows_seen;
  for (std::size_t i = 0; i < demand.array_size(); ++i) {
    auto row = demand[i];
    row.require_object({"shift", "tier", "days"});
    int s = shift_index(row.at("shift"));
    int t = row.at("tier").small_int();
    if (t < 0 || t >= tiers) throw ParseError("must be in 0.." + std::to_string(tiers - 1), row.at("tier").path());
    if (!rows_seen.insert({s, t}).second) throw ParseError("duplicate (shift, tier) row", row.path());
    auto days = row.at("days");
    if (days.array_size() != static_cast<std::size_t>(D))
      throw ParseError("expected " + std::to_string(D) + " day counts", days.path());
    for (int d = 0; d < D; ++d) inst.demand.at(s, d, t) = days[static_cast<std::size_t>(d)].small_int();
  }

  auto rules = root.at("rules");
  rules.require_object(
      {"max_work_days", "consecutive_work_limit", "max_consecutive_nights", "rest_after_nights", "max_shift_type"});
  inst.rules.max_work_days = rules.at("max_work_days").small_int();
  inst.rules.consecutive_work_limit = rules.at("consecutive_work_limit").small_int();
  inst.rules.max_consecutive_nights = rules.at("max_consecutive_nights").small_int();
  inst.rules.rest_after_nights = rules.at("rest_after_nights").small_int();
  if (rules.has("max_shift_type") && !rules.at("max_shift_type").is_null())
    inst.rules.max_shift_type = rules.at("max_shift_type").small_int();

  auto constraints = root.at("constraints");
  for (std::size_t i = 0; i < constraints.array_size(); ++i) {
    auto c = constraints[i];
    c.require_object({"family", "class", "weight", "enabled"});
    auto family = family_from_name(c.at("family").string());
    if (!family) throw ParseError("unknown constraint family", c.at("family").path());
    auto cls = c.at("class").string();
    if (cls != "hard" && cls != "soft") throw ParseError("class must be 'hard' or 'soft'", c.at("class").path());
    bool enabled = c.has("enabled") ? c.at("enabled").boolean() : true;
    inst.constraint_catalogue.push_back(
        {*family, cls == "hard" ? ConstraintClass::hard : ConstraintClass::soft, c.at("weight").integer(), enabled});
  }

  auto defects = validate_instance(inst);
  if (!defects.empty()) throw ValidationError(std::move(defects));
  return inst;
}

inline nlohmann::json instance_to_json(const Instance& inst) {
  using nlohmann::json;
  const int D = inst.horizon_days;
  json doc = json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["name"] = inst.name;
  doc["provenance"] = detail::split_lines(inst.provenance);
  doc["horizon_days"] = D;
  doc["skill_tiers"] = inst.num_tiers();
  doc["shifts"] = json::array();
  for (const auto& sh : inst.shifts) doc["shifts"].push_back({{"id", sh.id}, {"label", sh.label}, {"is_night", sh.is_night}});
  doc["nurses"] = json::array();
  for (const auto& nurse : inst.nurses) {
    json required = json::object();
    for (int s = 0; s < inst.num_shifts(); ++s) {
      const auto& e = nurse.required_shifts[static_cast<std::size_t>(s)];
      if (e) required[inst.shifts[static_cast<std::size_t>(s)].label] = *e;
    }
    json leave = json::array();
    for (int d : nurse.leave_days) leave.push_back(d + 1);
    json prefs = json::array();
    for (int s = 0; s < inst.num_shifts(); ++s)
      for (int d = 0; d < D; ++d)
        if (auto p = nurse.preference_at(s, d, D); p != 0)
          prefs.push_back({{"shift", inst.shifts[static_cast<std::size_t>(s)].label}, {"day", d + 1}, {"reduction", p}});
    doc["nurses"].push_back({{"id", nurse.id},
                             {"name", nurse.name},
                             {"skill_tier", nurse.skill_tier},
                             {"unit_cost", nurse.unit_cost},
                             {"required_shifts", required},
                             {"leave_days", leave},
                             {"preferences", prefs}});
  }
  doc["demand"] = json::array();
  for (int s = 0; s < inst.num_shifts(); ++s)
    for (int t = 0; t < inst.num_tiers(); ++t) {
      json days = json::array();
      bool any = false;
      for (int d = 0; d < D; ++d) {
        days.push_back(inst.demand.at(s, d, t));
        any = any || inst.demand.at(s, d, t) != 0;
      }
      if (any) doc["demand"].push_back({{"shift", inst.shifts[static_cast<std::size_t>(s)].label}, {"tier", t}, {"days", days}});
    }
  json rules = {{"max_work_days", inst.rules.max_work_days},
                {"consecutive_work_limit", inst.rules.consecutive_work_limit},
                {"max_consecutive_nights", inst.rules.max_consecutive_nights},
                {"rest_after_nights", inst.rules.rest_after_nights}};
  if (inst.rules.max_shift_type) rules["max_shift_type"] = *inst.rules.max_shift_type;
  doc["rules"] = rules;
  doc["constraints"] = json::array();
  for (const auto& c : inst.constraint_catalogue)
    doc["constraints"].push_back({{"family", family_name(c.family)},
                                  {"class", c.cls == ConstraintClass::hard ? "hard" : "soft"},
                                  {"weight", c.penalty_weight},
                                  {"enabled", c.enabled}});
  return doc;
}

inline std::string render_instance(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Schedules

inline std::string render_schedule_csv(const Schedule& x) {
  std::string out = "nurse_id,day,shift,assigned\n";
  for (int n = 0; n < x.nurses(); ++n)
    for (int d = 0; d < x.days(); ++d)
      for (int s = 0; s < x.shifts(); ++s)
        out += std::to_string(n + 1) + "," + std::to_string(d + 1) + "," + std::to_string(s + 1) + "," +
               (x(n, s, d) ? "1" : "0") + "\n";
  return out;
}

inline nlohmann::json schedule_to_json(const Schedule& x) {
  nlohmann::json rows = nlohmann::json::array();
  for (int n = 0; n < x.nurses(); ++n) {
    nlohmann::json shifts = nlohmann::json::array();
    for (int s = 0; s < x.shifts(); ++s) {
      nlohmann::json days = nlohmann::json::array();
      for (int d = 0; d < x.days(); ++d) days.push_back(x(n, s, d) ? 1 : 0);
      shifts.push_back(days);
    }
    rows.push_back(shifts);
  }
  return {{"nurses", x.nurses()}, {"shifts", x.shifts()}, {"days", x.days()}, {"x", rows}};
}

namespace detail {

inline Schedule parse_schedule_csv(std::string_view text, std::shared_ptr<const Instance> inst) {
  Schedule x(std::move(inst));
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  std::vector<char> seen(x.cells(), 0);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!header) {
      if (line != "nurse_id,day,shift,assigned") throw ParseError("expected header 'nurse_id,day,shift,assigned'", {}, line_no, 1);
      header = true;
      continue;
    }
    std::array<long, 4> v{};
    std::size_t pos = 0;
    for (int k = 0; k < 4; ++k) {
      auto end = line.find(',', pos);
      if ((k < 3) == (end == std::string::npos)) throw ParseError("expected 4 comma-separated integers", {}, line_no, 1);
      std::string_view field(line.data() + pos, (end == std::string::npos ? line.size() : end) - pos);
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v[static_cast<std::size_t>(k)]);
      if (ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError("expected an integer", {}, line_no, static_cast<int>(pos) + 1);
      pos = end + 1;
    }
    const long n = v[0] - 1, d = v[1] - 1, s = v[2] - 1;
    if (n < 0 || n >= x.nurses() || d < 0 || d >= x.days() || s < 0 || s >= x.shifts())
      throw ParseError("cell outside the instance's " + std::to_string(x.nurses()) + "x" + std::to_string(x.shifts()) +
                           "x" + std::to_string(x.days()) + " dimensions",
                       {}, line_no, 1);
    if (v[3] != 0 && v[3] != 1) throw ParseError("assigned must be 0 or 1", {}, line_no, 1);
    auto idx = (static_cast<std::size_t>(n) * x.shifts() + static_cast<std::size_t>(s)) * x.days() + static_cast<std::size_t>(d);
    if (seen[idx]) throw ParseError("duplicate cell", {}, line_no, 1);
    seen[idx] = 1;
    x.set(static_cast<int>(n), static_cast<int>(s), static_cast<int>(d), v[3] == 1);
  }
  if (!header) throw ParseError("empty schedule document");
  const auto listed = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1));
  if (listed != x.cells())
    throw ParseError("expected " + std::to_string(x.cells()) + " cells for a " + std::to_string(x.nurses()) + "x" +
                     std::to_string(x.shifts()) + "x" + std::to_string(x.days()) + " instance, got " +
                     std::to_string(listed));
  return x;
}

inline Schedule parse_schedule_json(std::string_view text, std::shared_ptr<const Instance> inst) {
  const auto doc = parse_json_text(text);
  Reader root(doc, "");
  Reader sched = root.has("schedule") ? root.at("schedule") : root;
  sched.require_object({"nurses", "shifts", "days", "x"});
  Schedule x(std::move(inst));
  if (sched.at("nurses").small_int() != x.nurses() || sched.at("shifts").small_int() != x.shifts() ||
      sched.at("days").small_int() != x.days())
    throw ParseError("dimensions do not match the instance", sched.path());
  auto rows = sched.at("x");
  if (rows.array_size() != static_cast<std::size_t>(x.nurses())) throw ParseError("expected one row per nurse", rows.path());
  for (int n = 0; n < x.nurses(); ++n) {
    auto per_shift = rows[static_cast<std::size_t>(n)];
    if (per_shift.array_size() != static_cast<std::size_t>(x.shifts()))
      throw ParseError("expected one entry per shift", per_shift.path());
    for (int s = 0; s < x.shifts(); ++s) {
      auto days = per_shift[static_cast<std::size_t>(s)];
      if (days.array_size() != static_cast<std::size_t>(x.days())) throw ParseError("expected one entry per day", days.path());
      for (int d = 0; d < x.days(); ++d) {
        int v = days[static_cast<std::size_t>(d)].small_int();
        if (v != 0 && v != 1) throw ParseError("entries must be 0 or 1", days[static_cast<std::size_t>(d)].path());
        x.set(n, s, d, v == 1);
      }
    }
  }
  return x;
}

}  // namespace detail

/// Reads a schedule in csv or json form (json if the first non-blank
/// character is '{'). JSON may be a bare schedule or a full solve result.
inline Schedule parse_schedule(std::string_view text, std::shared_ptr<const Instance> inst) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty schedule document");
  if (text[first] == '{') return detail::parse_schedule_json(text, std::move(inst));
  return detail::parse_schedule_csv(text, std::move(inst));
}

// ---------------------------------------------------------------------------
// Results

inline std::string describe_locus(const Instance& inst, const Violation& v) {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += ", ";
  };
  if (v.nurse) {
    sep();
    out += "nurse " + inst.nurse(*v.nurse).name;
  }
  if (v.shift) {
    sep();
    out += "shift " + inst.shifts[static_cast<std::size_t>(*v.shift)].label;
  }
  if (v.day) {
    sep();
    out += "day " + std::to_string(*v.day + 1);
  }
  if (v.tier) {
    sep();
    out += "tier " + std::to_string(*v.tier);
  }
  return out;
}

inline nlohmann::json breakdown_to_json(const CostBreakdown& b) {
  nlohmann::json penalties = nlohmann::json::object();
  for (const auto& [f, p] : b.penalties) penalties[std::string(family_name(f))] = p;
  return {{"base_cost", b.base_cost},     {"preference_reduction", b.preference_reduction},
          {"penalties", penalties},       {"hard_penalty", b.hard_penalty},
          {"soft_penalty", b.soft_penalty}, {"total", b.total}};
}

inline nlohmann::json position_to_json(const Position& p) {
  return {{"shift", p.shift + 1}, {"day", p.day + 1}, {"tier", p.tier}};
}

inline nlohmann::json trace_to_json(const SolveTrace& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& ev : trace.events) {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, ImbalancePicked>) {
            out.push_back({{"event", "imbalance_picked"}, {"position", position_to_json(e.position)}, {"shortfall", e.shortfall}});
          } else if constexpr (std::is_same_v<T, Assigned>) {
            out.push_back({{"event", "assigned"}, {"nurse", e.nurse + 1}, {"position", position_to_json(e.position)}, {"delta", e.delta}});
          } else if constexpr (std::is_same_v<T, RemovedOverAssigned>) {
            out.push_back({{"event", "removed"}, {"nurse", e.nurse + 1}, {"position", position_to_json(e.position)}, {"reason", e.reason}});
          } else {
            out.push_back({{"event", "terminated"}, {"reason", e.reason}});
          }
        },
        ev);
  }
  return out;
}

inline nlohmann::json result_to_json(const SolveResult& r) {
  const double ms = std::chrono::duration<double, std::milli>(r.wall_time).count();
  return {{"instance", r.schedule.instance().name},
          {"feasible", r.feasible},
          {"converged", r.converged},
          {"iterations", r.iterations},
          {"wall_time_ms", std::round(ms * 1000.0) / 1000.0},
          {"breakdown", breakdown_to_json(r.breakdown)},
          {"schedule", schedule_to_json(r.schedule)},
          {"trace", trace_to_json(r.trace)}};
}

/// Roster table: nurses as rows, day x shift columns, then the nurse's base
/// cost and the penalties charged to that nurse.
inline std::string render_table(const Schedule& x, const CostBreakdown& b) {
  const auto& inst = x.instance();
  std::vector<Money> charged(static_cast<std::size_t>(x.nurses()), 0);
  Money unattributed = 0;
  for (const auto& v : all_violations(x)) (v.nurse ? charged[static_cast<std::size_t>(*v.nurse)] : unattributed) += v.penalty;

  std::size_t name_width = 5;
  for (const auto& nurse : inst.nurses) name_width = std::max(name_width, nurse.name.size());

  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(name_width)) << "Nurse" << std::right << std::setw(8) << "Cost";
  for (int d = 0; d < x.days(); ++d) {
    out << " |";
    for (int s = 0; s < x.shifts(); ++s) {
      std::string head = std::to_string(d + 1) + inst.shifts[static_cast<std::size_t>(s)].label;
      out << std::setw(std::max(3, static_cast<int>(head.size()) + 1)) << head;
    }
  }
  out << " |" << std::setw(9) << "Final" << "\n";
  for (int n = 0; n < x.nurses(); ++n) {
    const auto& nurse = inst.nurse(n);
    out << std::left << std::setw(static_cast<int>(name_width)) << nurse.name << std::right << std::setw(8)
        << nurse.unit_cost * x.total_assignments(n);
    for (int d = 0; d < x.days(); ++d) {
      out << " |";
      for (int s = 0; s < x.shifts(); ++s) {
        std::string head = std::to_string(d + 1) + inst.shifts[static_cast<std::size_t>(s)].label;
        out << std::setw(std::max(3, static_cast<int>(head.size()) + 1)) << (x(n, s, d) ? 1 : 0);
      }
    }
    out << " |" << std::setw(9) << charged[static_cast<std::size_t>(n)] << "\n";
  }
  out << "coverage penalties: " << unattributed << "\n";
  out << "base " << b.base_cost << "  preference -" << b.preference_reduction << "  hard " << b.hard_penalty << "  soft "
      << b.soft_penalty << "  total " << b.total << "\n";
  return out.str();
}

inline std::string render_schedule(const SolveResult& r, Format format) {
  switch (format) {
    case Format::table: return render_table(r.schedule, r.breakdown);
    case Format::csv: return render_schedule_csv(r.schedule);
    case Format::json: return result_to_json(r).dump(2) + "\n";
  }
  return {};
}

}  // namespace roster
