// roster-forge command-line tool.
//
// Exit codes:
//   0  success (solve: feasible; check: no hard violations)
//   1  usage, parse or validation error
//   2  solve converged without a feasible roster; check found hard violations
//   3  solve hit the iteration cap

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "roster_forge/roster_forge.hpp"

using namespace roster;

namespace {

enum class LogLevel { off, info, trace };

LogLevel log_level() {
  const char* env = std::getenv("ROSTER_FORGE_LOG");
  if (env == nullptr) return LogLevel::off;
  std::string_view v(env);
  if (v == "trace") return LogLevel::trace;
  if (v == "info" || v == "debug") return LogLevel::info;
  return LogLevel::off;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// A file path, or the name of an embedded benchmark.
Instance load_instance(const std::string& source) {
  if (std::filesystem::exists(source)) return parse_instance(read_file(source));
  if (auto text = benchmarks::instance_text(source)) return parse_instance(*text);
  throw Error("no such file or benchmark: " + source);
}

struct RunOptions {
  std::string config_path;
  std::string format = "table";
  std::string selection;
  long max_iterations = 0;
};

void add_run_options(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--config", o.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--selection", o.selection, "Nurse selection rule")
      ->check(CLI::IsMember({"greatest-drop", "paper-3b"}));
  cmd->add_option("--max-iterations", o.max_iterations, "Iteration cap")->check(CLI::PositiveNumber);
}

Config resolve_config(const RunOptions& o) {
  Config c;
  if (!o.config_path.empty()) c = parse_config(read_file(o.config_path));
  if (!o.selection.empty()) c.selection = *selection_from_name(o.selection);
  if (o.max_iterations > 0) c.max_iterations = o.max_iterations;
  return c;
}

std::string penalty_lines(const CostBreakdown& b) {
  std::ostringstream out;
  for (const auto& [f, p] : b.penalties)
    out << std::left << std::setw(4) << family_name(f) << std::right << std::setw(12) << p << "  "
        << family_description(f) << "\n";
  return out.str();
}

void log_trace(const SolveTrace& trace) {
  for (const auto& ev : trace_to_json(trace)) std::cerr << "trace " << ev.dump() << "\n";
}

int cmd_solve(const std::string& source, const RunOptions& o) {
  const Config config = resolve_config(o);
  auto inst = std::make_shared<const Instance>(with_weights(load_instance(source), config));
  for (const auto& w : weight_warnings(*inst)) std::cerr << "warning: " << w << "\n";

  auto result = solve(inst, config.solver());
  const auto level = log_level();
  if (level == LogLevel::trace) log_trace(result.trace);

  const auto format = *format_from_name(o.format);
  const double ms = std::chrono::duration<double, std::milli>(result.wall_time).count();
  std::cout << render_schedule(result, format);
  std::ostream& summary = format == Format::table ? std::cout : std::cerr;
  if (format == Format::table) summary << penalty_lines(result.breakdown);
  char line[128];
  std::snprintf(line, sizeof line, "%s, %s, %ld iterations, wall time %.0f ms\n",
                result.feasible ? "feasible" : "infeasible", result.converged ? "converged" : "iteration cap reached",
                result.iterations, ms);
  if (format == Format::table || level != LogLevel::off) summary << line;

  if (!result.converged) return 3;
  return result.feasible ? 0 : 2;
}

int cmd_check(const std::string& instance_source, const std::string& schedule_path) {
  auto inst = std::make_shared<const Instance>(load_instance(instance_source));
  auto x = parse_schedule(read_file(schedule_path), inst);
  auto violations = all_violations(x);
  for (const auto& v : violations)
    std::cout << (inst->is_hard(v.family) ? "hard " : "soft ") << family_name(v.family) << " [" << describe_locus(*inst, v)
              << "] magnitude " << v.magnitude << " penalty " << v.penalty << "\n";
  auto b = evaluate(x);
  std::cout << violations.size() << " violations; hard penalty " << b.hard_penalty << ", soft penalty "
            << b.soft_penalty << ", total " << b.total << "\n";
  return b.hard_penalty == 0 ? 0 : 2;
}

struct GapOptions {
  int count = 100;
  int nurses = 3;
  int shifts = 2;
  int days = 3;
  std::uint64_t seed = 1;
  std::string format = "table";
};

int cmd_gap(const GapOptions& o, const RunOptions& run) {
  const Config config = resolve_config(run);
  std::mt19937_64 rng(o.seed);
  nlohmann::json rows = nlohmann::json::array();
  double gap_sum = 0.0;
  int misses = 0;
  const bool json = o.format == "json";
  if (!json) std::cout << "instance  heuristic    optimal      gap  feasible(h/o)\n";
  for (int i = 0; i < o.count; ++i) {
    auto inst = std::make_shared<const Instance>(random_instance(rng, {o.nurses, o.shifts, o.days}));
    auto g = gap_report(inst, config.solver());
    gap_sum += g.relative_gap;
    misses += g.optimum_feasible && !g.heuristic_feasible;
    if (json) {
      rows.push_back({{"index", i},
                      {"heuristic_cost", g.heuristic_cost},
                      {"optimal_cost", g.optimal_cost},
                      {"relative_gap", g.relative_gap},
                      {"heuristic_feasible", g.heuristic_feasible},
                      {"optimum_feasible", g.optimum_feasible}});
    } else {
      char line[128];
      std::snprintf(line, sizeof line, "%8d %10lld %10lld %8.4f  %d/%d\n", i, static_cast<long long>(g.heuristic_cost),
                    static_cast<long long>(g.optimal_cost), g.relative_gap, g.heuristic_feasible, g.optimum_feasible);
      std::cout << line;
    }
  }
  const double mean = o.count == 0 ? 0.0 : gap_sum / o.count;
  if (json) {
    nlohmann::json doc = {{"seed", o.seed}, {"count", o.count}, {"mean_relative_gap", mean},
                          {"feasible_optima_missed", misses}, {"instances", rows}};
    std::cout << doc.dump(2) << "\n";
  } else {
    char line[128];
    std::snprintf(line, sizeof line, "instances %d, mean relative gap %.4f, feasible optima missed %d\n", o.count, mean,
                  misses);
    std::cout << line;
  }
  return 0;
}

int cmd_export(const std::string& name, bool published) {
  auto text = benchmarks::instance_text(name);
  if (!text) throw Error("no such benchmark: " + name);
  if (!published) {
    std::cout << *text;
    return 0;
  }
  auto inst = benchmarks::load(name);
  std::cout << render_schedule_csv(benchmarks::published_solution(name, inst));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cost-based nurse rostering"};
  app.require_subcommand(1);

  RunOptions run;
  std::string instance_source;
  auto* solve_cmd = app.add_subcommand("solve", "Build a roster for an instance file or benchmark name");
  solve_cmd->add_option("instance", instance_source, "Instance file or benchmark name")->required();
  add_run_options(solve_cmd, run);

  std::string schedule_path;
  auto* check_cmd = app.add_subcommand("check", "Report the violations of a schedule");
  check_cmd->add_option("instance", instance_source, "Instance file or benchmark name")->required();
  check_cmd->add_option("schedule", schedule_path, "Schedule file (csv or json)")->required()->check(CLI::ExistingFile);

  GapOptions gap;
  auto* gap_cmd = app.add_subcommand("gap", "Compare the heuristic with the exact optimum on random tiny instances");
  gap_cmd->add_option("--count", gap.count, "Number of instances")->check(CLI::NonNegativeNumber);
  gap_cmd->add_option("--nurses", gap.nurses)->check(CLI::Range(1, 8));
  gap_cmd->add_option("--shifts", gap.shifts)->check(CLI::Range(1, 4));
  gap_cmd->add_option("--days", gap.days)->check(CLI::Range(1, 7));
  gap_cmd->add_option("--seed", gap.seed, "Generator seed");
  gap_cmd->add_option("--config", run.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  gap_cmd->add_option("--selection", run.selection)->check(CLI::IsMember({"greatest-drop", "paper-3b"}));
  gap_cmd->add_option("--format", gap.format)->check(CLI::IsMember({"table", "json"}));

  std::string export_name;
  bool published = false;
  auto* export_cmd = app.add_subcommand("export", "Print an embedded benchmark instance or its published roster");
  export_cmd->add_option("benchmark", export_name, "ozkarahan89 or li03")->required();
  export_cmd->add_flag("--published", published, "Print the published roster as csv");

  app.add_subcommand("list", "List embedded benchmarks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve_cmd) return cmd_solve(instance_source, run);
    if (*check_cmd) return cmd_check(instance_source, schedule_path);
    if (*gap_cmd) return cmd_gap(gap, run);
    if (*export_cmd) return cmd_export(export_name, published);
    for (auto name : benchmarks::names()) std::cout << name << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
