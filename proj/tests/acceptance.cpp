// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "roster_forge/roster_forge.hpp"

using namespace roster;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double ms(std::chrono::nanoseconds ns) { return std::chrono::duration<double, std::milli>(ns).count(); }

std::string fmt_ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", v);
  return buf;
}

void benchmark_feasibility() {
  {
    auto inst = benchmarks::load("ozkarahan89");
    auto r = solve(inst);
    const bool rules = check_one_shift_per_day(r.schedule).empty() && check_coverage(r.schedule).empty() &&
                       check_required_shifts(r.schedule).empty();
    const bool ok = r.feasible && r.breakdown.soft_penalty <= 100 && rules && ms(r.wall_time) < 2000.0;
    report(1, ok, "ozkarahan89 feasible, soft penalty <= 100, < 2 s",
           "feasible=" + std::to_string(r.feasible) + " soft=" + std::to_string(r.breakdown.soft_penalty) +
               " coverage/C1/C10 clean=" + std::to_string(rules) + " time=" + fmt_ms(ms(r.wall_time)));
  }
  {
    auto r = solve(benchmarks::load("li03"));
    const bool ok = r.feasible && ms(r.wall_time) < 5000.0;
    report(2, ok, "li03 feasible, < 5 s",
           "feasible=" + std::to_string(r.feasible) + " soft=" + std::to_string(r.breakdown.soft_penalty) +
               " time=" + fmt_ms(ms(r.wall_time)));
  }
}

void published_rosters() {
  bool ok = true;
  std::string detail;
  for (auto name : benchmarks::names()) {
    auto inst = benchmarks::load(name);
    auto b = evaluate(benchmarks::published_solution(name, inst));
    ok = ok && b.hard_penalty == 0;
    detail += std::string(name) + " hard=" + std::to_string(b.hard_penalty) + " soft=" + std::to_string(b.soft_penalty) + " ";
  }
  report(3, ok, "published rosters have no hard violations", detail);
}

void delta_exactness() {
  std::mt19937_64 rng(20240601);
  int flips = 0, mismatches = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    RandomInstanceParams p{2 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 3), 2 + static_cast<int>(rng() % 6)};
    auto inst = std::make_shared<const Instance>(random_instance(1000 + i, p));
    Schedule x(inst);
    const auto density = rng() % 70;
    for (int n = 0; n < x.nurses(); ++n)
      for (int s = 0; s < x.shifts(); ++s)
        for (int d = 0; d < x.days(); ++d) x.set(n, s, d, rng() % 100 < density);
    for (int k = 0; k < 20; ++k) {
      int n = static_cast<int>(rng() % static_cast<std::uint64_t>(x.nurses()));
      int s = static_cast<int>(rng() % static_cast<std::uint64_t>(x.shifts()));
      int d = static_cast<int>(rng() % static_cast<std::uint64_t>(x.days()));
      const bool to = !x(n, s, d);
      Money incremental = delta_evaluate(x, n, s, d, to);
      Money before = evaluate(x).total;
      x.set(n, s, d, to);
      Money full = evaluate(x).total - before;
      ++flips;
      mismatches += incremental != full;
    }
  }
  report(4, flips == 1000 && mismatches == 0, "delta equals full recompute",
         std::to_string(flips) + " flips over 50 instances, " + std::to_string(mismatches) + " mismatches");
}

void oracle_gap() {
  auto started = std::chrono::steady_clock::now();
  std::mt19937_64 sizes(77);
  int dominated = 0, heuristic_misses = 0;
  double gap_sum = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomInstanceParams p{1 + static_cast<int>(sizes() % 3), 1 + static_cast<int>(sizes() % 2), 1 + static_cast<int>(sizes() % 3)};
    auto g = gap_report(std::make_shared<const Instance>(random_instance(seed, p)));
    dominated += g.heuristic_cost >= g.optimal_cost;
    heuristic_misses += g.optimum_feasible && !g.heuristic_feasible;
    gap_sum += g.relative_gap;
  }
  const double elapsed = ms(std::chrono::steady_clock::now() - started);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/100 dominated, mean relative gap %.4f, %d feasible optima missed, time=%s", dominated,
                gap_sum / 100.0, heuristic_misses, fmt_ms(elapsed).c_str());
  report(5, dominated == 100 && elapsed < 60000.0, "heuristic never beats the oracle, < 60 s", buf);
}

void determinism() {
  bool ok = true;
  for (auto name : benchmarks::names()) {
    auto inst = benchmarks::load(name);
    auto a = solve(inst);
    auto b = solve(inst);
    ok = ok && trace_to_json(a.trace).dump() == trace_to_json(b.trace).dump() &&
         render_schedule_csv(a.schedule) == render_schedule_csv(b.schedule);
  }
  report(6, ok, "repeated solves are byte-identical", "traces and schedules compared for both benchmarks");
}

void termination() {
  std::mt19937_64 rng(4242);
  int halted = 0, feasible = 0, capped = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    RandomInstanceParams p{1 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 7)};
    auto inst = std::make_shared<const Instance>(random_instance(50000 + i, p));
    try {
      auto r = solve(inst);
      if (r.iterations <= default_max_iterations(*inst)) ++halted;
      feasible += r.feasible;
      capped += !r.converged;
    } catch (const std::exception& e) {
      std::printf("  instance %llu threw: %s\n", static_cast<unsigned long long>(i), e.what());
    }
  }
  report(7, halted == 1000, "solver halts within the iteration cap",
         std::to_string(halted) + "/1000 halted, " + std::to_string(feasible) + " feasible, " +
             std::to_string(1000 - feasible) + " infeasible, " + std::to_string(capped) + " hit the cap");
}

}  // namespace

int main() {
  benchmark_feasibility();
  published_rosters();
  delta_exactness();
  oracle_gap();
  determinism();
  termination();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
