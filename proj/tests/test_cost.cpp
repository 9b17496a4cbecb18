#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace roster;
using roster::testing::blank;
using roster::testing::kHard;
using roster::testing::recompute_delta;
using roster::testing::share;

namespace {

int nurse_named(const Instance& inst, std::string_view name) {
  for (int n = 0; n < inst.num_nurses(); ++n)
    if (inst.nurse(n).name == name) return n;
  FAIL("no nurse " << name);
  return -1;
}

Schedule random_fill(std::shared_ptr<const Instance> inst, std::mt19937_64& rng, int percent) {
  Schedule x(std::move(inst));
  for (int n = 0; n < x.nurses(); ++n)
    for (int s = 0; s < x.shifts(); ++s)
      for (int d = 0; d < x.days(); ++d) x.set(n, s, d, static_cast<int>(rng() % 100) < percent);
  return x;
}

}  // namespace

TEST_CASE("empty ozkarahan schedule pays only for unmet demand") {
  auto inst = benchmarks::load("ozkarahan89");
  auto b = evaluate(Schedule(inst));
  CHECK(b.base_cost == 0);
  CHECK(b.preference_reduction == 0);

  Money demand = 0;
  for (int s = 0; s < inst->num_shifts(); ++s)
    for (int d = 0; d < inst->horizon_days; ++d)
      for (int t = 0; t < inst->num_tiers(); ++t) demand += inst->demand.at(s, d, t);
  // Demand was rebuilt from the published roster's column sums.
  auto published = benchmarks::published_solution("ozkarahan89", inst);
  Money staffed = 0;
  for (int n = 0; n < published.nurses(); ++n) staffed += published.total_assignments(n);
  CHECK(demand == staffed);
  CHECK(demand == 47);
  CHECK(b.penalty(Family::C8) == demand * inst->weight(Family::C8));
  CHECK(b.total == b.penalty(Family::C8) + b.penalty(Family::C10));
  CHECK(b.penalty(Family::C7) == 0);
}

TEST_CASE("published ozkarahan roster carries a penalty of 100 on RN2") {
  auto inst = benchmarks::load("ozkarahan89");
  auto x = benchmarks::published_solution("ozkarahan89", inst);
  auto b = evaluate(x);
  CHECK(b.hard_penalty == 0);
  CHECK(b.soft_penalty == 100);

  auto violations = all_violations(x);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].family == Family::C2);
  CHECK(violations[0].nurse == nurse_named(*inst, "RN2"));
  CHECK(violations[0].penalty == 100);

  CHECK(check_one_shift_per_day(x).empty());
  CHECK(check_leave(x).empty());
  CHECK(check_coverage(x).empty());
  CHECK(check_required_shifts(x).empty());
  CHECK_FALSE(inst->night_shift());
  CHECK(check_night_rest(x).empty());
}

TEST_CASE("published li03 roster has no hard violations") {
  auto inst = benchmarks::load("li03");
  auto x = benchmarks::published_solution("li03", inst);
  auto b = evaluate(x);
  CHECK(b.hard_penalty == 0);
  CHECK(check_max_work_days(x).empty());
  CHECK(check_night_morning(x).empty());
  CHECK(check_required_shifts(x).empty());
  CHECK(check_coverage(x).empty());
  // Two nurses work a double shift in the published roster.
  CHECK(check_one_shift_per_day(x).size() == 2);
  CHECK(b.soft_penalty == 2 * inst->weight(Family::C1));
}

TEST_CASE("a single assignment costs the nurse's unit cost") {
  auto inst = blank(1, 1, 1, 600);
  inst.demand.at(0, 0, 0) = 1;
  Schedule x(share(inst));
  x.set(0, 0, 0, true);
  auto b = evaluate(x);
  CHECK(b.base_cost == 600);
  CHECK(b.total == 600);
  CHECK(all_violations(x).empty());
}

TEST_CASE("evaluate is deterministic and its parts add up") {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto x = random_fill(share(random_instance(seed, {3, 3, 4})), rng, 40);
    auto b = evaluate(x);
    CHECK(b == evaluate(x));
    Money sum = 0;
    for (auto [f, p] : b.penalties) {
      CHECK(p >= 0);
      sum += p;
    }
    CHECK(sum == b.hard_penalty + b.soft_penalty);
    CHECK(b.total == b.base_cost - b.preference_reduction + sum);
    for (const auto& v : all_violations(x)) {
      CHECK(v.magnitude >= 1);
      CHECK(v.penalty == v.magnitude * x.instance().weight(v.family));
    }
  }
}

TEST_CASE("C1 one shift per day") {
  auto inst = share(blank(1, 3, 4));
  Schedule x(inst);
  x.set(0, 0, 2, true);
  x.set(0, 1, 2, true);
  auto v = check_one_shift_per_day(x);
  REQUIRE(v.size() == 1);
  CHECK(v[0].magnitude == 1);
  CHECK(v[0].day == 2);

  x.set(0, 2, 2, true);
  v = check_one_shift_per_day(x);
  REQUIRE(v.size() == 1);
  CHECK(v[0].magnitude == 2);
}

TEST_CASE("C2 work-day cap") {
  auto inst = blank(1, 1, 7);
  inst.rules.max_work_days = 5;
  inst.rules.consecutive_work_limit = 5;
  Schedule x(share(inst));
  CHECK(check_max_work_days(x).empty());
  for (int d = 0; d < 7; ++d) x.set(0, 0, d, true);
  auto v = check_max_work_days(x);
  REQUIRE(v.size() == 1);
  CHECK(v[0].magnitude == 2);
}

TEST_CASE("C3 needs a rest day in every z+1 window") {
  auto inst = blank(1, 1, 7);
  inst.rules.consecutive_work_limit = 5;
  auto shared = share(inst);

  Schedule six(shared);
  for (int d = 0; d < 6; ++d) six.set(0, 0, d, true);
  auto v = check_consecutive_work(six);
  REQUIRE(v.size() == 1);
  CHECK(v[0].day == 0);
  CHECK(v[0].magnitude == 1);

  Schedule five(shared);
  for (int d = 0; d < 5; ++d) five.set(0, 0, d, true);
  CHECK(check_consecutive_work(five).empty());

  Schedule alternate(shared);
  for (int d = 0; d < 7; d += 2) alternate.set(0, 0, d, true);
  CHECK(check_consecutive_work(alternate).empty());

  Schedule all(shared);
  for (int d = 0; d < 7; ++d) all.set(0, 0, d, true);
  CHECK(check_consecutive_work(all).size() == 2);
}

TEST_CASE("C4 rest after a night run") {
  auto inst = blank(1, 3, 6);
  inst.shifts[2].is_night = true;
  inst.rules.max_consecutive_nights = 2;
  inst.rules.rest_after_nights = 1;
  auto shared = share(inst);

  Schedule worked(shared);
  worked.set(0, 2, 0, true);
  worked.set(0, 2, 1, true);
  worked.set(0, 1, 2, true);
  auto v = check_night_rest(worked);
  REQUIRE(v.size() == 1);
  CHECK(v[0].magnitude == 1);

  Schedule rested(shared);
  rested.set(0, 2, 0, true);
  rested.set(0, 2, 1, true);
  rested.set(0, 0, 4, true);
  CHECK(check_night_rest(rested).empty());

  // Both rest days worked.
  rested.set(0, 1, 2, true);
  rested.set(0, 1, 3, true);
  v = check_night_rest(rested);
  REQUIRE(v.size() == 1);
  CHECK(v[0].magnitude == 2);

  // A run shorter than i triggers nothing.
  Schedule short_run(shared);
  short_run.set(0, 2, 0, true);
  short_run.set(0, 1, 1, true);
  CHECK(check_night_rest(short_run).empty());
}

TEST_CASE("C5 leave days") {
  auto inst = blank(1, 2, 5);
  inst.nurses[0].leave_days = {3};
  auto shared = share(inst);
  Schedule x(shared);
  CHECK(check_leave(x).empty());
  x.set(0, 1, 2, true);
  CHECK(check_leave(x).empty());
  x.set(0, 0, 3, true);
  auto v = check_leave(x);
  REQUIRE(v.size() == 1);
  CHECK(v[0].day == 3);
}

TEST_CASE("C6 night then morning") {
  auto inst = blank(1, 3, 4);
  inst.shifts[2].is_night = true;
  auto shared = share(inst);
  Schedule x(shared);
  x.set(0, 2, 1, true);
  x.set(0, 1, 2, true);
  CHECK(check_night_morning(x).empty());
  x.set(0, 1, 2, false);
  x.set(0, 0, 2, true);
  auto v = check_night_morning(x);
  REQUIRE(v.size() == 1);
  CHECK(v[0].day == 1);
}

TEST_CASE("C7 and C8 coverage with the C9 cascade") {
  auto inst = blank(3, 1, 1);
  inst.demand.resize_tiers(2);
  inst.nurses[2].skill_tier = 1;
  inst.demand.at(0, 0, 0) = 2;
  auto shared = share(inst);

  Schedule one(shared);
  one.set(0, 0, 0, true);
  auto v = check_coverage(one);
  REQUIRE(v.size() == 1);
  CHECK(v[0].family == Family::C8);
  CHECK(v[0].magnitude == 1);
  CHECK(v[0].tier == 0);

  Schedule cascaded = one;
  cascaded.set(2, 0, 0, true);
  CHECK(check_coverage(cascaded).empty());

  Schedule excess = cascaded;
  excess.set(1, 0, 0, true);
  v = check_coverage(excess);
  REQUIRE(v.size() == 1);
  CHECK(v[0].family == Family::C7);
  CHECK(v[0].magnitude == 1);

  auto no_cascade = inst;
  catalogue_entry(no_cascade, Family::C9).enabled = false;
  Schedule strict(share(no_cascade));
  strict.set(0, 0, 0, true);
  strict.set(2, 0, 0, true);
  v = check_coverage(strict);
  REQUIRE(v.size() == 1);
  CHECK(v[0].family == Family::C8);
}

TEST_CASE("cascade moves surplus down one tier at a time") {
  auto inst = blank(2, 1, 1);
  inst.demand.resize_tiers(3);
  inst.nurses[0].skill_tier = 2;
  inst.nurses[1].skill_tier = 2;
  inst.demand.at(0, 0, 0) = 1;
  inst.demand.at(0, 0, 1) = 1;
  Schedule x(share(inst));
  x.set(0, 0, 0, true);
  x.set(1, 0, 0, true);
  CHECK(tier_shortfalls(x, 0, 0) == std::vector<int>{0, 0, 0});
  x.set(1, 0, 0, false);
  CHECK(tier_shortfalls(x, 0, 0) == std::vector<int>{1, 0, 0});
}

TEST_CASE("C10 shift quotas") {
  auto inst = blank(1, 2, 5);
  inst.nurses[0].required_shifts = {3, std::nullopt};
  auto shared = share(inst);
  Schedule x(shared);
  x.set(0, 0, 0, true);
  x.set(0, 0, 1, true);
  auto v = check_required_shifts(x);
  REQUIRE(v.size() == 1);
  CHECK(v[0].magnitude == 1);
  CHECK(v[0].shift == 0);

  auto zero = blank(2, 2, 3);
  for (auto& n : zero.nurses) n.required_shifts = {0, 0};
  CHECK(check_required_shifts(Schedule(share(zero))).empty());

  auto capped = blank(1, 1, 4);
  capped.rules.max_shift_type = 2;
  Schedule c(share(capped));
  for (int d = 0; d < 4; ++d) c.set(0, 0, d, true);
  v = check_required_shifts(c);
  REQUIRE(v.size() == 1);
  CHECK(v[0].magnitude == 2);
}

TEST_CASE("disabled families report nothing") {
  auto inst = blank(1, 2, 2);
  catalogue_entry(inst, Family::C1).enabled = false;
  inst.demand.at(0, 0, 0) = inst.demand.at(1, 0, 0) = 1;
  Schedule x(share(inst));
  x.set(0, 0, 0, true);
  x.set(0, 1, 0, true);
  CHECK(check_one_shift_per_day(x).empty());
  CHECK(evaluate(x).total == 200);
}

TEST_CASE("delta of filling an open cell") {
  auto inst = blank(1, 1, 1, 600);
  inst.demand.at(0, 0, 0) = 1;
  Schedule x(share(inst));
  CHECK(delta_evaluate(x, 0, 0, 0, true) == 600 - kHard);
}

TEST_CASE("delta rejects a no-op flip") {
  Schedule x(share(blank(1, 1, 1)));
  CHECK_THROWS_AS(delta_evaluate(x, 0, 0, 0, false), ContractError);
}

TEST_CASE("delta matches full recompute on random flips") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const RandomInstanceParams sizes[] = {{3, 2, 3}, {5, 3, 7}, {4, 1, 5}, {2, 3, 4}};
    auto inst = share(random_instance(seed, sizes[seed % 4]));
    auto x = random_fill(inst, rng, static_cast<int>(rng() % 60));
    for (int k = 0; k < 50; ++k) {
      int n = static_cast<int>(rng() % static_cast<std::uint64_t>(x.nurses()));
      int s = static_cast<int>(rng() % static_cast<std::uint64_t>(x.shifts()));
      int d = static_cast<int>(rng() % static_cast<std::uint64_t>(x.days()));
      const bool to = !x(n, s, d);
      Money there = delta_evaluate(x, n, s, d, to);
      REQUIRE(there == recompute_delta(x, n, s, d, to));
      x.set(n, s, d, to);
      Money back = delta_evaluate(x, n, s, d, !to);
      REQUIRE(there + back == 0);
      if (rng() % 2) x.set(n, s, d, !to);
    }
  }
}

TEST_CASE("delta matches recompute on the benchmarks") {
  for (auto name : benchmarks::names()) {
    auto inst = benchmarks::load(name);
    auto x = benchmarks::published_solution(name, inst);
    for (int n = 0; n < x.nurses(); ++n)
      for (int s = 0; s < x.shifts(); ++s)
        for (int d = 0; d < x.days(); ++d) REQUIRE(delta_evaluate(x, n, s, d, !x(n, s, d)) == recompute_delta(x, n, s, d, !x(n, s, d)));
  }
}

TEST_CASE("one hard unit outweighs every soft cost") {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto inst = share(random_instance(seed, {3, 2, 4}));
    const Money bound = soft_cost_upper_bound(*inst);
    for (const auto& c : inst->constraint_catalogue)
      if (c.enabled && c.cls == ConstraintClass::hard) CHECK(c.penalty_weight > bound);
    for (int k = 0; k < 20; ++k) {
      auto x = random_fill(inst, rng, static_cast<int>(rng() % 101));
      auto b = evaluate(x);
      CHECK(b.base_cost + b.soft_penalty <= bound);
    }
  }
}
