#include <catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "support.hpp"

using namespace roster;
using roster::testing::blank;
using roster::testing::share;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(ROSTER_FORGE_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Schedule random_schedule(std::shared_ptr<const Instance> inst, std::mt19937_64& rng) {
  Schedule x(std::move(inst));
  for (int n = 0; n < x.nurses(); ++n)
    for (int s = 0; s < x.shifts(); ++s)
      for (int d = 0; d < x.days(); ++d) x.set(n, s, d, rng() % 3 == 0);
  return x;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("shipped instance files parse with the published dimensions") {
  auto ozk = parse_instance(slurp("ozkarahan89.roster.json"));
  CHECK(ozk.num_nurses() == 14);
  CHECK(ozk.num_shifts() == 2);
  CHECK(ozk.horizon_days == 7);

  auto li = parse_instance(slurp("li03.roster.json"));
  CHECK(li.num_nurses() == 16);
  CHECK(li.num_shifts() == 3);
  CHECK(li.horizon_days == 7);
  CHECK(li.night_shift() == li.shift_by_label("M"));
}

TEST_CASE("shipped files match the embedded copies") {
  CHECK(slurp("ozkarahan89.roster.json") == *benchmarks::instance_text("ozkarahan89"));
  CHECK(slurp("li03.roster.json") == *benchmarks::instance_text("li03"));
  for (auto name : benchmarks::names()) {
    INFO(name);
    auto inst = benchmarks::load(name);
    auto from_file = parse_schedule(slurp(std::string(name) + ".published.csv"), inst);
    CHECK(from_file == benchmarks::published_solution(name, inst));
  }
}

TEST_CASE("benchmark provenance names its source and marks derived data") {
  auto ozk = benchmarks::load("ozkarahan89");
  CHECK(ozk->provenance.find("Figure 2") != std::string::npos);
  CHECK(ozk->provenance.find("derived-from-figure") != std::string::npos);
  auto li = benchmarks::load("li03");
  CHECK(li->provenance.find("Figure 5") != std::string::npos);
  CHECK(li->provenance.find("derived-from-figure") != std::string::npos);
}

TEST_CASE("instances survive a render/parse round trip") {
  for (auto name : benchmarks::names()) CHECK(parse_instance(render_instance(*benchmarks::load(name))) == *benchmarks::load(name));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    INFO(seed);
    auto inst = random_instance(seed, {4, 3, 5});
    CHECK(parse_instance(render_instance(inst)) == inst);
  }
}

TEST_CASE("schedules survive csv and json round trips") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto inst = share(random_instance(seed, {5, 3, 7}));
    auto x = random_schedule(inst, rng);
    CHECK(parse_schedule(render_schedule_csv(x), inst) == x);
    CHECK(parse_schedule(schedule_to_json(x).dump(), inst) == x);
  }
  auto inst = benchmarks::load("li03");
  auto r = solve(inst);
  CHECK(parse_schedule(render_schedule(r, Format::csv), inst) == r.schedule);
  CHECK(parse_schedule(render_schedule(r, Format::json), inst) == r.schedule);
}

TEST_CASE("malformed instance documents are rejected with a locus") {
  CHECK_THROWS_AS(parse_instance(""), ParseError);

  try {
    parse_instance("{\n  \"name\": \"x\",\n  oops\n}");
    FAIL("accepted malformed JSON");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  auto doc = nlohmann::json::parse(*benchmarks::instance_text("ozkarahan89"));
  auto extra = doc;
  extra["nurses"][2]["colour"] = "blue";
  try {
    parse_instance(extra.dump());
    FAIL("accepted an unknown key");
  } catch (const ParseError& e) {
    CHECK(e.field() == "nurses[2].colour");
  }

  auto version = doc;
  version["schema_version"] = "roster-forge/0";
  CHECK_THROWS_AS(parse_instance(version.dump()), ParseError);

  auto typed = doc;
  typed["nurses"][0]["unit_cost"] = "cheap";
  try {
    parse_instance(typed.dump());
    FAIL("accepted a string cost");
  } catch (const ParseError& e) {
    CHECK(e.field() == "nurses[0].unit_cost");
  }

  auto missing = doc;
  missing.erase("rules");
  CHECK_THROWS_AS(parse_instance(missing.dump()), ParseError);
}

TEST_CASE("parsed instances must validate") {
  auto doc = nlohmann::json::parse(*benchmarks::instance_text("ozkarahan89"));
  doc["rules"]["max_work_days"] = 9;
  CHECK_THROWS_AS(parse_instance(doc.dump()), ValidationError);
}

TEST_CASE("malformed schedule documents are rejected") {
  auto inst = benchmarks::load("ozkarahan89");
  const std::string header = "nurse_id,day,shift,assigned\n";
  CHECK_THROWS_AS(parse_schedule("", inst), ParseError);
  CHECK_THROWS_AS(parse_schedule("n,d,s,a\n1,1,1,1\n", inst), ParseError);
  CHECK_THROWS_AS(parse_schedule(header + "15,1,1,1\n", inst), ParseError);
  CHECK_THROWS_AS(parse_schedule(header + "1,8,1,1\n", inst), ParseError);
  CHECK_THROWS_AS(parse_schedule(header + "1,1,3,1\n", inst), ParseError);
  CHECK_THROWS_AS(parse_schedule(header + "1,1,1,2\n", inst), ParseError);
  CHECK_THROWS_AS(parse_schedule(header + "1,1,1,1\n1,1,1,0\n", inst), ParseError);
  CHECK_THROWS_AS(parse_schedule(header + "1,1,x,1\n", inst), ParseError);
  try {
    parse_schedule(header + "1,1,1,1\n1,1,2,7\n", inst);
    FAIL("accepted a non-binary cell");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  auto li = benchmarks::load("li03");
  CHECK_THROWS_AS(parse_schedule(schedule_to_json(Schedule(li)).dump(), inst), ParseError);
  CHECK_THROWS_AS(parse_schedule(header + "2,3,2,1\n", inst), ParseError);
  auto shuffled = lines_of(render_schedule_csv(benchmarks::published_solution("ozkarahan89", inst)));
  std::reverse(shuffled.begin() + 1, shuffled.end());
  std::string text;
  for (const auto& line : shuffled) text += line + "\n";
  CHECK(parse_schedule(text, inst) == benchmarks::published_solution("ozkarahan89", inst));
  // A roster for fewer nurses does not fit.
  CHECK_THROWS_AS(parse_schedule(render_schedule_csv(Schedule(inst)), benchmarks::load("li03")), ParseError);
}

TEST_CASE("the table mirrors the roster layout") {
  auto inst = benchmarks::load("ozkarahan89");
  auto published = benchmarks::published_solution("ozkarahan89", inst);
  auto lines = lines_of(render_table(published, evaluate(published)));
  REQUIRE(lines.size() == 1 + 14 + 2);
  CHECK(lines[0].find("Final") != std::string::npos);
  for (int n = 0; n < 14; ++n) {
    const auto& row = lines[static_cast<std::size_t>(n) + 1];
    const auto& name = inst->nurse(n).name;
    CHECK(row.rfind(name, 0) == 0);
    std::istringstream cells(row.substr(row.rfind('|') + 1));
    Money final_penalty = -1;
    cells >> final_penalty;
    CHECK(final_penalty == (name == "RN2" ? 100 : 0));
  }

  Schedule empty(inst);
  auto blank_lines = lines_of(render_table(empty, evaluate(empty)));
  for (int n = 0; n < 14; ++n) {
    const auto& row = blank_lines[static_cast<std::size_t>(n) + 1];
    auto body = row.substr(row.find('|'), row.rfind('|') - row.find('|'));
    CHECK(body.find('1') == std::string::npos);
  }
}

TEST_CASE("csv output lists every cell in a fixed order") {
  Schedule x(share(blank(2, 2, 2)));
  x.set(1, 0, 1, true);
  CHECK(render_schedule_csv(x) ==
        "nurse_id,day,shift,assigned\n"
        "1,1,1,0\n1,1,2,0\n1,2,1,0\n1,2,2,0\n"
        "2,1,1,0\n2,1,2,0\n2,2,1,1\n2,2,2,0\n");
}

TEST_CASE("the published csv files list the published rosters") {
  auto text = slurp("ozkarahan89.published.csv");
  auto inst = benchmarks::load("ozkarahan89");
  CHECK(text == render_schedule_csv(benchmarks::published_solution("ozkarahan89", inst)));
}

TEST_CASE("json results carry breakdown, schedule and trace") {
  auto r = solve(benchmarks::load("ozkarahan89"));
  auto doc = nlohmann::json::parse(render_schedule(r, Format::json));
  CHECK(doc["feasible"] == true);
  CHECK(doc["breakdown"]["total"] == r.breakdown.total);
  CHECK(doc["trace"].size() == r.trace.events.size());
  CHECK(doc["trace"].back()["event"] == "terminated");
}

TEST_CASE("config files are strict") {
  auto c = parse_config(R"({"selection": "paper-3b", "max_iterations": 50, "excess_weight": 7})");
  CHECK(c.selection == Selection::paper_3b);
  CHECK(c.max_iterations == 50);
  CHECK(c.excess_weight == 7);
  CHECK_FALSE(c.hard_weight);
  CHECK_THROWS_AS(parse_config(R"({"seed": 3})"), ParseError);
  CHECK_THROWS_AS(parse_config(R"({"selection": "random"})"), ParseError);
  CHECK_THROWS_AS(parse_config(R"({"max_iterations": 0})"), ParseError);

  auto inst = with_weights(*benchmarks::load("ozkarahan89"), c);
  CHECK(inst.weight(Family::C7) == 7);
  CHECK(weight_warnings(*benchmarks::load("ozkarahan89")).empty());
  Config low;
  low.hard_weight = 10;
  auto weak = with_weights(*benchmarks::load("ozkarahan89"), low);
  CHECK(weak.weight(Family::C1) == 10);
  CHECK(weight_warnings(weak).size() == 1);
}
