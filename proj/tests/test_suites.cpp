#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galilab/suites.hpp"

using namespace galilab;
using nlohmann::json;

namespace {

SuiteConfig light_config() {
  SuiteConfig cfg;
  cfg.seed = 99;
  cfg.group_cases = 50;
  cfg.rep_pairs = 5;
  cfg.rep_points = 4;
  cfg.lagrangian_points = 60;
  cfg.residual_points = 15;
  cfg.covariance_points = 8;
  cfg.covariance_elements = 2;
  cfg.evolve_steps = 20;
  return cfg;
}

}  // namespace

TEST_CASE("check pass logic in both modes") {
  CHECK(CheckResult{"a", 1e-13, 1e-12, false}.pass());
  CHECK_FALSE(CheckResult{"a", 1e-11, 1e-12, false}.pass());
  CHECK(CheckResult{"w", 0.5, 0.1, true}.pass());
  CHECK_FALSE(CheckResult{"w", 0.05, 0.1, true}.pass());
}

TEST_CASE("config json roundtrip and validation") {
  const SuiteConfig defaults;
  const auto j = config_to_json(defaults);
  CHECK(j["seed"] == defaults.seed);
  CHECK(j["f"]["choice"] == "maxwell");
  CHECK(j["tolerances"]["group"] == doctest::Approx(1e-12));

  const SuiteConfig back = config_from_json(json::parse(j.dump()));
  CHECK(config_hash_hex(back) == config_hash_hex(defaults));

  SuiteConfig partial = config_from_json(json::parse(
      R"({"seed": 7, "counts": {"group_cases": 10}, "tolerances": {"rep": 1e-6}})"));
  CHECK(partial.seed == 7);
  CHECK(partial.group_cases == 10);
  CHECK(partial.rep_pairs == SuiteConfig{}.rep_pairs);
  CHECK(effective_tolerance(partial, "rep") == doctest::Approx(1e-6));
  CHECK(effective_tolerance(partial, "group") == doctest::Approx(1e-12));

  CHECK_THROWS_AS(config_from_json(json::parse(R"({"bogus": 1})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"counts": {"rep_pairs": 0}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      config_from_json(json::parse(R"({"tolerances": {"group": -1.0}})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      config_from_json(json::parse(R"({"tolerances": {"nope": 1.0}})")),
      std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"f": {"choice": "cubic"}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(json::parse(R"({"model": {"m": -1}})")),
                  std::invalid_argument);

  // zero tolerances are allowed and force failures
  SuiteConfig zero = config_from_json(json::parse(R"({"tolerance_scale": 0})"));
  CHECK(effective_tolerance(zero, "group") == 0.0);
}

TEST_CASE("config hash tracks content") {
  SuiteConfig a, b;
  b.seed = a.seed + 1;
  CHECK(config_hash_hex(a) != config_hash_hex(b));
  CHECK(config_hash_hex(a).size() == 16);
}

TEST_CASE("unknown suite name throws") {
  CHECK_THROWS_AS(run_suite("nope", light_config()), std::invalid_argument);
}

TEST_CASE("group suite passes and reports every check") {
  const auto rep = run_suite("group", light_config());
  CHECK(rep.name == "group");
  CHECK(rep.pass());
  CHECK(rep.checks.size() == 5);
  for (const auto& c : rep.checks) CHECK(c.tolerance == doctest::Approx(1e-12));
  CHECK(rep.wall_ms > 0.0);
}

TEST_CASE("rep suite records the surviving cocycle variant") {
  const auto rep = run_suite("rep", light_config());
  CHECK(rep.pass());
  REQUIRE(rep.notes.size() == 1);
  CHECK(rep.notes[0].first == "selected_cocycle_variant");
  CHECK(rep.notes[0].second == "r2-on-a1");

  SuiteConfig forced = light_config();
  forced.cocycle = "as-written";
  const auto bad = run_suite("rep", forced);
  CHECK_FALSE(bad.pass());
  CHECK(bad.notes[0].second == "as-written");
}

TEST_CASE("gauge and eom suites pass on light settings") {
  CHECK(run_suite("gauge", light_config()).pass());
  CHECK(run_suite("eom", light_config()).pass());
}

TEST_CASE("covariance suite passes on light settings") {
  const auto rep = run_suite("covariance", light_config());
  CHECK(rep.pass());
  CHECK(rep.checks.size() == 8);
}

TEST_CASE("zero tolerance scale fails every bounded check") {
  SuiteConfig cfg = light_config();
  cfg.tolerance_scale = 0.0;
  const auto rep = run_suite("group", cfg);
  CHECK_FALSE(rep.pass());
  for (const auto& c : rep.checks) CHECK_FALSE(c.pass());
}

TEST_CASE("report schema and determinism") {
  const SuiteConfig cfg = light_config();
  auto run_once = [&] {
    std::vector<SuiteReport> reports;
    reports.push_back(run_suite("rep", cfg));
    reports.push_back(run_suite("group", cfg));
    return report_json(cfg, reports, false).dump(2);
  };
  const std::string first = run_once();
  const std::string second = run_once();
  CHECK(first == second);  // wall time elided, rng seeded: byte identical

  const auto doc = json::parse(first);
  CHECK(doc["version"] == "1.0.0");
  CHECK(doc["seed"] == cfg.seed);
  CHECK(doc["config"]["counts"]["group_cases"] == cfg.group_cases);
  REQUIRE(doc["suites"].size() == 2);
  CHECK(doc["suites"][0]["name"] == "group");  // sorted by name
  CHECK(doc["suites"][1]["name"] == "rep");
  CHECK(doc["suites"][0]["wall_ms"].is_null());
  CHECK(doc["suites"][0]["config_hash"] == config_hash_hex(cfg));
  const auto& check = doc["suites"][0]["checks"][0];
  CHECK(check.contains("name"));
  CHECK(check.contains("deviation"));
  CHECK(check.contains("tolerance"));
  CHECK(check.contains("mode"));
  CHECK(check.contains("pass"));
}

TEST_CASE("empty suite list still yields a valid document") {
  const auto doc = report_json(SuiteConfig{}, {}, false);
  CHECK(doc["suites"].is_array());
  CHECK(doc["suites"].empty());
  const auto reparsed = json::parse(doc.dump());
  CHECK(reparsed["version"] == "1.0.0");
}

TEST_CASE("different seeds share the schema but not the deviations") {
  SuiteConfig a = light_config();
  SuiteConfig b = light_config();
  b.seed = a.seed + 1;
  const auto ra = report_json(a, {run_suite("group", a)}, false);
  const auto rb = report_json(b, {run_suite("group", b)}, false);
  auto keys = [](const json& j) {
    std::vector<std::string> out;
    for (const auto& [k, v] : j.items()) out.push_back(k);
    return out;
  };
  CHECK(keys(ra) == keys(rb));
  CHECK(keys(ra["suites"][0]) == keys(rb["suites"][0]));
  CHECK(ra["suites"][0]["checks"] != rb["suites"][0]["checks"]);
}

TEST_CASE("timings flag reveals wall time") {
  const SuiteConfig cfg = light_config();
  const auto doc = report_json(cfg, {run_suite("group", cfg)}, true);
  CHECK(doc["suites"][0]["wall_ms"].is_number());
  CHECK(doc["suites"][0]["wall_ms"].get<double>() > 0.0);
}
