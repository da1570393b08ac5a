#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "psum/verify.hpp"

using namespace psum;
using nlohmann::json;

TEST_SUITE("verify") {

TEST_CASE("check registry") {
  std::vector<CheckSpec> checks = list_checks();
  CHECK(checks.size() == 38);
  std::set<std::string> names, suites;
  for (const CheckSpec& c : checks) {
    CHECK_FALSE(c.name.empty());
    CHECK_FALSE(c.suite.empty());
    CHECK_FALSE(c.anchor.empty());
    names.insert(c.name);
    suites.insert(c.suite);
  }
  CHECK(names.size() == checks.size());  // no duplicate names
  CHECK(names.count("theorem1_vs_brute") == 1);
  CHECK(names.count("lemma3_lm31") == 1);
  CHECK(names.count("salie_vien2") == 1);
  CHECK(suites ==
        std::set<std::string>{"appendix", "bernoulli", "core", "faulhaber",
                              "triangles"});
}

TEST_CASE("the whole battery passes on small grids") {
  CHECK(run_suite("core", Bounds{1, 0}).ok());
  CHECK(run_suite("all", Bounds{1, 1}).ok());
  VerificationReport core = run_suite("core", Bounds{4, 20});
  CHECK(core.ok());
  CHECK(core.failed == 0);
  CHECK(core.passed > 0);
  CHECK(core.suite == "core");
  CHECK(core.bounds.max_k == 4);
  CHECK(run_suite("appendix", Bounds{6, 50}).ok());
  CHECK(run_suite("triangles", Bounds{6, 10}).ok());
  CHECK(run_suite("bernoulli", Bounds{5, 15}).ok());
  CHECK(run_suite("faulhaber", Bounds{5, 15}).ok());
}

TEST_CASE("a single check runs in isolation") {
  VerificationReport rep = run_suite("theorem1_vs_brute", Bounds{3, 10});
  REQUIRE(rep.summaries.size() == 1);
  CHECK(rep.summaries[0].name == "theorem1_vs_brute");
  CHECK(rep.summaries[0].failed == 0);
  CHECK(rep.summaries[0].instances == 3 * 11);
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].pass);
}

TEST_CASE("selector and bound validation") {
  CHECK_THROWS_AS(run_suite("nonsense", Bounds{2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("core", Bounds{0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("core", Bounds{2, -1}), std::invalid_argument);
}

TEST_CASE("reports are deterministic apart from timing") {
  json first = json::parse(report_to_json(run_suite("faulhaber", Bounds{3, 8})));
  json second = json::parse(report_to_json(run_suite("faulhaber", Bounds{3, 8})));
  first.erase("wall_seconds");
  second.erase("wall_seconds");
  CHECK(first == second);
}

TEST_CASE("json report shape") {
  VerificationReport rep = run_suite("triangles", Bounds{3, 5});
  json doc = json::parse(report_to_json(rep));
  REQUIRE(doc.contains("suite"));
  REQUIRE(doc.contains("checks"));
  REQUIRE(doc.contains("passed"));
  REQUIRE(doc.contains("failed"));
  REQUIRE(doc.contains("wall_seconds"));
  CHECK(doc["suite"] == "triangles");
  CHECK(doc["failed"] == 0);
  CHECK(doc["passed"].get<long>() == rep.passed);
  REQUIRE(doc["checks"].is_array());
  CHECK_FALSE(doc["checks"].empty());
  for (const json& entry : doc["checks"]) {
    REQUIRE(entry.contains("name"));
    REQUIRE(entry.contains("params"));
    REQUIRE(entry.contains("status"));
    REQUIRE(entry.contains("lhs"));
    REQUIRE(entry.contains("rhs"));
    CHECK(entry["status"] == "pass");
    CHECK(entry["lhs"] == "");
  }
}

TEST_CASE("failing entries render in both formats") {
  VerificationReport rep;
  rep.suite = "demo";
  rep.bounds = Bounds{2, 3};
  rep.entries.push_back(
      ReportEntry{"made_up_check", {{"k", 2}, {"n", 1}}, false, "5", "7"});
  rep.summaries.push_back(CheckSummary{"made_up_check", 12, 1});
  rep.passed = 11;
  rep.failed = 1;
  rep.wall_seconds = 0.25;

  json doc = json::parse(report_to_json(rep));
  CHECK(doc["failed"] == 1);
  CHECK(doc["checks"][0]["status"] == "fail");
  CHECK(doc["checks"][0]["lhs"] == "5");
  CHECK(doc["checks"][0]["rhs"] == "7");
  CHECK(doc["checks"][0]["params"]["k"] == 2);

  std::string table = report_to_table(rep);
  CHECK(table.find("made_up_check") != std::string::npos);
  CHECK(table.find("FAIL") != std::string::npos);
  CHECK(table.find("5") != std::string::npos);
  CHECK(table.find("7") != std::string::npos);
}

TEST_CASE("table report of a passing run") {
  VerificationReport rep = run_suite("bernoulli", Bounds{2, 4});
  std::string table = report_to_table(rep);
  CHECK(table.find("suite bernoulli") != std::string::npos);
  CHECK(table.find("max_k=2") != std::string::npos);
  CHECK(table.find("PASS") != std::string::npos);
  CHECK(table.find("FAIL") == std::string::npos);
}

}  // TEST_SUITE
