// Claim registry integrity, glob selection, suite determinism, and
// counterexample minimization.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "prax/claims.hpp"

using namespace prax;

TEST_CASE("glob matching") {
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("REL-*", "REL-01"));
  CHECK_FALSE(glob_match("REL-*", "GRN-01"));
  CHECK(glob_match("A*C", "ABC"));
  CHECK(glob_match("A*C", "AC"));
  CHECK_FALSE(glob_match("A*C", "ACB"));
  CHECK(glob_match("", ""));
  CHECK_FALSE(glob_match("", "x"));
  CHECK(glob_match("**", "x"));
}

TEST_CASE("registry integrity") {
  const auto& reg = claim_registry();
  CHECK(reg.size() >= 150);
  std::set<std::string> ids;
  bool grn_oto = false, dep_vag = false;
  for (const ClaimDef& c : reg) {
    CHECK(ids.insert(c.id).second);  // ids are unique
    CHECK_FALSE(c.paper_ref.empty());
    CHECK(c.n_max >= 1);
    CHECK(bool(c.eval));
    if (c.id == "GRN-OTO") {
      grn_oto = true;
      CHECK(c.expected == Expectation::expected_fail);
    }
    if (c.id == "DEP-VAG-1") {
      dep_vag = true;
      CHECK(c.expected == Expectation::expected_fail);
    }
  }
  CHECK(grn_oto);
  CHECK(dep_vag);
}

TEST_CASE("suite runs are deterministic") {
  SuiteOptions opt;
  opt.suite = "GRN-*";
  opt.samples = 40;
  std::vector<ClaimReport> a = run_suite(opt);
  std::vector<ClaimReport> b = run_suite(opt);
  CHECK(suite_report_json(a) == suite_report_json(b));
  // The report is independent of the worker count.
  setenv("PRAXKIT_THREADS", "3", 1);
  std::vector<ClaimReport> c = run_suite(opt);
  unsetenv("PRAXKIT_THREADS");
  CHECK(suite_report_json(a) == suite_report_json(c));
}

TEST_CASE("a healthy suite is ok and a refuted claim is minimized") {
  SuiteOptions opt;
  opt.suite = "GRN-*";
  opt.samples = 40;
  std::vector<ClaimReport> reports = run_suite(opt);
  CHECK(suite_ok(reports));
  bool saw_oto = false;
  for (const ClaimReport& rep : reports) {
    if (rep.id != "GRN-OTO") continue;
    saw_oto = true;
    CHECK(rep.status == "counterexample");
    REQUIRE(rep.counterexample);
    // Minimization shrinks the refuting instance to a single point.
    CHECK(rep.counterexample->rel.universe.size() == 1);
  }
  CHECK(saw_oto);
}

TEST_CASE("selection by id") {
  SuiteOptions opt;
  opt.suite = "REL-01";
  std::vector<ClaimReport> reports = run_suite(opt);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].id == "REL-01");
  CHECK(reports[0].tested > 0);
}
