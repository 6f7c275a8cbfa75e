// Acceptance harness: one line per criterion, nonzero exit if any fails.
// Usage: acceptance <data-dir>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "prax/approx.hpp"
#include "prax/claims.hpp"
#include "prax/io.hpp"

using namespace prax;

namespace {

int failures = 0;

void report(int num, const std::string& what, bool ok) {
  std::printf("%-4s criterion %2d: %s\n", ok ? "PASS" : "FAIL", num,
              what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool suite_passes(const std::string& glob) {
  SuiteOptions opt;
  opt.suite = glob;
  return suite_ok(run_suite(opt));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <data-dir>\n");
    return 2;
  }
  std::string data = argv[1];

  // 1. The worked nine-point example reproduces its four approximation
  // values, in under a second.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      BinRel p = relation_from_file(data + "/nine_point_example.json");
      Bits ahf = parse_subset(p.universe, "a,h,f");
      Bits l = parse_subset(p.universe, "l");
      ok = approx(p, ahf, ApproxKind::l) == ahf &&
           approx(p, ahf, ApproxKind::lo) == parse_subset(p.universe, "a,f") &&
           approx(p, l, ApproxKind::l) == 0 &&
           approx(p, l, ApproxKind::lo) == l;
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion 1 error: %s\n", e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    report(1, "worked example approximation values (under 1 s)",
           ok && secs < 1.0);
  }

  // 2. Approximation operator laws, exhaustive small plus seeded samples.
  report(2, "approximation law suite (APP-*)", suite_passes("APP-*"));

  // 3. Boolean lattice structure of the bi-definite family.
  report(3, "bi-definite Boolean lattice axioms (ALG4-*)",
         suite_passes("ALG4-*"));

  // 4. Derived-relation identities on every enumerated instance.
  report(4, "derived relation identities (REL-*)", suite_passes("REL-*"));

  // 5. Atomicity and typing of atoms in the quotient poset.
  report(5, "quotient poset atomicity (OBJ-*)", suite_passes("OBJ-*"));

  // 6. Partial algebra of approximation pairs, including the required
  // distributivity-failure witness.
  report(6, "pair partial algebra suite (ALG9-*)", suite_passes("ALG9-*"));

  // 7. Consequence law suite with the default regular choice.
  report(7, "consequence law suite (NMR-*)", suite_passes("NMR-*"));

  // 8. Exact-rational probabilistic dependence bounds.
  report(8, "probabilistic dependence bounds (PRB-*)", suite_passes("PRB-*"));

  // 9. Relative-dependence internalization and falls-down properties.
  report(9, "coarse-space semantics suite (SEM14-*)", suite_passes("SEM14-*"));

  // 10. The two recorded errata terminate with counterexamples and are
  // reported as expected failures.
  {
    SuiteOptions opt;
    opt.suite = "GRN-OTO";
    std::vector<ClaimReport> a = run_suite(opt);
    opt.suite = "DEP-VAG-1";
    std::vector<ClaimReport> b = run_suite(opt);
    bool ok = a.size() == 1 && b.size() == 1 && suite_ok(a) && suite_ok(b) &&
              a[0].status == "counterexample" && a[0].counterexample &&
              b[0].status == "counterexample" && b[0].counterexample;
    report(10, "recorded errata yield machine-checked counterexamples", ok);
  }

  // 11. Determinism: repeated seeded runs byte-identical, and the pinned
  // generator fixture regenerates exactly.
  {
    SuiteOptions opt;
    opt.suite = "GRN-*";
    std::string first = suite_report_json(run_suite(opt));
    std::string second = suite_report_json(run_suite(opt));
    BinRel gen = random_relation(7, Constraint::prax, 42);
    std::string pinned = slurp(data + "/fixture_n7_prax_seed42.json");
    // Tolerate a trailing newline in the stored fixture.
    while (!pinned.empty() &&
           (pinned.back() == '\n' || pinned.back() == '\r'))
      pinned.pop_back();
    bool ok = !first.empty() && first == second && !pinned.empty() &&
              relation_to_json(gen) == pinned;
    report(11, "seeded runs and pinned generator fixture are deterministic",
           ok);
  }

  if (failures) std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}
