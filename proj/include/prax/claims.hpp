// The claim registry: every recorded law bound to an executable evaluator
// and an expected status, plus suite execution with exhaustive and seeded
// sampled instance streams, counterexample minimization, and reporting.
#ifndef PRAX_CLAIMS_HPP
#define PRAX_CLAIMS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prax/enumerate.hpp"

namespace prax {

enum class Expectation { must_pass, registered, expected_fail };
const char* expectation_name(Expectation e);

// universal: the law must hold on every instance (a failure is a
// counterexample). existential: the suite searches instances for a witness.
enum class ClaimMode { universal, existential };

struct Witness {
  BinRel rel;
  std::vector<std::pair<std::string, Bits>> sets;  // named subsets of rel
  std::string note;
};

struct EvalCtx {
  const BinRel& rel;
  bool exhaustive = true;      // iterate every subset tuple
  int tuple_samples = 500;     // tuples per instance when sampling instead
  std::uint64_t rng_seed = 0;  // per-instance stream for tuple sampling
  Witness* witness = nullptr;  // filled by tuple helpers on failure
};

struct ClaimDef {
  std::string id;
  std::string paper_ref;
  Expectation expected = Expectation::registered;
  ClaimMode mode = ClaimMode::universal;
  Constraint constraint = Constraint::prax;
  int n_max = 4;         // exhaustive universe-size ceiling for this claim
  bool sampled = false;  // additionally run on seeded larger instances
  // universal: true iff the law holds on the instance.
  // existential: true iff a witness was found on the instance.
  std::function<bool(const EvalCtx&)> eval;
};

const std::vector<ClaimDef>& claim_registry();

struct ClaimReport {
  std::string id;
  std::string paper_ref;
  Expectation expected = Expectation::registered;
  std::string status;  // "pass", "fail", or "counterexample"
  long long tested = 0;
  // Counterexample for failed universal claims; witness for satisfied
  // existential ones.
  std::optional<Witness> counterexample;

  bool as_expected() const;
};

struct SuiteOptions {
  std::string suite;   // '*'-glob over claim ids; empty selects all
  int n_max = 0;       // 0 = per-claim bound; otherwise a global cap
  int samples = 500;   // sampled instances per sampled claim
  int sample_n = 7;
  std::uint64_t seed = 42;
};

bool glob_match(const std::string& pattern, const std::string& text);

// Evaluates the selected claims. Honors PRAXKIT_THREADS; results are
// deterministic for fixed options regardless of the parallelism degree.
std::vector<ClaimReport> run_suite(const SuiteOptions& opt);

// True iff every must_pass claim passed and every expected_fail claim
// produced a counterexample.
bool suite_ok(const std::vector<ClaimReport>& reports);

std::string suite_report_json(const std::vector<ClaimReport>& reports);
std::string suite_report_text(const std::vector<ClaimReport>& reports);

// ---- Tuple iteration helpers shared by evaluators ----

// Run f over subsets (or pairs/triples of subsets) of the instance universe:
// all of them when ctx.exhaustive, else ctx.tuple_samples seeded draws.
// Stops at the first tuple where f is false, recording the tuple in
// ctx.witness; returns whether f held everywhere.
bool all_subsets(const EvalCtx& ctx, const std::function<bool(Bits)>& f);
bool all_pairs(const EvalCtx& ctx, const std::function<bool(Bits, Bits)>& f);
bool all_triples(const EvalCtx& ctx,
                 const std::function<bool(Bits, Bits, Bits)>& f);

}  // namespace prax

#endif
