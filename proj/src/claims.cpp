#include "prax/claims.hpp"

#include <atomic>
#include <climits>
#include <cstdlib>
#include <json.hpp>
#include <random>
#include <sstream>
#include <thread>

namespace prax {

const char* expectation_name(Expectation e) {
  switch (e) {
    case Expectation::must_pass: return "must_pass";
    case Expectation::registered: return "registered";
    case Expectation::expected_fail: return "expected_fail";
  }
  return "?";
}

bool ClaimReport::as_expected() const {
  switch (expected) {
    case Expectation::must_pass: return status == "pass";
    case Expectation::expected_fail: return status == "counterexample";
    case Expectation::registered: return true;
  }
  return false;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  // Iterative '*' matcher; no other metacharacters.
  size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == text[t])) {
      ++p, ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace {

void record(const EvalCtx& ctx, std::initializer_list<std::pair<const char*, Bits>> sets) {
  if (!ctx.witness) return;
  ctx.witness->sets.clear();
  for (const auto& [name, v] : sets) ctx.witness->sets.emplace_back(name, v);
}

}  // namespace

bool all_subsets(const EvalCtx& ctx, const std::function<bool(Bits)>& f) {
  const Bits top = ctx.rel.universe.all();
  for (Bits x = 0;; ++x) {  // subsets are always cheap enough to exhaust
    if (!f(x)) {
      record(ctx, {{"x", x}});
      return false;
    }
    if (x == top) break;
  }
  return true;
}

bool all_pairs(const EvalCtx& ctx, const std::function<bool(Bits, Bits)>& f) {
  const Bits top = ctx.rel.universe.all();
  if (ctx.exhaustive) {
    for (Bits x = 0;; ++x) {
      for (Bits y = 0;; ++y) {
        if (!f(x, y)) {
          record(ctx, {{"x", x}, {"y", y}});
          return false;
        }
        if (y == top) break;
      }
      if (x == top) break;
    }
    return true;
  }
  std::mt19937_64 rng(ctx.rng_seed);
  for (int i = 0; i < ctx.tuple_samples; ++i) {
    Bits x = static_cast<Bits>(rng()) & top, y = static_cast<Bits>(rng()) & top;
    if (!f(x, y)) {
      record(ctx, {{"x", x}, {"y", y}});
      return false;
    }
  }
  return true;
}

bool all_triples(const EvalCtx& ctx,
                 const std::function<bool(Bits, Bits, Bits)>& f) {
  const Bits top = ctx.rel.universe.all();
  if (ctx.exhaustive) {
    for (Bits x = 0;; ++x) {
      for (Bits y = 0;; ++y) {
        for (Bits z = 0;; ++z) {
          if (!f(x, y, z)) {
            record(ctx, {{"x", x}, {"y", y}, {"z", z}});
            return false;
          }
          if (z == top) break;
        }
        if (y == top) break;
      }
      if (x == top) break;
    }
    return true;
  }
  std::mt19937_64 rng(ctx.rng_seed);
  for (int i = 0; i < ctx.tuple_samples; ++i) {
    Bits x = static_cast<Bits>(rng()) & top, y = static_cast<Bits>(rng()) & top,
         z = static_cast<Bits>(rng()) & top;
    if (!f(x, y, z)) {
      record(ctx, {{"x", x}, {"y", y}, {"z", z}});
      return false;
    }
  }
  return true;
}

namespace {

struct Inst {
  int n = 0;
  std::uint64_t mask = 0;   // enumerated instances
  std::uint64_t seed = 0;   // sampled instances
  bool sampled = false;
};

BinRel materialize(const Inst& in, const ClaimDef& c) {
  if (in.sampled) return random_relation(in.n, c.constraint, in.seed);
  return relation_from_mask(in.n, in.mask);
}

bool eval_instance(const ClaimDef& c, const Inst& in, const BinRel& r,
                   Witness* w) {
  EvalCtx ctx{r};
  ctx.exhaustive = !in.sampled;
  ctx.rng_seed = in.seed * 0x9E3779B97F4A7C15ull + 1;
  ctx.witness = w;
  return c.eval(ctx);
}

std::vector<Inst> instance_plan(const ClaimDef& c, const SuiteOptions& opt) {
  std::vector<Inst> plan;
  int cap = c.n_max;
  if (opt.n_max > 0 && opt.n_max < cap) cap = opt.n_max;
  for (int n = 1; n <= cap; ++n)
    for (std::uint64_t mask : enumerate_masks(n, c.constraint))
      plan.push_back({n, mask, 0, false});
  if (c.sampled)
    for (int i = 0; i < opt.samples; ++i)
      plan.push_back({opt.sample_n, 0, opt.seed + std::uint64_t(i), true});
  return plan;
}

int thread_budget() {
  if (const char* env = std::getenv("PRAXKIT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// First instance index where the predicate of interest fires (law violated
// for universal claims, witness found for existential ones), or plan size.
long long scan(const ClaimDef& c, const std::vector<Inst>& plan) {
  const long long total = static_cast<long long>(plan.size());
  const bool universal = c.mode == ClaimMode::universal;
  std::atomic<long long> hit{total};
  int threads = thread_budget();
  auto work = [&](int t) {
    for (long long i = t; i < total; i += threads) {
      if (i >= hit.load(std::memory_order_relaxed)) break;
      BinRel r = materialize(plan[i], c);
      bool ok = eval_instance(c, plan[i], r, nullptr);
      bool fire = universal ? !ok : ok;
      if (!fire) continue;
      long long cur = hit.load();
      while (i < cur && !hit.compare_exchange_weak(cur, i)) {
      }
    }
  };
  if (threads <= 1 || total < 8) {
    threads = 1;
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return hit.load();
}

Witness capture(const ClaimDef& c, const Inst& in) {
  Witness w;
  BinRel r = materialize(in, c);
  // Greedily drop universe points while the claim still fails on the
  // induced subrelation (universal claims only).
  if (c.mode == ClaimMode::universal) {
    bool shrunk = true;
    while (shrunk && r.n() > 1) {
      shrunk = false;
      for (int p = r.n() - 1; p >= 0; --p) {
        Bits keep = r.universe.all() & ~(Bits(1) << p);
        BinRel sub = restrict_relation(r, keep);
        if (!satisfies(sub, c.constraint)) continue;
        EvalCtx ctx{sub};
        ctx.exhaustive = sub.n() <= 4 || !in.sampled;
        ctx.rng_seed = in.seed * 0x9E3779B97F4A7C15ull + 1;
        if (!c.eval(ctx)) {
          r = sub;
          shrunk = true;
          break;
        }
      }
    }
  }
  w.rel = r;
  Inst shrunk_in = in;
  shrunk_in.sampled = in.sampled && r.n() > 4;
  eval_instance(c, shrunk_in, r, &w);
  w.rel = r;
  return w;
}

}  // namespace

std::vector<ClaimReport> run_suite(const SuiteOptions& opt) {
  std::vector<ClaimReport> out;
  for (const ClaimDef& c : claim_registry()) {
    if (!opt.suite.empty() && !glob_match(opt.suite, c.id)) continue;
    ClaimReport rep;
    rep.id = c.id;
    rep.paper_ref = c.paper_ref;
    rep.expected = c.expected;
    std::vector<Inst> plan = instance_plan(c, opt);
    long long hit = scan(c, plan);
    const long long total = static_cast<long long>(plan.size());
    rep.tested = hit < total ? hit + 1 : total;
    if (c.mode == ClaimMode::universal) {
      if (hit < total) {
        rep.status = "counterexample";
        rep.counterexample = capture(c, plan[hit]);
      } else {
        rep.status = "pass";
      }
    } else {
      if (hit < total) {
        rep.status = "pass";
        Witness w;
        BinRel r = materialize(plan[hit], c);
        eval_instance(c, plan[hit], r, &w);
        w.rel = r;
        rep.counterexample = std::move(w);
      } else {
        rep.status = "fail";
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

bool suite_ok(const std::vector<ClaimReport>& reports) {
  for (const ClaimReport& r : reports)
    if (r.expected != Expectation::registered && !r.as_expected())
      return false;
  return true;
}

namespace {

nlohmann::json witness_json(const Witness& w) {
  nlohmann::json j;
  j["universe"] = w.rel.universe.names;
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [x, y] : w.rel.pairs())
    pairs.push_back({w.rel.universe.names[x], w.rel.universe.names[y]});
  j["pairs"] = std::move(pairs);
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& [name, v] : w.sets) {
    nlohmann::json members = nlohmann::json::array();
    for (int i : bit_range(v)) members.push_back(w.rel.universe.names[i]);
    sets.push_back({{"name", name}, {"members", std::move(members)}});
  }
  j["sets"] = std::move(sets);
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

}  // namespace

std::string suite_report_json(const std::vector<ClaimReport>& reports) {
  nlohmann::json j;
  j["schema"] = 1;
  nlohmann::json claims = nlohmann::json::array();
  for (const ClaimReport& r : reports) {
    nlohmann::json c;
    c["id"] = r.id;
    c["status"] = r.status;
    c["tested"] = r.tested;
    if (r.counterexample) c["counterexample"] = witness_json(*r.counterexample);
    c["paper_ref"] = r.paper_ref;
    claims.push_back(std::move(c));
  }
  j["claims"] = std::move(claims);
  return j.dump(2);
}

std::string suite_report_text(const std::vector<ClaimReport>& reports) {
  std::ostringstream os;
  for (const ClaimReport& r : reports) {
    os << r.id << ": " << r.status << " (expected " << expectation_name(r.expected)
       << ", tested " << r.tested << ")"
       << (r.as_expected() || r.expected == Expectation::registered ? "" : "  <-- unexpected")
       << "\n";
    if (r.counterexample) {
      const Witness& w = *r.counterexample;
      os << "  witness: n=" << w.rel.n() << " pairs=[";
      bool first = true;
      for (auto [x, y] : w.rel.pairs()) {
        if (!first) os << " ";
        first = false;
        os << w.rel.universe.names[x] << ">" << w.rel.universe.names[y];
      }
      os << "]";
      for (const auto& [name, v] : w.sets)
        os << " " << name << "=" << subset_to_string(w.rel.universe, v);
      if (!w.note.empty()) os << " (" << w.note << ")";
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace prax
