// Internal helpers shared by the claim registry translation units.
#ifndef PRAX_CLAIMS_DETAIL_HPP
#define PRAX_CLAIMS_DETAIL_HPP

#include <string>
#include <utility>
#include <vector>

#include "prax/algebras.hpp"
#include "prax/claims.hpp"
#include "prax/dependence.hpp"
#include "prax/derived_ops.hpp"

namespace prax {
namespace reg_detail {

struct Reg {
  std::vector<ClaimDef> v;

  void add(std::string id, std::string ref, Expectation e, ClaimMode m,
           Constraint c, int n_max, bool sampled,
           std::function<bool(const EvalCtx&)> f) {
    ClaimDef d;
    d.id = std::move(id);
    d.paper_ref = std::move(ref);
    d.expected = e;
    d.mode = m;
    d.constraint = c;
    d.n_max = n_max;
    d.sampled = sampled;
    d.eval = std::move(f);
    v.push_back(std::move(d));
  }
};

inline void put(const EvalCtx& ctx,
                std::initializer_list<std::pair<const char*, Bits>> sets,
                const std::string& note = "") {
  if (!ctx.witness) return;
  ctx.witness->sets.clear();
  for (const auto& [name, val] : sets)
    ctx.witness->sets.emplace_back(name, val);
  if (!note.empty()) ctx.witness->note = note;
}

// Approximation shorthands bound to one instance relation.
struct Ap {
  ApproxTable t;
  Bits top;

  explicit Ap(const BinRel& r) : t(r), top(r.universe.all()) {}
  Bits g(Bits a, ApproxKind k) const { return t.get(a, k); }
  Bits l(Bits a) const { return t.get(a, ApproxKind::l); }
  Bits u(Bits a) const { return t.get(a, ApproxKind::u); }
  Bits c(Bits a) const { return top & ~a; }
};

// Per-instance tables for the almost-upper operator and its relatives.
struct Hearts {
  ApproxTable t;
  Bits top;
  std::vector<Bits> lv, uv, hv;

  explicit Hearts(const BinRel& r) : t(r), top(r.universe.all()) {
    const std::size_t m = std::size_t(top) + 1;
    lv.resize(m);
    uv.resize(m);
    hv.resize(m);
    ChoiceFn chi = default_choice();
    for (Bits x = 0;; ++x) {
      lv[x] = t.get(x, ApproxKind::l);
      uv[x] = t.get(x, ApproxKind::u);
      hv[x] = heart(t, x, chi);
      if (x == top) break;
    }
  }
};

void add_alg_dep_claims(Reg& g);

}  // namespace reg_detail
}  // namespace prax

#endif
