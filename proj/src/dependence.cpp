#include "prax/dependence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace prax {

std::vector<Bits> nu_family(const BinRel& r, const BinRel& w, NuKind kind) {
  switch (kind) {
    case NuKind::delta_l: return definites(r, ApproxKind::l);
    case NuKind::delta_u: return definites(r, ApproxKind::u);
    case NuKind::delta_lw: return definites(w, ApproxKind::l);
    case NuKind::gamma_u: return images(r, ApproxKind::u);
    case NuKind::gamma_uw: return images(w, ApproxKind::u);
  }
  throw PraxError("unreachable nu kind");
}

std::vector<Bits> nu_family(const BinRel& r, NuKind kind) {
  if (kind == NuKind::delta_lw || kind == NuKind::gamma_uw)
    return nu_family(r, weak_transitive_closure(r), kind);
  return nu_family(r, r, kind);
}

std::vector<Bits> granulation_of(const BinRel& r) {
  std::set<Bits> g(r.in.begin(), r.in.end());
  return {g.begin(), g.end()};
}

Bits dep_aggregate(const std::vector<Bits>& granules, Bits x, Bits y) {
  Bits agg = 0;
  for (Bits g : granules)
    if (subset_of(g, x) && subset_of(g, y)) agg |= g;
  return agg;
}

Bits beta_inf(const std::vector<Bits>& granules, const std::vector<Bits>& nu,
              Bits x, Bits y) {
  Bits agg = dep_aggregate(granules, x, y);
  Bits res = 0;
  for (Bits m : nu)
    if (subset_of(m, agg)) res |= m;
  return res;
}

std::optional<Bits> beta_sup(const std::vector<Bits>& granules,
                             const std::vector<Bits>& nu, Bits x, Bits y) {
  Bits agg = dep_aggregate(granules, x, y);
  std::vector<Bits> above;
  for (Bits m : nu)
    if (subset_of(agg, m)) above.push_back(m);
  for (Bits m : above) {
    bool least = true;
    for (Bits o : above)
      if (!subset_of(m, o)) {
        least = false;
        break;
      }
    if (least) return m;
  }
  return std::nullopt;
}

bool pn_independent(const BinRel& r, Bits x, Bits y) {
  ApproxTable t(r);
  Bits all = r.universe.all();
  Bits xuc = all & ~t.get(x, ApproxKind::u);
  Bits yuc = all & ~t.get(y, ApproxKind::u);
  return subset_of(t.get(x, ApproxKind::l), yuc) &&
         subset_of(t.get(y, ApproxKind::l), xuc);
}

bool pn_dependent(const BinRel& r, Bits x, Bits y) {
  ApproxTable t(r);
  Bits all = r.universe.all();
  Bits xuc = all & ~t.get(x, ApproxKind::u);
  Bits yuc = all & ~t.get(y, ApproxKind::u);
  return !subset_of(t.get(x, ApproxKind::l), yuc) &&
         !subset_of(t.get(y, ApproxKind::l), xuc);
}

LocalBases local_bases(const BinRel& r, Bits x, Bits y) {
  ApproxTable t(r);
  Bits z = t.get(x, ApproxKind::l) & t.get(y, ApproxKind::l);
  Bits xy = x & y;
  std::vector<int> zs;
  for (int i : bit_range(z)) zs.push_back(i);
  const int m = static_cast<int>(zs.size());
  std::vector<Bits> good;
  for (Bits mask = 0; mask < (Bits(1) << m); ++mask) {
    Bits k = 0;
    for (int j = 0; j < m; ++j)
      if (has_bit(mask, j)) k |= Bits(1) << zs[j];
    bool ok = true;
    for (int e : bit_range(k))
      if (!subset_of(r.in[e], xy)) {
        ok = false;
        break;
      }
    if (ok)
      for (int a : bit_range(z)) {
        bool covered = false;
        for (int b : bit_range(k))
          if (has_bit(r.in[b], a) && subset_of(r.in[b], x)) {
            covered = true;
            break;
          }
        if (!covered) {
          ok = false;
          break;
        }
      }
    if (ok) good.push_back(k);
  }
  LocalBases lb;
  for (Bits k : good) {
    bool minimal = true;
    for (Bits o : good)
      if (o != k && subset_of(o, k)) {
        minimal = false;
        break;
      }
    if (minimal) lb.p_z.push_back(k);
  }
  // Greatest subcollection closed under granule neighbors: drop selections
  // whose granule members are not all represented until a fixpoint.
  lb.b_z = lb.p_z;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Bits> keep;
    for (Bits k : lb.b_z) {
      bool ok = true;
      for (int a : bit_range(k)) {
        for (int b : bit_range(r.in[a])) {
          bool found = false;
          for (Bits j : lb.b_z)
            if (has_bit(j, b)) {
              found = true;
              break;
            }
          if (!found) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok)
        keep.push_back(k);
      else
        changed = true;
    }
    lb.b_z = keep;
  }
  return lb;
}

FiniteProbSpace::FiniteProbSpace(Universe u, std::vector<Rational> w)
    : universe(std::move(u)), weight(std::move(w)) {
  if (static_cast<int>(weight.size()) != universe.size())
    throw UniverseMismatch("probability space needs one weight per element");
  Rational sum(0);
  for (const Rational& x : weight) {
    if (x < Rational(0))
      throw PraxError("probability weights must be nonnegative");
    sum += x;
  }
  if (sum != Rational(1))
    throw PraxError("probability weights must sum to one");
}

FiniteProbSpace FiniteProbSpace::uniform(const Universe& u) {
  return FiniteProbSpace(
      u, std::vector<Rational>(u.size(), Rational(1, u.size())));
}

Rational FiniteProbSpace::p(Bits event) const {
  Rational sum(0);
  for (int i : bit_range(event)) sum += weight[i];
  return sum;
}

Rational FiniteProbSpace::dep(Bits x, Bits y) const {
  return p(x & y) - p(x) * p(y);
}

bool FiniteProbSpace::pi(Bits x, Bits y) const { return p(x) * p(y) < p(x & y); }

bool FiniteProbSpace::sigma(Bits x, Bits y) const {
  return p(x & y) < p(x) * p(y);
}

bool FiniteProbSpace::wme(Bits x, Bits y) const {
  return p(x & y) == Rational(0);
}

DepSemantics::DepSemantics(const BinRel& r_)
    : DepSemantics(r_, weak_transitive_closure(r_)) {}

DepSemantics::DepSemantics(const BinRel& r_, const BinRel& w_)
    : r(r_), w(w_), phi(r_, w_) {
  gran_w_ = granulation_of(w);
  nu1_ = nu_family(r, w, NuKind::delta_lw);
  nu2_ = nu_family(r, w, NuKind::gamma_uw);
}

std::vector<RoughPair> DepSemantics::space_r() const { return pair_space(r); }
std::vector<RoughPair> DepSemantics::space_w() const { return pair_space(w); }

bool DepSemantics::in_space_r(const RoughPair& p) const {
  return pair_realized(r, p);
}

bool DepSemantics::in_space_w(const RoughPair& p) const {
  return pair_realized(w, p);
}

std::optional<RoughPair> DepSemantics::tau_bar(const RoughPair& p) const {
  if (!in_space_r(p)) return std::nullopt;
  return phi.tau_pair(p);
}

RoughPair DepSemantics::beta_plus(const RoughPair& a,
                                  const RoughPair& b) const {
  return {beta_inf(gran_w_, nu1_, a.lower, b.lower),
          beta_inf(gran_w_, nu2_, a.upper, b.upper)};
}

RoughPair DepSemantics::varrho(const RoughPair& a) const {
  return beta_plus(a, phi.tau_pair(a));
}

RoughPair DepSemantics::sigma_dep(const RoughPair& a) const {
  ApproxTable t(r);
  Bits d1 = phi.phi(a.lower) & ~a.lower;
  Bits d2 = phi.phi(a.upper) & ~a.lower;
  return beta_plus(
      a, {t.get(d1, ApproxKind::l), t.get(d2, ApproxKind::u)});
}

bool DepSemantics::upsilon(const RoughPair& ta, const RoughPair& g) const {
  for (const RoughPair& b : pair_space(r))
    if (phi.tau_pair(b) == ta && varrho(b) == g) return true;
  return false;
}

FallsDown::FallsDown(const BinRel& r_) : r(r_) {
  sym_.resize(r.n());
  for (int x = 0; x < r.n(); ++x) sym_[x] = r.in[x] & r.out[x];
  std::set<Bits> g(sym_.begin(), sym_.end());
  gran_o_.assign(g.begin(), g.end());
  nu1_ = definites(r, ApproxKind::lo);
  nu2_ = images(r, ApproxKind::uo);
}

std::vector<RoughPair> FallsDown::space_o() const {
  if (r.n() > 12)
    throw UniverseTooLarge("pair-space enumeration limited to n <= 12");
  ApproxTable t(r);
  const Bits top = r.universe.all();
  std::set<RoughPair> seen;
  for (Bits a = 0;; ++a) {
    seen.insert({t.get(a, ApproxKind::lo), t.get(a, ApproxKind::uo)});
    if (a == top) break;
  }
  return {seen.begin(), seen.end()};
}

Bits FallsDown::integral(int x) const {
  Bits u = 0;
  for (int y : bit_range(sym_[x])) u |= r.in[y];
  return u;
}

Bits FallsDown::ointegral(Bits b) const {
  Bits u = 0;
  for (int y = 0; y < r.n(); ++y)
    if (subset_of(sym_[y], b)) u |= integral(y);
  return u;
}

RoughPair FallsDown::ltimes(const RoughPair& p) const {
  return {ointegral(p.lower), ointegral(p.upper)};
}

RoughPair FallsDown::beta_plus(const RoughPair& a, const RoughPair& b) const {
  return {beta_inf(gran_o_, nu1_, a.lower, b.lower),
          beta_inf(gran_o_, nu2_, a.upper, b.upper)};
}

bool FallsDown::pi(const RoughPair& a, const RoughPair& v) const {
  RoughPair target = ltimes(a);
  for (const RoughPair& g : space_o())
    if (ltimes(g) == target && beta_plus(a, g) == v) return true;
  return false;
}

std::vector<RoughPair> FallsDown::pi_class(const RoughPair& a) const {
  RoughPair target = ltimes(a);
  std::set<RoughPair> out;
  for (const RoughPair& g : space_o())
    if (ltimes(g) == target) out.insert(beta_plus(a, g));
  return {out.begin(), out.end()};
}

std::vector<Bits> FallsDown::cover_sets() const {
  std::vector<Bits> out;
  for (const RoughPair& a : space_o()) {
    Bits u = 0;
    for (const RoughPair& v : pi_class(a)) u |= v.lower | v.upper;
    out.push_back(u);
  }
  return out;
}

}  // namespace prax
