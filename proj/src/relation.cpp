#include "prax/relation.hpp"

namespace prax {

BinRel::BinRel(Universe u)
    : universe(std::move(u)),
      out(universe.size(), 0),
      in(universe.size(), 0) {}

void BinRel::add(int x, int y) {
  out[x] |= Bits(1) << y;
  in[y] |= Bits(1) << x;
}

void BinRel::remove(int x, int y) {
  out[x] &= ~(Bits(1) << y);
  in[y] &= ~(Bits(1) << x);
}

bool BinRel::empty() const {
  for (Bits row : out)
    if (row) return false;
  return true;
}

std::vector<std::pair<int, int>> BinRel::pairs() const {
  std::vector<std::pair<int, int>> ps;
  for (int x = 0; x < n(); ++x)
    for (int y : bit_range(out[x])) ps.emplace_back(x, y);
  return ps;
}

bool BinRel::same_universe(const BinRel& o) const {
  return universe.names == o.universe.names;
}

BinRel build_relation(const Universe& u,
                      const std::vector<std::pair<int, int>>& pairs,
                      bool take_reflexive_closure) {
  BinRel r(u);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= u.size() || y < 0 || y >= u.size())
      throw UnknownElement("pair index out of range");
    r.add(x, y);
  }
  if (take_reflexive_closure)
    for (int i = 0; i < u.size(); ++i) r.add(i, i);
  return r;
}

BinRel diagonal(const Universe& u) {
  BinRel r(u);
  for (int i = 0; i < u.size(); ++i) r.add(i, i);
  return r;
}

BinRel converse(const BinRel& r) {
  BinRel c(r.universe);
  c.out = r.in;
  c.in = r.out;
  return c;
}

BinRel compose(const BinRel& a, const BinRel& b) {
  if (!a.same_universe(b)) throw UniverseMismatch("compose: universes differ");
  BinRel c(a.universe);
  for (int x = 0; x < a.n(); ++x)
    for (int z : bit_range(a.out[x]))
      for (int y : bit_range(b.out[z])) c.add(x, y);
  return c;
}

BinRel rel_union(const BinRel& a, const BinRel& b) {
  if (!a.same_universe(b)) throw UniverseMismatch("union: universes differ");
  BinRel c(a.universe);
  for (int x = 0; x < a.n(); ++x)
    for (int y : bit_range(a.out[x] | b.out[x])) c.add(x, y);
  return c;
}

BinRel rel_intersect(const BinRel& a, const BinRel& b) {
  if (!a.same_universe(b)) throw UniverseMismatch("intersect: universes differ");
  BinRel c(a.universe);
  for (int x = 0; x < a.n(); ++x)
    for (int y : bit_range(a.out[x] & b.out[x])) c.add(x, y);
  return c;
}

BinRel rel_minus(const BinRel& a, const BinRel& b) {
  if (!a.same_universe(b)) throw UniverseMismatch("minus: universes differ");
  BinRel c(a.universe);
  for (int x = 0; x < a.n(); ++x)
    for (int y : bit_range(a.out[x] & ~b.out[x])) c.add(x, y);
  return c;
}

bool rel_subset(const BinRel& a, const BinRel& b) {
  if (!a.same_universe(b)) throw UniverseMismatch("subset: universes differ");
  for (int x = 0; x < a.n(); ++x)
    if (a.out[x] & ~b.out[x]) return false;
  return true;
}

BinRel tau(const BinRel& r) {
  BinRel t(r.universe);
  for (int x = 0; x < r.n(); ++x)
    for (int y : bit_range(r.out[x] & r.in[x])) t.add(x, y);
  return t;
}

BinRel weak_transitive_closure(const BinRel& r) {
  BinRel c = r;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < c.n(); ++x) {
      Bits reach = c.out[x];
      for (int z : bit_range(c.out[x])) reach |= c.out[z];
      if (reach != c.out[x]) {
        for (int y : bit_range(reach & ~c.out[x])) c.add(x, y);
        changed = true;
      }
    }
  }
  return c;
}

namespace {

// (R∘R)∖Δ ⊆ R.
bool weakly_transitive_of(const BinRel& r) {
  for (int x = 0; x < r.n(); ++x) {
    Bits reach = 0;
    for (int z : bit_range(r.out[x])) reach |= r.out[z];
    reach &= ~(Bits(1) << x);
    if (reach & ~r.out[x]) return false;
  }
  return true;
}

bool transitive_of(const BinRel& r) {
  for (int x = 0; x < r.n(); ++x) {
    Bits reach = 0;
    for (int z : bit_range(r.out[x])) reach |= r.out[z];
    if (reach & ~r.out[x]) return false;
  }
  return true;
}

}  // namespace

RelationProfile classify(const BinRel& r) {
  RelationProfile p;
  const int n = r.n();
  p.reflexive = true;
  for (int i = 0; i < n; ++i)
    if (!r.has(i, i)) p.reflexive = false;
  p.symmetric = true;
  p.antisymmetric = true;
  for (int x = 0; x < n; ++x) {
    if (r.out[x] != r.in[x]) p.symmetric = false;
    Bits both = r.out[x] & r.in[x] & ~(Bits(1) << x);
    if (both) p.antisymmetric = false;
  }
  p.transitive = transitive_of(r);
  p.weakly_transitive = weakly_transitive_of(r);
  p.proto_tau = weakly_transitive_of(tau(r));

  p.proto_elementwise = true;
  BinRel t = tau(r);
  for (int x = 0; x < n && p.proto_elementwise; ++x)
    for (int y : bit_range(t.out[x])) {
      if (y == x) continue;
      // premises Rxy, Ryx, Ryz, Rzy with x!=y, y!=z; conclusion Rxz
      for (int z : bit_range(t.out[y])) {
        if (z == y) continue;
        if (!r.has(x, z)) {
          p.proto_elementwise = false;
          break;
        }
      }
      if (!p.proto_elementwise) break;
    }

  p.semi_transitive = true;
  for (int a = 0; a < n && p.semi_transitive; ++a)
    for (int b : bit_range(t.out[a])) {
      // tau(R)ab & Rbc -> Rac
      if (r.out[b] & ~r.out[a]) {
        p.semi_transitive = false;
        break;
      }
      // tau(R)ab & Rca -> Rcb
      if (r.in[a] & ~r.in[b]) {
        p.semi_transitive = false;
        break;
      }
    }

  p.quasi_order = p.reflexive && p.transitive;
  p.partial_order = p.quasi_order && p.antisymmetric;
  p.equivalence = p.quasi_order && p.symmetric;
  p.tolerance = p.reflexive && p.symmetric;
  BinRel sharp = weak_transitive_closure(r);
  p.acyclic = true;
  for (int i = 0; i < n; ++i)
    if (sharp.has(i, i)) p.acyclic = false;
  return p;
}

bool is_prax(const BinRel& r) {
  RelationProfile p = classify(r);
  return is_prax(p);
}

BinRel derived_relation(const BinRel& r, DerivedKind kind) {
  switch (kind) {
    case DerivedKind::dot: {
      BinRel sharp = weak_transitive_closure(r);
      BinRel d(r.universe);
      for (int a = 0; a < r.n(); ++a)
        for (int b : bit_range(r.out[a]))
          if (!(sharp.has(a, b) && sharp.has(b, a))) d.add(a, b);
      return d;
    }
    case DerivedKind::lf: {
      BinRel ro = rel_union(r, diagonal(r.universe));
      BinRel d(r.universe);
      for (int a = 0; a < r.n(); ++a)
        for (int b = 0; b < r.n(); ++b)
          if (proper_subset_of(ro.in[b], ro.in[a]) &&
              proper_subset_of(ro.out[a], ro.out[b]))
            d.add(a, b);
      return d;
    }
    case DerivedKind::cyc: {
      BinRel sharp = weak_transitive_closure(r);
      return rel_intersect(sharp, converse(sharp));
    }
    case DerivedKind::h:
      return rel_intersect(derived_relation(r, DerivedKind::lf),
                           derived_relation(r, DerivedKind::dot));
    case DerivedKind::hash_dot:
      return rel_minus(weak_transitive_closure(r), tau(r));
    case DerivedKind::dot_hash:
      return weak_transitive_closure(rel_minus(r, tau(r)));
    case DerivedKind::ortho_union:
      return rel_union(derived_relation(r, DerivedKind::dot_hash), tau(r));
  }
  throw PraxError("unreachable derived kind");
}

Quotient quotient(const BinRel& q) {
  BinRel t = tau(q);
  RelationProfile tp = classify(t);
  if (!(tp.reflexive && tp.symmetric && tp.transitive))
    throw NonEquivalenceTau("tau(Q) is not an equivalence");
  Quotient result;
  result.class_of.assign(q.n(), -1);
  for (int x = 0; x < q.n(); ++x) {
    if (result.class_of[x] >= 0) continue;
    int idx = static_cast<int>(result.classes.size());
    result.classes.push_back(t.out[x]);
    for (int y : bit_range(t.out[x])) result.class_of[y] = idx;
  }
  int m = static_cast<int>(result.classes.size());
  std::vector<std::string> labels;
  for (Bits c : result.classes)
    labels.push_back(subset_to_string(q.universe, c));
  result.sigma = BinRel(Universe(std::move(labels)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool related = false;
      for (int b : bit_range(result.classes[i])) {
        if (q.out[b] & result.classes[j]) {
          related = true;
          break;
        }
      }
      if (related) result.sigma.add(i, j);
    }
  return result;
}

Bits symmetric_center(const BinRel& r) {
  BinRel t = tau(r);
  Bits k = 0;
  for (int x = 0; x < r.n(); ++x)
    for (int y : bit_range(t.out[x] & ~(Bits(1) << x)))
      k |= (Bits(1) << x) | (Bits(1) << y);
  return k;
}

POAProfile poa_check(const BinRel& r, const BinRel& lt) {
  if (!r.same_universe(lt)) throw UniverseMismatch("poa_check: universes differ");
  POAProfile p;
  const int n = r.n();
  BinRel sharp = weak_transitive_closure(r);
  BinRel strict = rel_minus(lt, converse(lt));
  p.po1 = p.po2 = p.po5 = true;
  for (int a = 0; a < n; ++a)
    for (int b : bit_range(strict.out[a])) {
      if (!sharp.has(a, b)) p.po1 = false;
      if (sharp.has(b, a)) p.po2 = false;
      if (!r.has(a, b)) p.po5 = false;
    }
  BinRel h = derived_relation(r, DerivedKind::h);
  p.po3 = true;
  for (int a = 0; a < n; ++a)
    if (h.out[a] & ~lt.out[a]) p.po3 = false;
  p.po4 = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r.in[a] == r.in[b] && r.out[a] == r.out[b] &&
          !(lt.in[a] == lt.in[b] && lt.out[a] == lt.out[b]))
        p.po4 = false;
  p.poa = p.po1 && p.po2 && p.po3 && p.po4;
  p.wpoa = p.po1 && p.po3 && p.po4;
  p.ipoa = p.poa && p.po5;
  RelationProfile lp = classify(lt);
  p.lqo = lp.quasi_order && p.po1 && p.po2;
  return p;
}

bool in_lqo(const BinRel& r, const BinRel& candidate) {
  return poa_check(r, candidate).lqo;
}

BinRel lqo_meet(const BinRel& r, const BinRel& a, const BinRel& b) {
  if (!in_lqo(r, a) || !in_lqo(r, b))
    throw NotInLQO("operand is not a lean quasi order approximation");
  return rel_intersect(a, b);
}

BinRel lqo_join(const BinRel& r, const BinRel& a, const BinRel& b) {
  if (!in_lqo(r, a) || !in_lqo(r, b))
    throw NotInLQO("operand is not a lean quasi order approximation");
  return weak_transitive_closure(rel_union(a, b));
}

BinRel lqo_top(const BinRel& r) { return weak_transitive_closure(r); }

}  // namespace prax
