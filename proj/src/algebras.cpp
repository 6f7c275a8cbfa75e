#include "prax/algebras.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace prax {

namespace {

Bits member_union(const PosetH& h, int a) {
  Bits u = 0;
  for (Bits m : h.classes[a].members) u |= m;
  return u;
}

std::map<RoughPair, int> pair_index(const PosetH& h) {
  std::map<RoughPair, int> m;
  for (int i = 0; i < h.size(); ++i) m[h.classes[i].rep] = i;
  return m;
}

std::optional<int> find_pair(const PosetH& h, const RoughPair& p) {
  for (int i = 0; i < h.size(); ++i)
    if (h.classes[i].rep == p) return i;
  return std::nullopt;
}

int require_pair(const PosetH& h, const RoughPair& p, const char* what) {
  if (auto i = find_pair(h, p)) return *i;
  throw EmptyResult(std::string(what) + ": no subset realizes the target pair");
}

ApproxTable table_of(const PosetH& h) { return ApproxTable(h.rel); }

}  // namespace

int h_lower(const PosetH& h, int a) {
  return h.class_of(h.classes[a].rep.lower);
}

int h_upper(const PosetH& h, int a) {
  return h.class_of(h.classes[a].rep.upper);
}

int h_odot(const PosetH& h, int a, int b) {
  return h.class_of(member_union(h, a) & member_union(h, b));
}

int h_oplus(const PosetH& h, int a, int b) {
  return h.class_of(member_union(h, a) | member_union(h, b));
}

std::vector<int> h_lb(const PosetH& h, int a, int b) {
  std::vector<int> out;
  for (int c = 0; c < h.size(); ++c)
    if (class_leq(h, c, a) && class_leq(h, c, b)) out.push_back(c);
  return out;
}

std::vector<int> h_ub(const PosetH& h, int a, int b) {
  std::vector<int> out;
  for (int c = 0; c < h.size(); ++c)
    if (class_leq(h, a, c) && class_leq(h, b, c)) out.push_back(c);
  return out;
}

std::optional<int> h_glb(const PosetH& h, int a, int b) {
  for (int c : h_lb(h, a, b)) {
    bool greatest = true;
    for (int d : h_lb(h, a, b))
      if (!class_leq(h, d, c)) {
        greatest = false;
        break;
      }
    if (greatest) return c;
  }
  return std::nullopt;
}

std::optional<int> h_lub(const PosetH& h, int a, int b) {
  for (int c : h_ub(h, a, b)) {
    bool least = true;
    for (int d : h_ub(h, a, b))
      if (!class_leq(h, c, d)) {
        least = false;
        break;
      }
    if (least) return c;
  }
  return std::nullopt;
}

std::optional<int> h_plus_opt(const PosetH& h, int a, int b) {
  ApproxTable t = table_of(h);
  const RoughPair& pa = h.classes[a].rep;
  const RoughPair& pb = h.classes[b].rep;
  RoughPair target{t.get(pa.lower & pb.lower, ApproxKind::l),
                   pa.upper | pb.upper};
  return find_pair(h, target);
}

std::optional<int> h_plus_variant_opt(const PosetH& h, int a, int b) {
  const RoughPair& pa = h.classes[a].rep;
  const RoughPair& pb = h.classes[b].rep;
  RoughPair target{pa.lower & pb.lower, pa.upper | pb.upper};
  return find_pair(h, target);
}

std::optional<int> h_times_opt(const PosetH& h, int a, int b) {
  const RoughPair& pa = h.classes[a].rep;
  const RoughPair& pb = h.classes[b].rep;
  Bits l = pa.lower | pb.lower;
  RoughPair target{l, l | (pa.upper & pb.upper)};
  return find_pair(h, target);
}

std::optional<int> h_otimes_opt(const PosetH& h, int a, int b) {
  const RoughPair& pa = h.classes[a].rep;
  const RoughPair& pb = h.classes[b].rep;
  RoughPair target{pa.lower | pb.lower, pa.upper | pb.upper};
  return find_pair(h, target);
}

int h_plus(const PosetH& h, int a, int b) {
  ApproxTable t = table_of(h);
  const RoughPair& pa = h.classes[a].rep;
  const RoughPair& pb = h.classes[b].rep;
  RoughPair target{t.get(pa.lower & pb.lower, ApproxKind::l),
                   pa.upper | pb.upper};
  return require_pair(h, target, "plus");
}

int h_plus_variant(const PosetH& h, int a, int b) {
  if (auto i = h_plus_variant_opt(h, a, b)) return *i;
  throw EmptyResult("plus variant: no subset realizes the target pair");
}

int h_times(const PosetH& h, int a, int b) {
  if (auto i = h_times_opt(h, a, b)) return *i;
  throw EmptyResult("times: no subset realizes the target pair");
}

int h_otimes(const PosetH& h, int a, int b) {
  if (auto i = h_otimes_opt(h, a, b)) return *i;
  throw EmptyResult("otimes: no subset realizes the target pair");
}

FilterFlags filter_classify(const PosetH& h, const std::vector<int>& k) {
  std::vector<char> in(h.size(), 0);
  for (int c : k) in[c] = 1;
  FilterFlags f;
  f.f1 = true;
  for (int x : k)
    for (int y = 0; y < h.size(); ++y)
      if (class_leq(h, x, y) && !in[y]) f.f1 = false;
  f.f2 = true;
  for (int x : k) {
    if (!in[h_lower(h, x)]) f.f2 = false;
    for (int y : k)
      if (!in[h_oplus(h, x, y)]) f.f2 = false;
  }
  f.f3 = true;
  for (int a = 0; a < h.size(); ++a)
    for (int b = 0; b < h.size(); ++b) {
      int s = h_oplus(h, a, b);
      if (s != h.one && in[s] && !in[a] && !in[b]) f.f3 = false;
    }
  f.f4 = true;
  for (int a = 0; a < h.size(); ++a)
    for (int b = 0; b < h.size(); ++b) {
      bool hit = false;
      for (int c : h_ub(h, a, b))
        if (c != h.one && in[c]) {
          hit = true;
          break;
        }
      if (hit && !in[a] && !in[b]) f.f4 = false;
    }
  f.f5 = true;
  for (int a : k)
    for (int b : k) {
      bool hit = false;
      for (int c : h_lb(h, a, b))
        if (in[c]) {
          hit = true;
          break;
        }
      if (!hit) f.f5 = false;
    }
  return f;
}

std::vector<int> filter_generated(const PosetH& h,
                                  const std::vector<int>& base) {
  std::set<int> cur(base.begin(), base.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> items(cur.begin(), cur.end());
    for (int x : items) {
      for (int y = 0; y < h.size(); ++y)
        if (class_leq(h, x, y) && cur.insert(y).second) grew = true;
      if (cur.insert(h_lower(h, x)).second) grew = true;
      for (int y : items)
        if (cur.insert(h_oplus(h, x, y)).second) grew = true;
    }
  }
  return {cur.begin(), cur.end()};
}

std::vector<int> filter_meet(const PosetH& h, const std::vector<int>& f,
                             const std::vector<int>& p) {
  (void)h;
  std::set<int> a(f.begin(), f.end());
  std::vector<int> out;
  for (int c : p)
    if (a.count(c)) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> filter_join(const PosetH& h, const std::vector<int>& f,
                             const std::vector<int>& p) {
  std::vector<int> base = f;
  base.insert(base.end(), p.begin(), p.end());
  return filter_generated(h, base);
}

std::vector<std::vector<int>> all_filters(const PosetH& h) {
  if (h.size() > 16)
    throw UniverseTooLarge("filter enumeration limited to 16 classes");
  std::vector<std::vector<int>> out;
  const Bits top = full_mask(h.size());
  for (Bits m = 0;; ++m) {
    std::vector<int> k;
    for (int c : bit_range(m)) k.push_back(c);
    FilterFlags f = filter_classify(h, k);
    if (f.filter()) out.push_back(k);
    if (m == top) break;
  }
  return out;
}

FilterLatticeReport filter_lattice_report(const PosetH& h) {
  auto filters = all_filters(h);
  FilterLatticeReport rep;
  rep.count = static_cast<int>(filters.size());
  std::set<std::vector<int>> fam(filters.begin(), filters.end());
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  bool has_bot = false, has_top = false;
  for (const auto& f : filters) {
    bool bot = true, top = true;
    for (const auto& g : filters) {
      if (!subset(f, g)) bot = false;
      if (!subset(g, f)) top = false;
    }
    has_bot = has_bot || bot;
    has_top = has_top || top;
  }
  rep.bounded = has_bot && has_top;
  rep.lattice = true;
  for (const auto& f : filters)
    for (const auto& g : filters) {
      if (!fam.count(filter_meet(h, f, g))) rep.lattice = false;
      if (!fam.count(filter_join(h, f, g))) rep.lattice = false;
    }
  // Atoms: covers of the least filter; atomistic means every filter is the
  // join of the atoms it contains.
  std::vector<int> bot;
  for (const auto& f : filters)
    if ([&] {
          for (const auto& g : filters)
            if (!subset(f, g)) return false;
          return true;
        }())
      bot = f;
  std::vector<std::vector<int>> atom_list;
  for (const auto& f : filters) {
    if (f == bot || !subset(bot, f)) continue;
    bool cover = true;
    for (const auto& g : filters)
      if (g != f && g != bot && subset(bot, g) && subset(g, f)) {
        cover = false;
        break;
      }
    if (cover) atom_list.push_back(f);
  }
  rep.atomistic = true;
  for (const auto& f : filters) {
    std::vector<int> join = bot;
    for (const auto& a : atom_list)
      if (subset(a, f)) join = filter_join(h, join, a);
    if (join != f) rep.atomistic = false;
  }
  return rep;
}

std::vector<RoughPair> pair_space(const BinRel& r) {
  if (r.n() > 12)
    throw UniverseTooLarge("pair-space enumeration limited to n <= 12");
  ApproxTable t(r);
  const Bits top = r.universe.all();
  std::set<RoughPair> seen;
  for (Bits a = 0;; ++a) {
    seen.insert({t.get(a, ApproxKind::l), t.get(a, ApproxKind::u)});
    if (a == top) break;
  }
  return {seen.begin(), seen.end()};
}

RoughPair pv_join(const RoughPair& a, const RoughPair& b) {
  return {a.lower | b.lower, a.upper | b.upper};
}

bool pair_realized(const BinRel& r, const RoughPair& p) {
  auto space = pair_space(r);
  return std::binary_search(space.begin(), space.end(), p,
                            [](const RoughPair& x, const RoughPair& y) {
                              return x < y;
                            });
}

std::optional<RoughPair> pv_meet(const BinRel& r, const RoughPair& a,
                                 const RoughPair& b) {
  RoughPair p{a.lower & b.lower, a.upper & b.upper};
  if (!pair_realized(r, p)) return std::nullopt;
  return p;
}

std::optional<RoughPair> pv_wcomp(const BinRel& r, const RoughPair& a) {
  Bits all = r.universe.all();
  RoughPair p{all & ~a.upper, all & ~a.lower};
  if (!pair_realized(r, p)) return std::nullopt;
  return p;
}

std::optional<RoughPair> pv_pmeet(const BinRel& r, const RoughPair& a,
                                  const RoughPair& b) {
  ApproxTable t(r);
  RoughPair p{t.get(a.lower & b.lower, ApproxKind::l),
              t.get(a.upper & b.upper, ApproxKind::l)};
  if (!pair_realized(r, p)) return std::nullopt;
  return p;
}

PhiTau::PhiTau(const BinRel& r_, const BinRel& w_) : r(r_), w(w_) {
  if (!rel_subset(r, w))
    throw NotSubrelation("granule evolution requires the base relation to "
                         "be contained in the coarser one");
  if (!classify(w).transitive)
    throw NotTransitive("granule evolution requires a transitive coarser "
                        "relation");
  phi_o_.resize(r.n());
  for (int x = 0; x < r.n(); ++x) {
    Bits u = 0;
    for (int z : bit_range(r.in[x])) u |= w.in[z];
    phi_o_[x] = u;
  }
}

Bits PhiTau::phi_o(int x) const { return phi_o_[x]; }

Bits PhiTau::phi(Bits b) const {
  Bits u = 0;
  for (int x = 0; x < r.n(); ++x)
    if (subset_of(r.in[x], b)) u |= phi_o_[x];
  return u;
}

RoughPair PhiTau::tau_pair(const RoughPair& p) const {
  return {phi(p.lower), phi(p.upper)};
}

std::vector<RoughPair> PhiTau::co_rough(const RoughPair& target) const {
  std::vector<RoughPair> out;
  for (const RoughPair& p : pair_space(r))
    if (tau_pair(p) == target) out.push_back(p);
  return out;
}

}  // namespace prax
