#include "prax/rough.hpp"

#include <algorithm>
#include <map>

namespace prax {

namespace {

// (lower, upper) of every subset of S; the workhorse for powerset scans.
std::vector<RoughPair> lu_table(const BinRel& r) {
  if (r.n() > 12)
    throw UniverseTooLarge("powerset scan limited to n <= 12");
  ApproxTable t(r);
  Bits top = r.universe.all();
  std::vector<RoughPair> lu(std::size_t(top) + 1);
  for (Bits a = 0;; ++a) {
    lu[a] = {t.get(a, ApproxKind::l), t.get(a, ApproxKind::u)};
    if (a == top) break;
  }
  return lu;
}

}  // namespace

bool rough_leq(const BinRel& r, Bits a, Bits b) {
  ApproxTable t(r);
  return subset_of(t.get(a, ApproxKind::l), t.get(b, ApproxKind::l)) &&
         subset_of(t.get(a, ApproxKind::u), t.get(b, ApproxKind::u));
}

bool rough_equal(const BinRel& r, Bits a, Bits b) {
  ApproxTable t(r);
  return t.get(a, ApproxKind::l) == t.get(b, ApproxKind::l) &&
         t.get(a, ApproxKind::u) == t.get(b, ApproxKind::u);
}

int PosetH::class_of(Bits a) const {
  ApproxTable t(rel);
  RoughPair key{t.get(a, ApproxKind::l), t.get(a, ApproxKind::u)};
  for (int i = 0; i < size(); ++i)
    if (classes[i].rep == key) return i;
  return -1;
}

PosetH requal_classes(const BinRel& r) {
  PosetH h;
  h.rel = r;
  std::vector<RoughPair> lu = lu_table(r);
  std::map<RoughPair, int> index;
  Bits top = r.universe.all();
  for (Bits a = 0;; ++a) {
    auto [it, fresh] = index.try_emplace(lu[a], h.size());
    if (fresh) h.classes.push_back({lu[a], {}});
    h.classes[it->second].members.push_back(a);
    if (a == top) break;
  }
  h.zero = index.at(lu[0]);
  h.one = index.at(lu[top]);
  return h;
}

bool class_leq(const PosetH& h, int x, int y) {
  const RoughPair& a = h.classes[x].rep;
  const RoughPair& b = h.classes[y].rep;
  return subset_of(a.lower, b.lower) && subset_of(a.upper, b.upper);
}

bool is_s_ideal(const PosetH& h, const std::vector<int>& k) {
  std::vector<bool> in(h.size(), false);
  for (int c : k) in[c] = true;
  for (int c : k)
    for (int x = 0; x < h.size(); ++x)
      if (class_leq(h, x, c) && !in[x]) return false;
  for (int a : k)
    for (int b : k) {
      bool found = false;
      for (int x : k)
        if (class_leq(h, a, x) && class_leq(h, b, x)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

namespace {

bool strictly_less(const PosetH& h, int x, int y) {
  return class_leq(h, x, y) && !class_leq(h, y, x);
}

AtomType atom_type(const PosetH& h, const RoughClass& cls) {
  std::vector<Bits> members = cls.members;
  std::sort(members.begin(), members.end());

  // Type-0: members are exactly the nonempty subsets of some successor
  // neighborhood [x].
  for (int x = 0; x < h.rel.n(); ++x) {
    Bits g = h.rel.in[x];
    std::vector<Bits> expect;
    for (Bits a = g;; a = (a - 1) & g) {
      if (a != 0) expect.push_back(a);
      if (a == 0) break;
    }
    std::sort(expect.begin(), expect.end());
    if (expect == members) return AtomType::type0;
  }

  if (cls.rep.lower != 0) return AtomType::none;

  // Type-1: members are exactly the subsets strictly between the empty set
  // and their union.
  Bits alpha = 0;
  for (Bits m : members) alpha |= m;
  std::vector<Bits> expect;
  for (Bits a = alpha;; a = (a - 1) & alpha) {
    if (a != 0 && a != alpha) expect.push_back(a);
    if (a == 0) break;
  }
  std::sort(expect.begin(), expect.end());
  if (expect == members) return AtomType::type1;

  // Type-2: every member has an empty lower approximation.
  return AtomType::type2;
}

}  // namespace

std::vector<Atom> atoms(const PosetH& h) {
  std::vector<Atom> result;
  for (int c = 0; c < h.size(); ++c) {
    if (!strictly_less(h, h.zero, c)) continue;
    bool cover = true;
    for (int d = 0; d < h.size(); ++d)
      if (strictly_less(h, h.zero, d) && strictly_less(h, d, c)) {
        cover = false;
        break;
      }
    if (cover) result.push_back({c, atom_type(h, h.classes[c])});
  }
  return result;
}

AtomicityResult is_atomic(const PosetH& h) {
  AtomicityResult res;
  res.atomic = true;
  res.witness.assign(h.size(), -1);
  std::vector<Atom> at = atoms(h);
  for (int c = 0; c < h.size(); ++c) {
    if (!strictly_less(h, h.zero, c)) continue;
    for (const Atom& a : at)
      if (class_leq(h, a.cls, c)) {
        res.witness[c] = a.cls;
        break;
      }
    if (res.witness[c] < 0) res.atomic = false;
  }
  return res;
}

bool critical(const BinRel& r, Bits x, Bits z, CriticalKind kind) {
  if (r.n() > 10)
    throw UniverseTooLarge("critical-element scan limited to n <= 10");
  std::vector<RoughPair> lu = lu_table(r);
  Bits top = r.universe.all();
  auto each = [&](auto&& f) {
    for (Bits a = 0;; ++a) {
      if (!f(a)) return false;
      if (a == top) break;
    }
    return true;
  };
  switch (kind) {
    case CriticalKind::weak_upper: {
      if (!proper_subset_of(z, x))
        throw SideConditionViolated("weak_upper requires z strictly inside x");
      return each([&](Bits y) {
        if (lu[y].lower == z && proper_subset_of(x, y))
          return proper_subset_of(lu[x].upper, lu[y].upper);
        return true;
      });
    }
    case CriticalKind::upper: {
      if (!proper_subset_of(z, x))
        throw SideConditionViolated("upper requires z strictly inside x");
      return each([&](Bits v) {
        if (!(lu[v].lower == z && proper_subset_of(v, x))) return true;
        return each([&](Bits y) {
          if (lu[y].lower == z && proper_subset_of(x, y))
            return lu[v].upper == lu[x].upper &&
                   proper_subset_of(lu[x].upper, lu[y].upper);
          return true;
        });
      });
    }
    case CriticalKind::bi: {
      Bits a = x, b = z;
      return each([&](Bits p) {
        if (!proper_subset_of(a, p)) return true;
        return each([&](Bits q) {
          if (!(subset_of(p, q) && proper_subset_of(q, b))) return true;
          return lu[p].upper == lu[q].upper && lu[p].lower == lu[q].lower &&
                 proper_subset_of(lu[p].upper, lu[b].upper) &&
                 proper_subset_of(lu[a].lower, lu[p].lower);
        });
      });
    }
    case CriticalKind::weak_lower: {
      if (!proper_subset_of(x, z))
        throw SideConditionViolated("weak_lower requires z strictly outside x");
      return each([&](Bits y) {
        if (lu[y].upper == z && proper_subset_of(y, x))
          return proper_subset_of(lu[y].lower, lu[x].lower);
        return true;
      });
    }
    case CriticalKind::lower: {
      if (!proper_subset_of(x, z))
        throw SideConditionViolated("lower requires z strictly outside x");
      return each([&](Bits y) {
        if (!(lu[y].upper == z && proper_subset_of(y, x))) return true;
        return each([&](Bits v) {
          if (lu[v].upper == z && proper_subset_of(x, v))
            return proper_subset_of(lu[y].lower, lu[x].lower) &&
                   lu[x].lower == lu[v].lower;
          return true;
        });
      });
    }
    case CriticalKind::lower_abs: {
      return each([&](Bits y) {
        if (proper_subset_of(y, x))
          return proper_subset_of(lu[y].lower, lu[x].lower);
        return true;
      });
    }
    case CriticalKind::critical: {
      return critical(r, x, z, CriticalKind::upper) &&
             critical(r, x, 0, CriticalKind::lower_abs);
    }
  }
  throw PraxError("unreachable critical kind");
}

CriticalSets critical_sets(const BinRel& r) {
  if (r.n() > 6)
    throw UniverseTooLarge("critical-set enumeration limited to n <= 6");
  CriticalSets cs;
  Bits top = r.universe.all();
  for (Bits x = 0;; ++x) {
    bool uc = false;
    for (Bits z = 0; !uc; ++z) {
      if (proper_subset_of(z, x) && critical(r, x, z, CriticalKind::upper))
        uc = true;
      if (z == top) break;
    }
    bool lc = critical(r, x, 0, CriticalKind::lower_abs);
    if (uc) cs.uc.push_back(x);
    if (lc) cs.lc.push_back(x);
    if (uc && lc) cs.cr.push_back(x);
    if (x == top) break;
  }
  return cs;
}

namespace {

void maximal_antichains(const std::vector<Bits>& pool, std::size_t start,
                        std::vector<Bits>& current,
                        std::vector<std::vector<Bits>>& out) {
  bool extended = false;
  for (std::size_t i = start; i < pool.size(); ++i) {
    bool ok = true;
    for (Bits m : current)
      if (subset_of(m, pool[i]) || subset_of(pool[i], m)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    extended = true;
    current.push_back(pool[i]);
    maximal_antichains(pool, i + 1, current, out);
    current.pop_back();
  }
  if (!current.empty()) {
    // Maximal iff no pool element whatsoever can be added.
    bool maximal = true;
    for (Bits c : pool) {
      if (std::find(current.begin(), current.end(), c) != current.end())
        continue;
      bool ok = true;
      for (Bits m : current)
        if (subset_of(m, c) || subset_of(c, m)) {
          ok = false;
          break;
        }
      if (ok) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(current);
  }
  (void)extended;
}

}  // namespace

std::vector<std::vector<Bits>> brooms(const BinRel& r, BroomDirection dir) {
  if (r.n() > 6)
    throw UniverseTooLarge("broom enumeration limited to n <= 6");
  std::vector<RoughPair> lu = lu_table(r);
  Bits top = r.universe.all();
  std::vector<std::vector<Bits>> result;
  if (dir == BroomDirection::upper) {
    // Group the non-singleton subsets by upper approximation, then collect
    // the maximal antichains inside each group.
    std::map<Bits, std::vector<Bits>> groups;
    for (Bits a = 0;; ++a) {
      if (popcount(a) != 1) groups[lu[a].upper].push_back(a);
      if (a == top) break;
    }
    for (auto& [_, pool] : groups) {
      std::vector<Bits> current;
      maximal_antichains(pool, 0, current, result);
    }
    return result;
  }
  // Lower brooms: condition (3) forbids any proper subcollection of
  // cardinality >= 2 satisfying (1) and (2), so only collections of one or
  // two members qualify.
  for (Bits a = 0;; ++a) {
    if (popcount(a) != 1 && lu[a].lower != a) result.push_back({a});
    if (a == top) break;
  }
  for (Bits a = 0;; ++a) {
    if (popcount(a) != 1 && lu[a].lower != a) {
      for (Bits b = a + 1;; ++b) {
        if (popcount(b) != 1 && lu[b].lower == lu[a].lower &&
            lu[b].lower != b && !subset_of(a, b) && !subset_of(b, a))
          result.push_back({a, b});
        if (b == top) break;
      }
    }
    if (a == top) break;
  }
  return result;
}

std::vector<Bits> bruinval_members(const BinRel& r, const Bruinval& b) {
  if (r.n() > 12)
    throw UniverseTooLarge("bruinval scan limited to n <= 12");
  Bits top = r.universe.all();
  auto collect = [&](auto&& pred) {
    std::vector<Bits> out;
    for (Bits z = 0;; ++z) {
      if (pred(z)) out.push_back(z);
      if (z == top) break;
    }
    return out;
  };
  auto any_between = [](Bits z, const std::vector<Bits>& fam, bool lo_strict,
                        bool hi_strict, Bits x) {
    bool lo_ok = lo_strict ? proper_subset_of(x, z) : subset_of(x, z);
    if (!lo_ok) return false;
    for (Bits e : fam) {
      bool hi_ok = hi_strict ? proper_subset_of(z, e) : subset_of(z, e);
      if (hi_ok) return true;
    }
    return false;
  };
  switch (b.kind) {
    case BruinvalKind::b0_open:
      return collect([&](Bits z) {
        return proper_subset_of(b.x, z) && proper_subset_of(z, b.y);
      });
    case BruinvalKind::b0_half_lo:
      return collect([&](Bits z) {
        return subset_of(b.x, z) && proper_subset_of(z, b.y);
      });
    case BruinvalKind::b0_half_hi:
      return collect([&](Bits z) {
        return proper_subset_of(b.x, z) && subset_of(z, b.y);
      });
    case BruinvalKind::b0_closed:
      return collect(
          [&](Bits z) { return subset_of(b.x, z) && subset_of(z, b.y); });
    case BruinvalKind::open_lo:
      return collect(
          [&](Bits z) { return any_between(z, b.alpha, false, true, b.x); });
    case BruinvalKind::open_hi:
      return collect(
          [&](Bits z) { return any_between(z, b.alpha, true, false, b.x); });
    case BruinvalKind::open_both:
      return collect(
          [&](Bits z) { return any_between(z, b.alpha, true, true, b.x); });
    case BruinvalKind::closed:
      return collect(
          [&](Bits z) { return any_between(z, b.alpha, false, false, b.x); });
    case BruinvalKind::closed_set:
      return collect([&](Bits z) {
        for (Bits x : b.alpha)
          if (any_between(z, b.beta, false, false, x)) return true;
        return false;
      });
    case BruinvalKind::open_set:
      return collect([&](Bits z) {
        for (Bits x : b.alpha)
          if (any_between(z, b.beta, true, true, x)) return true;
        return false;
      });
    case BruinvalKind::semi_closed: {
      auto member = [&](Bits z) {
        for (Bits x : b.alpha)
          if (any_between(z, b.beta, true, true, x)) return true;  // (a1,b1)
        for (Bits x : b.alpha2)
          if (any_between(z, b.beta2, false, false, x)) return true;  // [a2,b2]
        for (Bits x : b.alpha)
          if (any_between(z, b.beta2, true, false, x)) return true;  // (a1,b2]
        for (Bits x : b.alpha2)
          if (any_between(z, b.beta, false, true, x)) return true;  // [a2,b1)
        return false;
      };
      return collect(member);
    }
  }
  throw PraxError("unreachable bruinval kind");
}

bool is_requal_family(const BinRel& r, const std::vector<Bits>& members) {
  if (members.empty()) return true;
  ApproxTable t(r);
  Bits l0 = t.get(members[0], ApproxKind::l);
  Bits u0 = t.get(members[0], ApproxKind::u);
  for (Bits m : members)
    if (t.get(m, ApproxKind::l) != l0 || t.get(m, ApproxKind::u) != u0)
      return false;
  return true;
}

bool is_full_requal(const BinRel& r, const std::vector<Bits>& members) {
  if (members.empty() || !is_requal_family(r, members)) return false;
  ApproxTable t(r);
  Bits l0 = t.get(members[0], ApproxKind::l);
  Bits u0 = t.get(members[0], ApproxKind::u);
  Bits top = r.universe.all();
  for (Bits z = 0;; ++z) {
    if (t.get(z, ApproxKind::l) == l0 && t.get(z, ApproxKind::u) == u0 &&
        std::find(members.begin(), members.end(), z) == members.end())
      return false;
    if (z == top) break;
  }
  return true;
}

}  // namespace prax
