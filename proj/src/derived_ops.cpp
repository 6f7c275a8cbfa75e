#include "prax/derived_ops.hpp"

#include <algorithm>
#include <set>

namespace prax {

namespace {

// Number of universe elements backing a table, recovered from its granules.
int table_n(const ApproxTable& t) {
  return static_cast<int>(t.succ_granules().size());
}

Bits table_all(const ApproxTable& t) { return full_mask(table_n(t)); }

std::vector<Bits> maximal_members(const std::vector<Bits>& fam) {
  std::vector<Bits> out;
  for (Bits a : fam) {
    bool maximal = true;
    for (Bits b : fam)
      if (b != a && subset_of(a, b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

}  // namespace

ChoiceFn default_choice() {
  return [](const std::vector<Bits>& fam) {
    return *std::min_element(fam.begin(), fam.end());
  };
}

HeartParts heart_parts(const ApproxTable& t, Bits x, const ChoiceFn& chi) {
  const Bits top = table_all(t);
  const Bits xl = t.get(x, ApproxKind::l);
  const Bits xuu = t.get(t.get(x, ApproxKind::u), ApproxKind::u);
  HeartParts hp;
  for (Bits y = 0;; ++y) {
    if (subset_of(x, y) && t.get(y, ApproxKind::l) == xl &&
        subset_of(t.get(y, ApproxKind::u), xuu))
      hp.pre_family.push_back(y);
    if (y == top) break;
  }
  hp.maximal = maximal_members(hp.pre_family);
  hp.chosen = chi(hp.maximal);
  hp.result = t.get(hp.chosen, ApproxKind::u);
  return hp;
}

Bits heart(const ApproxTable& t, Bits x, const ChoiceFn& chi) {
  return heart_parts(t, x, chi).result;
}

Bits heart(const BinRel& r, Bits x, const ChoiceFn& chi) {
  return heart(ApproxTable(r), x, chi);
}

Bits diamond(const ApproxTable& t, Bits x, const ChoiceFn& chi) {
  const Bits top = table_all(t);
  const Bits xl = t.get(x, ApproxKind::l);
  std::vector<Bits> fam;
  for (Bits y = 0;; ++y) {
    if (subset_of(x, y) && t.get(y, ApproxKind::l) == xl) fam.push_back(y);
    if (y == top) break;
  }
  return chi(maximal_members(fam));
}

Bits flat(const ApproxTable& t, Bits x, const ChoiceFn& xi) {
  const Bits xu = t.get(x, ApproxKind::u);
  std::vector<Bits> fam;
  for (Bits y = x;; y = (y - 1) & x) {
    if (t.get(y, ApproxKind::u) == xu) fam.push_back(y);
    if (y == 0) break;
  }
  return xi(maximal_members(fam));
}

Bits curlyvee(const ApproxTable& t, Bits x, const ChoiceFn& chi) {
  return t.get(heart(t, x, chi), ApproxKind::u);
}

bool choice_regular(const BinRel& r, const ChoiceFn& chi) {
  ApproxTable t(r);
  const Bits top = r.universe.all();
  std::vector<Bits> chosen(std::size_t(top) + 1);
  std::vector<Bits> low(std::size_t(top) + 1);
  for (Bits a = 0;; ++a) {
    chosen[a] = heart_parts(t, a, chi).chosen;
    low[a] = t.get(a, ApproxKind::l);
    if (a == top) break;
  }
  for (Bits x = 0;; ++x) {
    for (Bits y = x;; ++y) {
      if (subset_of(x, y) && low[x] == low[y] && chosen[x] != chosen[y])
        return false;
      if (y == top) break;
    }
    if (x == top) break;
  }
  return true;
}

std::vector<LawResult> nmr_suite(const BinRel& r, const ChoiceFn& chi) {
  if (r.n() > 5)
    throw UniverseTooLarge("law suite enumeration limited to n <= 5");
  ApproxTable t(r);
  const Bits top = r.universe.all();
  const std::size_t count = std::size_t(top) + 1;
  std::vector<Bits> hv(count), uv(count), lv(count);
  for (Bits a = 0;; ++a) {
    hv[a] = heart(t, a, chi);
    uv[a] = t.get(a, ApproxKind::u);
    lv[a] = t.get(a, ApproxKind::l);
    if (a == top) break;
  }
  auto h2 = [&](Bits a) { return hv[hv[a]]; };

  std::vector<LawResult> out;
  auto positive1 = [&](const char* name, auto pred) {
    LawResult lr{name, false, true, false, ""};
    for (Bits x = 0; lr.holds; ++x) {
      if (!pred(x)) lr.holds = false;
      if (x == top) break;
    }
    out.push_back(lr);
  };
  auto positive2 = [&](const char* name, auto pred) {
    LawResult lr{name, false, true, false, ""};
    for (Bits x = 0; lr.holds; ++x) {
      for (Bits y = 0; lr.holds; ++y) {
        if (!pred(x, y)) lr.holds = false;
        if (y == top) break;
      }
      if (x == top) break;
    }
    out.push_back(lr);
  };
  auto positive3 = [&](const char* name, auto pred) {
    LawResult lr{name, false, true, false, ""};
    for (Bits x = 0; lr.holds; ++x) {
      for (Bits y = 0; lr.holds; ++y) {
        for (Bits z = 0; lr.holds; ++z) {
          if (!pred(x, y, z)) lr.holds = false;
          if (z == top) break;
        }
        if (y == top) break;
      }
      if (x == top) break;
    }
    out.push_back(lr);
  };
  auto negative2 = [&](const char* name, auto witness) {
    LawResult lr{name, true, false, false, ""};
    for (Bits x = 0; !lr.witness_found; ++x) {
      for (Bits y = 0; !lr.witness_found; ++y) {
        if (witness(x, y)) lr.witness_found = true;
        if (y == top) break;
      }
      if (x == top) break;
    }
    out.push_back(lr);
  };
  auto negative3 = [&](const char* name, auto witness) {
    LawResult lr{name, true, false, false, ""};
    for (Bits x = 0; !lr.witness_found; ++x) {
      for (Bits y = 0; !lr.witness_found; ++y) {
        for (Bits z = 0; !lr.witness_found; ++z) {
          if (witness(x, y, z)) lr.witness_found = true;
          if (z == top) break;
        }
        if (y == top) break;
      }
      if (x == top) break;
    }
    out.push_back(lr);
  };

  positive1("inclusion", [&](Bits x) { return subset_of(x, hv[x]); });
  positive1("non_idempotence", [&](Bits x) { return subset_of(hv[x], h2(x)); });
  positive2("cautious_monotony", [&](Bits x, Bits y) {
    return !(subset_of(x, y) && subset_of(y, hv[x])) || subset_of(hv[x], hv[y]);
  });
  positive1("supra_pseudo_classicality",
            [&](Bits x) { return subset_of(uv[x], hv[x]); });
  out.push_back({"top", false, hv[top] == top, false, ""});
  positive1("sub_left_absorption",
            [&](Bits x) { return subset_of(hv[x], hv[uv[x]]); });
  positive1("sub_right_absorption",
            [&](Bits x) { return subset_of(hv[x], uv[hv[x]]); });
  positive1("heart_upper_commutation",
            [&](Bits x) { return subset_of(uv[hv[x]], hv[uv[x]]); });
  negative2("no_left_logical_equivalence",
            [&](Bits x, Bits y) { return uv[x] == uv[y] && hv[x] != hv[y]; });
  negative2("no_jump_equivalence",
            [&](Bits x, Bits y) { return hv[x] == hv[y] && lv[x] != lv[y]; });
  negative3("no_weakening", [&](Bits x, Bits y, Bits z) {
    return subset_of(x, hv[y]) && subset_of(z, uv[x]) && !subset_of(z, hv[y]);
  });
  negative2("no_subclassical_cumulativity", [&](Bits x, Bits y) {
    return subset_of(x, y) && subset_of(y, uv[x]) && hv[x] != hv[y];
  });
  positive2("distributivity", [&](Bits x, Bits y) {
    return subset_of(hv[x] & hv[y], hv[uv[x] & uv[y]]);
  });
  positive3("weak_distributivity", [&](Bits x, Bits y, Bits z) {
    return subset_of(hv[x | z] & hv[y | z], hv[z | (uv[x] & uv[y])]);
  });
  positive3("disjunction_in_antecedent", [&](Bits x, Bits y, Bits z) {
    return subset_of(hv[x | y] & hv[x | z], hv[x | (y | z)]);
  });
  positive2("proof_by_cases", [&](Bits x, Bits y) {
    return subset_of(hv[x | y] & hv[x | (top & ~y)], hv[x]);
  });
  positive3("conditionalization", [&](Bits x, Bits y, Bits z) {
    return !subset_of(y, hv[x | z]) || subset_of((top & ~x) | y, hv[z]);
  });
  return out;
}

ClosureSystemKind closure_kind(const std::vector<Bits>& family,
                               const BinRel& r) {
  ApproxTable t(r);
  // Achievable subfamily intersections: the pairwise-intersection closure of
  // the family together with the whole carrier (the empty subfamily).
  std::set<Bits> inters;
  inters.insert(r.universe.all());
  for (Bits a : family) inters.insert(a);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Bits> cur(inters.begin(), inters.end());
    for (Bits a : cur)
      for (Bits b : cur)
        if (inters.insert(a & b).second) grew = true;
  }
  std::set<Bits> fam(family.begin(), family.end());
  ClosureSystemKind k;
  k.closure = k.u_closure = k.l_closure = true;
  for (Bits a : inters) {
    if (!fam.count(a)) k.closure = false;
    if (!fam.count(t.get(a, ApproxKind::u))) k.u_closure = false;
    if (!fam.count(t.get(a, ApproxKind::l))) k.l_closure = false;
  }
  k.lu_closure = k.u_closure && k.l_closure;
  if (!family.empty()) {
    Bits lo = family.front(), hi = family.front();
    for (Bits a : family) {
      lo &= a;
      hi |= a;
    }
    k.bounded = fam.count(lo) && fam.count(hi);
  }
  return k;
}

bool is_cco(int n, const std::function<Bits(Bits)>& op) {
  const Bits top = full_mask(n);
  std::vector<Bits> c(std::size_t(top) + 1);
  for (Bits a = 0;; ++a) {
    c[a] = op(a);
    if (a == top) break;
  }
  for (Bits a = 0;; ++a) {
    if (!subset_of(a, c[a]) || c[c[a]] != c[a]) return false;
    for (Bits b = 0;; ++b) {
      if (subset_of(a, b) && subset_of(b, c[a]) && !subset_of(c[a], c[b]))
        return false;
      if (b == top) break;
    }
    if (a == top) break;
  }
  return true;
}

std::vector<Bits> order_ideals(const Poset& p) {
  const Bits top = full_mask(p.n);
  std::vector<Bits> down(p.n, 0);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (p.le(j, i)) down[i] |= Bits(1) << j;
  std::vector<Bits> ideals;
  for (Bits a = 0;; ++a) {
    bool ok = true;
    for (int i : bit_range(a))
      if (!subset_of(down[i], a)) {
        ok = false;
        break;
      }
    if (ok) ideals.push_back(a);
    if (a == top) break;
  }
  return ideals;
}

// Relevance reading used here: every member of the collection contains the
// target set (so that the derived map is inflationary), and the extension
// condition is conditional: any superset collection of ideals that possesses
// a greatest member other than the whole carrier must keep the intersection
// unchanged.
bool relevant(const Poset& p, const std::vector<Bits>& k, Bits b) {
  if (k.empty()) return false;
  std::vector<Bits> ideals = order_ideals(p);
  std::set<Bits> ideal_set(ideals.begin(), ideals.end());
  const Bits full = full_mask(p.n);
  Bits greatest = 0;
  bool have_greatest = false;
  Bits inter = full;
  for (Bits m : k) {
    if (!ideal_set.count(m)) return false;
    if (!subset_of(b, m)) return false;
    inter &= m;
  }
  for (Bits g : k) {
    bool top = true;
    for (Bits m : k)
      if (!subset_of(m, g)) {
        top = false;
        break;
      }
    if (top) {
      greatest = g;
      have_greatest = true;
      break;
    }
  }
  if (!have_greatest) return false;
  // Extensions with greatest member T != carrier exist iff some ideal T with
  // greatest <= T != carrier does; they can adjoin any ideal inside T, so the
  // intersection survives them all iff it lies inside every such ideal.
  for (Bits t : ideals) {
    if (t == full || !subset_of(greatest, t)) continue;
    if (!subset_of(inter, t)) return false;
    for (Bits i : ideals)
      if (subset_of(i, t) && !subset_of(inter, i)) return false;
  }
  return true;
}

Bits safe_map(const Poset& p, Bits z) {
  std::vector<Bits> ideals = order_ideals(p);
  const Bits full = full_mask(p.n);
  std::vector<Bits> containing;
  for (Bits a : ideals)
    if (subset_of(z, a)) containing.push_back(a);
  // Achievable relevant intersections: the whole carrier always heads a
  // relevant collection, and any set of ideals containing z may ride along.
  std::set<Bits> inters;
  inters.insert(full);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Bits> cur(inters.begin(), inters.end());
    for (Bits a : cur)
      for (Bits b : containing)
        if (inters.insert(a & b).second) grew = true;
  }
  // Collections of pairwise-disjoint ideals are relevant too and contribute
  // an empty intersection, but only when the target is empty.
  if (z == 0) inters.insert(0);
  if (inters.size() == 1) return *inters.begin();
  Bits res = full;
  for (Bits a : containing) res &= a;
  return res;
}

}  // namespace prax
