// Claim registry, part 2: class-level operation laws, filters, the partial
// algebra of approximation pairs, dependence degrees, probabilistic
// dependence, and the coarse-space dependency semantics.
#include <algorithm>
#include <map>
#include <set>
#include <random>
#include <sstream>

#include "claims_detail.hpp"
#include "prax/enumerate.hpp"
#include "prax/io.hpp"

namespace prax {
namespace reg_detail {
namespace {

constexpr auto kMust = Expectation::must_pass;
constexpr auto kReg = Expectation::registered;
constexpr auto kAll = ClaimMode::universal;
constexpr auto kSome = ClaimMode::existential;

Bits rep_of(const PosetH& h, int c) { return h.classes[c].members.front(); }

void put_classes(const EvalCtx& ctx, const PosetH& h,
                 std::initializer_list<std::pair<const char*, int>> cls) {
  if (!ctx.witness) return;
  ctx.witness->sets.clear();
  for (const auto& [name, c] : cls)
    ctx.witness->sets.emplace_back(name, rep_of(h, c));
}

// ---- Class-level operation laws ----

void add_class_op_claims(Reg& g) {
  auto one = [&](const char* id, const char* ref,
                 std::function<bool(const EvalCtx&, const PosetH&, int)> f) {
    g.add(id, ref, kReg, kAll, Constraint::prax, 4, false,
          [f = std::move(f)](const EvalCtx& ctx) {
            PosetH h = requal_classes(ctx.rel);
            for (int a = 0; a < h.size(); ++a)
              if (!f(ctx, h, a)) {
                put_classes(ctx, h, {{"a", a}});
                return false;
              }
            return true;
          });
  };
  auto two = [&](const char* id, const char* ref,
                 std::function<bool(const EvalCtx&, const PosetH&, int, int)>
                     f) {
    g.add(id, ref, kReg, kAll, Constraint::prax, 4, false,
          [f = std::move(f)](const EvalCtx& ctx) {
            PosetH h = requal_classes(ctx.rel);
            for (int a = 0; a < h.size(); ++a)
              for (int b = 0; b < h.size(); ++b)
                if (!f(ctx, h, a, b)) {
                  put_classes(ctx, h, {{"a", a}, {"b", b}});
                  return false;
                }
            return true;
          });
  };

  one("ALG8-L1", "Ch.8 Thm, \"L1\"", [](const EvalCtx&, const PosetH& h,
                                        int a) {
    return h_lower(h, h_lower(h, a)) == h_lower(h, a);
  });
  two("ALG8-L2", "Ch.8 Thm, \"L2\"", [](const EvalCtx&, const PosetH& h,
                                        int a, int b) {
    return !class_leq(h, a, b) || class_leq(h, h_lower(h, a), h_lower(h, b));
  });
  one("ALG8-L3", "Ch.8 Thm, \"L3\"", [](const EvalCtx&, const PosetH& h,
                                        int a) {
    if (h_lower(h, a) != a) return true;
    return h.classes[a].members.size() == 1 &&
           h.classes[a].members[0] == h.classes[a].rep.lower;
  });
  one("ALG8-U1", "Ch.8 Thm, \"U1\"", [](const EvalCtx&, const PosetH& h,
                                        int a) {
    int u = h_upper(h, a), uu = h_upper(h, u);
    const auto& mu = h.classes[u].members;
    const auto& muu = h.classes[uu].members;
    bool meet = false;
    for (Bits x : mu)
      if (std::find(muu.begin(), muu.end(), x) != muu.end()) meet = true;
    return !meet || u == uu;
  });
  g.add("ALG8-U2", "Ch.8 Thm, \"U2\"", kReg, kSome, Constraint::prax, 4,
        false, [](const EvalCtx& ctx) {
          PosetH h = requal_classes(ctx.rel);
          for (int a = 0; a < h.size(); ++a) {
            int u = h_upper(h, a);
            if (h_upper(h, u) != u) {
              put_classes(ctx, h, {{"a", a}});
              return true;
            }
          }
          return false;
        });
  two("ALG8-U3", "Ch.8 Thm, \"U3\"", [](const EvalCtx&, const PosetH& h,
                                        int a, int b) {
    return !class_leq(h, a, b) || class_leq(h, h_upper(h, a), h_upper(h, b));
  });
  one("ALG8-U4", "Ch.8 Thm, \"U4\"", [](const EvalCtx&, const PosetH& h,
                                        int a) {
    if (h_upper(h, a) != a) return true;
    const RoughClass& c = h.classes[a];
    return c.members.size() == 1 && c.members[0] == c.rep.lower &&
           c.members[0] == c.rep.upper;
  });
  one("ALG8-U5", "Ch.8 Thm, \"U5\"", [](const EvalCtx&, const PosetH& h,
                                        int a) {
    return class_leq(h, h_upper(h, h_lower(h, a)), h_upper(h, a));
  });
  one("ALG8-U6", "Ch.8 Thm, \"U6\"", [](const EvalCtx&, const PosetH& h,
                                        int a) {
    return h_lower(h, h_upper(h, a)) == h_upper(h, a);
  });
  two("ALG8-CO1", "Ch.8 Thm, \"CO1\"", [](const EvalCtx&, const PosetH& h,
                                          int a, int b) {
    return h_odot(h, a, b) == h_odot(h, b, a);
  });
  one("ALG8-CO2", "Ch.8 Thm, \"CO2\"",
      [](const EvalCtx&, const PosetH& h, int a) {
        return class_leq(h, a, h_odot(h, a, a));
      });
  one("ALG8-CO3", "Ch.8 Thm, \"CO3\"",
      [](const EvalCtx&, const PosetH& h, int a) {
        return class_leq(h, a, h_odot(h, a, h.one));
      });
  one("ALG8-CO4", "Ch.8 Thm, \"CO4\"",
      [](const EvalCtx&, const PosetH& h, int a) {
        int aa = h_odot(h, a, a);
        return aa == h_odot(h, a, aa) && aa == h_odot(h, a, h.one);
      });
  two("ALG8-AO1", "Ch.8 Thm, \"AO1\"", [](const EvalCtx&, const PosetH& h,
                                          int a, int b) {
    return h_oplus(h, a, b) == h_oplus(h, b, a);
  });
  two("ALG8-AO2", "Ch.8 Thm, \"AO2\"", [](const EvalCtx&, const PosetH& h,
                                          int a, int b) {
    return class_leq(h, a, h_oplus(h, a, b));
  });
  one("ALG8-AO3", "Ch.8 Thm, \"AO3\"",
      [](const EvalCtx&, const PosetH& h, int a) {
        return class_leq(h, a, h_oplus(h, a, h.zero));
      });
  one("ALG8-AO4", "Ch.8 Thm, \"AO4\"",
      [](const EvalCtx&, const PosetH& h, int a) {
        int aa = h_oplus(h, a, a);
        return h_oplus(h, aa, a) == aa;
      });
  g.add("ALG8-AC", "Ch.8 Thm, \"AC\"", kReg, kSome, Constraint::prax, 4,
        false, [](const EvalCtx& ctx) {
          PosetH h = requal_classes(ctx.rel);
          for (int a = 0; a < h.size(); ++a)
            for (int b = 0; b < h.size(); ++b)
              if (h_oplus(h, a, h_odot(h, a, b)) != a) {
                put_classes(ctx, h, {{"a", a}, {"b", b}});
                return true;
              }
          return false;
        });
  one("ALG8-PLUS-I", "Ch.8 Thm, \"+I\"",
      [](const EvalCtx&, const PosetH& h, int a) {
        auto p = h_plus_opt(h, a, a);
        return p && *p == a;
      });
  two("ALG8-PLUS-C", "Ch.8 Thm, \"+C\"", [](const EvalCtx&, const PosetH& h,
                                            int a, int b) {
    return h_plus_opt(h, a, b) == h_plus_opt(h, b, a);
  });
  one("ALG8-TIMES-I", "Ch.8 Thm, \"cI\"",
      [](const EvalCtx&, const PosetH& h, int a) {
        auto p = h_times_opt(h, a, a);
        return p && *p == a;
      });
  two("ALG8-TIMES-C", "Ch.8 Thm, \"cC\"", [](const EvalCtx&, const PosetH& h,
                                             int a, int b) {
    return h_times_opt(h, a, b) == h_times_opt(h, b, a);
  });
  g.add("ALG8-PLUS-ISO", "Ch.8 Thm, \"+Is\"", kReg, kAll, Constraint::prax,
        4, false, [](const EvalCtx& ctx) {
          PosetH h = requal_classes(ctx.rel);
          for (int a = 0; a < h.size(); ++a)
            for (int b = 0; b < h.size(); ++b) {
              if (!class_leq(h, a, b)) continue;
              for (int c = 0; c < h.size(); ++c) {
                auto p = h_plus_opt(h, a, c), q = h_plus_opt(h, b, c);
                if (p && q && !class_leq(h, *p, *q)) {
                  put_classes(ctx, h, {{"a", a}, {"b", b}, {"c", c}});
                  return false;
                }
              }
            }
          return true;
        });
  g.add("ALG8-TIMES-ISO", "Ch.8 Thm, \"cIs\"", kReg, kAll, Constraint::prax,
        4, false, [](const EvalCtx& ctx) {
          PosetH h = requal_classes(ctx.rel);
          for (int a = 0; a < h.size(); ++a)
            for (int b = 0; b < h.size(); ++b) {
              if (!class_leq(h, a, b)) continue;
              for (int c = 0; c < h.size(); ++c) {
                auto p = h_times_opt(h, a, c), q = h_times_opt(h, b, c);
                if (p && q && !class_leq(h, *p, *q)) {
                  put_classes(ctx, h, {{"a", a}, {"b", b}, {"c", c}});
                  return false;
                }
              }
            }
          return true;
        });
  two("ALG8-TIMES-IN", "Ch.8 Thm, \"cIn\"",
      [](const EvalCtx&, const PosetH& h, int a, int b) {
        if (!class_leq(h, a, b)) return true;
        auto p = h_times_opt(h, a, b);
        return !p || (class_leq(h, a, *p) && class_leq(h, *p, b));
      });
  two("ALG8-R1", "Ch.8 Thm, \"R1\"", [](const EvalCtx&, const PosetH& h,
                                        int a, int b) {
    auto p = h_plus_opt(h, a, b);
    return !p || class_leq(h, *p, h_oplus(h, a, b));
  });
  two("ALG8-MIX1", "Ch.8 Thm, \"Mix1\"", [](const EvalCtx&, const PosetH& h,
                                            int a, int b) {
    auto p = h_times_opt(h, a, b);
    return !p || class_leq(h, *p, h_oplus(h, *p, a));
  });
  g.add("ALG8-PLUS-VARIANT", "Ch.8 Rem., two readings of the + target pair",
        kReg, kSome, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          PosetH h = requal_classes(ctx.rel);
          for (int a = 0; a < h.size(); ++a)
            for (int b = 0; b < h.size(); ++b)
              if (h_plus_opt(h, a, b) != h_plus_variant_opt(h, a, b)) {
                put_classes(ctx, h, {{"a", a}, {"b", b}});
                return true;
              }
          return false;
        });
  two("ALG8-OTIMES", "Ch.8 Def., the otimes target pair",
      [](const EvalCtx&, const PosetH& h, int a, int b) {
        auto p = h_otimes_opt(h, a, b);
        if (!p) return true;
        RoughPair want{h.classes[a].rep.lower | h.classes[b].rep.lower,
                       h.classes[a].rep.upper | h.classes[b].rep.upper};
        return h.classes[*p].rep == want;
      });
  two("ALG8-DOT-SUP", "Ch.8 Def., glb reading of the dot operation",
      [](const EvalCtx&, const PosetH& h, int a, int b) {
        return h_glb(h, a, b).has_value();
      });
  two("ALG8-AST-INF", "Ch.8 Def., lub reading of the ast operation",
      [](const EvalCtx&, const PosetH& h, int a, int b) {
        return h_lub(h, a, b).has_value();
      });
}

// ---- Filters over the class poset ----

std::vector<int> mask_to_classes(unsigned m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

void add_filter_claims(Reg& g) {
  g.add("FLT-LATTICE", "Ch.8 Thm, \"bounded lattice\" of filters", kReg,
        kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          PosetH h = requal_classes(ctx.rel);
          if (h.size() > 8) return true;
          FilterLatticeReport rep = filter_lattice_report(h);
          return rep.bounded && rep.lattice;
        });
  g.add("FLT-ATOMISTIC", "Ch.8 Thm, \"atomistic\" filter lattice", kReg,
        kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          PosetH h = requal_classes(ctx.rel);
          if (h.size() > 8) return true;
          return filter_lattice_report(h).atomistic;
        });
  g.add("FLT-MAXIMAL", "Ch.8 Prop, maximal filters of each kind", kReg, kAll,
        Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          PosetH h = requal_classes(ctx.rel);
          if (h.size() > 8) return true;
          const unsigned lim = 1u << h.size();
          std::vector<FilterFlags> fl(lim);
          for (unsigned m = 0; m < lim; ++m)
            fl[m] = filter_classify(h, mask_to_classes(m));
          auto kind = [&](unsigned m, int k) {
            switch (k) {
              case 0: return fl[m].order_filter();
              case 1: return fl[m].filter();
              case 2: return fl[m].prime_filter();
              case 3: return fl[m].prime_order_filter();
              default: return fl[m].strong_order_filter();
            }
          };
          for (int k = 0; k < 5; ++k)
            for (unsigned m = 0; m < lim; ++m) {
              if (!kind(m, k)) continue;
              bool found = false;
              for (unsigned s = 0; s < lim && !found; ++s) {
                if (!kind(s, k) || (s & m) != m) continue;
                bool maximal = true;
                for (unsigned t = 0; t < lim; ++t)
                  if (t != s && (t & s) == s && kind(t, k)) maximal = false;
                found = maximal;
              }
              if (!found) return false;
            }
          return true;
        });
  g.add("FLT-SOF-LATTICE",
        "Ch.8 Thm, strong order filters form an algebraic lattice", kReg,
        kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          PosetH h = requal_classes(ctx.rel);
          if (h.size() > 8) return true;
          const unsigned lim = 1u << h.size();
          std::vector<unsigned> fam;
          for (unsigned m = 0; m < lim; ++m)
            if (filter_classify(h, mask_to_classes(m)).strong_order_filter())
              fam.push_back(m);
          for (unsigned f : fam)
            for (unsigned p : fam) {
              // glb: the union of all common lower bounds must itself be one
              unsigned glb = 0;
              for (unsigned q : fam)
                if ((q & f) == q && (q & p) == q) glb |= q;
              bool has_glb =
                  (glb & f) == glb && (glb & p) == glb &&
                  std::find(fam.begin(), fam.end(), glb) != fam.end();
              // lub: a common upper bound below every common upper bound
              bool has_lub = false;
              for (unsigned q : fam) {
                if ((q & f) != f || (q & p) != p) continue;
                bool least = true;
                for (unsigned t : fam)
                  if ((t & f) == f && (t & p) == p && (t & q) != q)
                    least = false;
                if (least) has_lub = true;
              }
              if (!has_glb || !has_lub) return false;
            }
          return true;
        });
}

// ---- The partial algebra of approximation pairs ----

struct PairAlg {
  ApproxTable t;
  Bits top;
  std::vector<RoughPair> ps;

  explicit PairAlg(const BinRel& r)
      : t(r), top(r.universe.all()), ps(pair_space(r)) {}

  // The raw value of the pragmatic meet, ignoring realization.
  RoughPair vpm(const RoughPair& a, const RoughPair& b) const {
    return {t.get(a.lower & b.lower, ApproxKind::l),
            t.get(a.upper & b.upper, ApproxKind::l)};
  }
};

void put_pair(const EvalCtx& ctx,
              std::initializer_list<std::pair<const char*, RoughPair>> ps) {
  if (!ctx.witness) return;
  ctx.witness->sets.clear();
  for (const auto& [name, p] : ps) {
    ctx.witness->sets.emplace_back(std::string(name) + ".l", p.lower);
    ctx.witness->sets.emplace_back(std::string(name) + ".u", p.upper);
  }
}

void add_pair_alg_claims(Reg& g) {
  auto alg = [&](const char* id, const char* ref, Expectation e, ClaimMode m,
                 int n_max,
                 std::function<bool(const EvalCtx&, const PairAlg&)> f) {
    g.add(id, ref, e, m, Constraint::prax, n_max, false,
          [f = std::move(f)](const EvalCtx& ctx) {
            PairAlg pa(ctx.rel);
            return f(ctx, pa);
          });
  };

  alg("ALG9-TOTAL-JOIN", "Ch.9 Thm item 1, join totality", kMust, kAll, 4,
      [](const EvalCtx& ctx, const PairAlg& pa) {
        for (const RoughPair& a : pa.ps)
          for (const RoughPair& b : pa.ps)
            if (!pair_realized(ctx.rel, pv_join(a, b))) {
              put_pair(ctx, {{"a", a}, {"b", b}});
              return false;
            }
        return true;
      });
  alg("ALG9-TOTAL-PMEET", "Ch.9 Thm item 1, pragmatic meet totality", kMust,
      kAll, 4, [](const EvalCtx& ctx, const PairAlg& pa) {
        for (const RoughPair& a : pa.ps)
          for (const RoughPair& b : pa.ps)
            if (!pv_pmeet(ctx.rel, a, b)) {
              put_pair(ctx, {{"a", a}, {"b", b}});
              return false;
            }
        return true;
      });
  alg("ALG9-JOIN-SL", "Ch.9 Thm item 2, join semilattice", kMust, kAll, 4,
      [](const EvalCtx& ctx, const PairAlg& pa) {
        for (const RoughPair& a : pa.ps) {
          if (!(pv_join(a, a) == a)) return false;
          for (const RoughPair& b : pa.ps) {
            if (!(pv_join(a, b) == pv_join(b, a))) return false;
            for (const RoughPair& c : pa.ps)
              if (!(pv_join(pv_join(a, b), c) == pv_join(a, pv_join(b, c)))) {
                put_pair(ctx, {{"a", a}, {"b", b}, {"c", c}});
                return false;
              }
          }
        }
        return true;
      });
  alg("ALG9-MEET-WEAK", "Ch.9 Thm item 3, weak meet laws", kMust, kAll, 4,
      [](const EvalCtx& ctx, const PairAlg& pa) {
        const BinRel& r = ctx.rel;
        for (const RoughPair& a : pa.ps) {
          auto aa = pv_meet(r, a, a);
          if (!aa || !(*aa == a)) return false;
          for (const RoughPair& b : pa.ps) {
            if (pv_meet(r, a, b) != pv_meet(r, b, a)) return false;
            for (const RoughPair& c : pa.ps) {
              auto ab = pv_meet(r, a, b), bc = pv_meet(r, b, c);
              std::optional<RoughPair> lhs, rhs;
              if (ab) lhs = pv_meet(r, *ab, c);
              if (bc) rhs = pv_meet(r, a, *bc);
              if (lhs && rhs && !(*lhs == *rhs)) {
                put_pair(ctx, {{"a", a}, {"b", b}, {"c", c}});
                return false;
              }
            }
          }
        }
        return true;
      });
  alg("ALG9-ABS", "Ch.9 Thm item 3, weak absorption", kMust, kAll, 4,
      [](const EvalCtx& ctx, const PairAlg& pa) {
        const BinRel& r = ctx.rel;
        for (const RoughPair& a : pa.ps)
          for (const RoughPair& b : pa.ps) {
            auto m = pv_meet(r, a, b);
            if (m && !(pv_join(a, *m) == a)) {
              put_pair(ctx, {{"a", a}, {"b", b}});
              return false;
            }
            auto m2 = pv_meet(r, a, pv_join(a, b));
            if (m2 && !(*m2 == a)) {
              put_pair(ctx, {{"a", a}, {"b", b}});
              return false;
            }
          }
        return true;
      });
  alg("ALG9-WDIST", "Ch.9 Thm item 3, weak distributivity", kMust, kAll, 4,
      [](const EvalCtx& ctx, const PairAlg& pa) {
        const BinRel& r = ctx.rel;
        for (const RoughPair& a : pa.ps)
          for (const RoughPair& b : pa.ps)
            for (const RoughPair& c : pa.ps) {
              auto ab = pv_meet(r, a, b), ac = pv_meet(r, a, c);
              auto bc = pv_meet(r, b, c);
              // meet over join: both sides defined implies equality
              if (ab && ac) {
                auto lhs = pv_meet(r, a, pv_join(b, c));
                if (lhs && !(*lhs == pv_join(*ab, *ac))) {
                  put_pair(ctx, {{"a", a}, {"b", b}, {"c", c}});
                  return false;
                }
              }
              // join over meet: both sides defined implies equality
              if (bc) {
                auto rhs = pv_meet(r, pv_join(a, b), pv_join(a, c));
                if (rhs && !(pv_join(a, *bc) == *rhs)) {
                  put_pair(ctx, {{"a", a}, {"b", b}, {"c", c}});
                  return false;
                }
              }
            }
        return true;
      });
  alg("ALG9-NEG", "Ch.9 Thm item 4, weak double negation", kMust, kAll, 4,
      [](const EvalCtx& ctx, const PairAlg& pa) {
        const BinRel& r = ctx.rel;
        for (const RoughPair& a : pa.ps) {
          auto na = pv_wcomp(r, a);
          if (!na) continue;
          auto nna = pv_wcomp(r, *na);
          if (!nna || !(*nna == a)) {
            put_pair(ctx, {{"a", a}});
            return false;
          }
        }
        return true;
      });
  alg("ALG9-DM-OMEGA", "Ch.9 Thm item 5, weak de Morgan law", kMust, kAll, 4,
      [](const EvalCtx& ctx, const PairAlg& pa) {
        const BinRel& r = ctx.rel;
        for (const RoughPair& a : pa.ps)
          for (const RoughPair& b : pa.ps) {
            auto nj = pv_wcomp(r, pv_join(a, b));
            auto na = pv_wcomp(r, a), nb = pv_wcomp(r, b);
            if (!nj || !na || !nb) continue;
            auto m = pv_meet(r, *na, *nb);
            if (m && !(*nj == *m)) {
              put_pair(ctx, {{"a", a}, {"b", b}});
              return false;
            }
          }
        return true;
      });
  alg("ALG9-DM-OMEGASTAR",
      "Ch.9 Thm item 5, directed de Morgan law", kReg, kAll, 4,
      [](const EvalCtx& ctx, const PairAlg& pa) {
        const BinRel& r = ctx.rel;
        for (const RoughPair& a : pa.ps)
          for (const RoughPair& b : pa.ps) {
            auto nj = pv_wcomp(r, pv_join(a, b));
            if (!nj) continue;
            auto na = pv_wcomp(r, a), nb = pv_wcomp(r, b);
            if (!na || !nb) {
              put_pair(ctx, {{"a", a}, {"b", b}});
              return false;
            }
            auto m = pv_meet(r, *na, *nb);
            if (!m || !(*nj == *m)) {
              put_pair(ctx, {{"a", a}, {"b", b}});
              return false;
            }
          }
        return true;
      });
  alg("ALG9-PMEET-LAT", "Ch.9 Thm item 6, pragmatic meet lattice laws",
      kMust, kAll, 4, [](const EvalCtx& ctx, const PairAlg& pa) {
        const RoughPair topp{pa.top, pa.top};
        for (const RoughPair& a : pa.ps) {
          if (!(pa.vpm(a, a) == a)) return false;
          if (!(pa.vpm(a, topp) == a)) return false;
          for (const RoughPair& b : pa.ps) {
            if (!(pa.vpm(a, b) == pa.vpm(b, a))) return false;
            if (!(pa.vpm(a, pv_join(a, b)) == a)) return false;
            if (!(pv_join(a, pa.vpm(a, b)) == a)) {
              put_pair(ctx, {{"a", a}, {"b", b}});
              return false;
            }
            for (const RoughPair& c : pa.ps)
              if (!(pa.vpm(pa.vpm(a, b), c) == pa.vpm(a, pa.vpm(b, c)))) {
                put_pair(ctx, {{"a", a}, {"b", b}, {"c", c}});
                return false;
              }
          }
        }
        return true;
      });
  alg("ALG9-BOUNDS", "Ch.9 Thm item 7, bound laws", kMust, kAll, 4,
      [](const EvalCtx& ctx, const PairAlg& pa) {
        const BinRel& r = ctx.rel;
        const RoughPair bot{0, 0}, topp{pa.top, pa.top};
        for (const RoughPair& a : pa.ps) {
          auto mb = pv_meet(r, a, bot);
          auto mt = pv_meet(r, a, topp);
          bool ok = pa.vpm(a, bot) == bot && mb && *mb == bot &&
                    pv_join(a, bot) == a && pa.vpm(a, topp) == a && mt &&
                    *mt == a && pv_join(a, topp) == topp;
          if (!ok) {
            put_pair(ctx, {{"a", a}});
            return false;
          }
        }
        return true;
      });
  alg("ALG9-ITEM8", "Ch.9 Thm item 8, de Morgan transfer to pragmatic meet",
      kMust, kAll, 4, [](const EvalCtx& ctx, const PairAlg& pa) {
        const BinRel& r = ctx.rel;
        for (const RoughPair& a : pa.ps)
          for (const RoughPair& b : pa.ps) {
            auto na = pv_wcomp(r, a), nb = pv_wcomp(r, b);
            if (!na || !nb) continue;
            auto m = pv_meet(r, a, b);
            if (!m) continue;
            auto nm = pv_wcomp(r, *m);
            if (!nm || !(*nm == pv_join(*na, *nb))) continue;
            auto pm = pv_pmeet(r, a, b);
            if (!pm) continue;
            auto npm = pv_wcomp(r, *pm);
            if (!npm || !(*npm == pv_join(*na, *nb))) {
              put_pair(ctx, {{"a", a}, {"b", b}});
              return false;
            }
          }
        return true;
      });
  alg("ALG9-DIST-INC",
      "Ch.9 Thm item 9, join over pragmatic meet inclusion", kMust, kAll, 4,
      [](const EvalCtx& ctx, const PairAlg& pa) {
        for (const RoughPair& a : pa.ps)
          for (const RoughPair& b : pa.ps)
            for (const RoughPair& c : pa.ps) {
              RoughPair lhs = pv_join(a, pa.vpm(b, c));
              RoughPair rhs = pa.vpm(pv_join(a, b), pv_join(a, c));
              if (!subset_of(lhs.lower, rhs.lower) ||
                  !subset_of(lhs.upper, rhs.upper)) {
                put_pair(ctx, {{"a", a}, {"b", b}, {"c", c}});
                return false;
              }
            }
        return true;
      });
  alg("ALG9-DIST-FAIL",
      "Ch.9 Thm item 9, distributivity fails in general", kMust, kSome, 5,
      [](const EvalCtx& ctx, const PairAlg& pa) {
        for (const RoughPair& a : pa.ps)
          for (const RoughPair& b : pa.ps)
            for (const RoughPair& c : pa.ps) {
              RoughPair lhs = pv_join(a, pa.vpm(b, c));
              RoughPair rhs = pa.vpm(pv_join(a, b), pv_join(a, c));
              if (!(lhs == rhs)) {
                put_pair(ctx, {{"a", a}, {"b", b}, {"c", c}});
                return true;
              }
            }
        return false;
      });
  alg("ALG9-WCOMP", "Ch.9 Prop, \"X^uu = X^u implies\" the complement",
      kMust, kAll, 4, [](const EvalCtx& ctx, const PairAlg& pa) {
        const BinRel& r = ctx.rel;
        for (const RoughPair& a : pa.ps) {
          if (pa.t.get(a.upper, ApproxKind::u) != a.upper) continue;
          if (!pv_wcomp(r, a)) {
            put_pair(ctx, {{"a", a}});
            return false;
          }
        }
        return true;
      });
  alg("ALG9-WCOMP-GRAN",
      "Ch.9 Prop proof, \"X^uc is a union of granules\"", kReg, kAll, 4,
      [](const EvalCtx& ctx, const PairAlg& pa) {
        for (const RoughPair& a : pa.ps) {
          if (pa.t.get(a.upper, ApproxKind::u) != a.upper) continue;
          Bits uc = pa.top & ~a.upper;
          if (pa.t.get(uc, ApproxKind::l) != uc) {
            put_pair(ctx, {{"a", a}});
            return false;
          }
        }
        return true;
      });
  alg("ALG9-WCOMP-CONV",
      "Ch.9 Prop, complement without upper idempotence", kReg, kSome, 4,
      [](const EvalCtx& ctx, const PairAlg& pa) {
        const BinRel& r = ctx.rel;
        for (const RoughPair& a : pa.ps)
          if (pv_wcomp(r, a) &&
              pa.t.get(a.upper, ApproxKind::u) != a.upper) {
            put_pair(ctx, {{"a", a}});
            return true;
          }
        return false;
      });
}

// ---- Granule evolution into the coarse space ----

void add_tau_claims(Reg& g) {
  g.add("ALG9-TAU-BOT-TOP", "Ch.9 Prop, \"tau(0) = 0 and tau(1) = 1\"",
        kMust, kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          BinRel w = weak_transitive_closure(ctx.rel);
          PhiTau pt(ctx.rel, w);
          const Bits top = ctx.rel.universe.all();
          return pt.tau_pair({0, 0}) == RoughPair{0, 0} &&
                 pt.tau_pair({top, top}) == RoughPair{top, top};
        });
  g.add("ALG9-TAU-JOIN", "Ch.9 Prop, \"tau(a v b) = tau(a) v tau(b)\"", kReg,
        kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          BinRel w = weak_transitive_closure(ctx.rel);
          PhiTau pt(ctx.rel, w);
          std::vector<RoughPair> ps = pair_space(ctx.rel);
          for (const RoughPair& a : ps)
            for (const RoughPair& b : ps)
              if (!(pt.tau_pair(pv_join(a, b)) ==
                    pv_join(pt.tau_pair(a), pt.tau_pair(b)))) {
                put_pair(ctx, {{"a", a}, {"b", b}});
                return false;
              }
          return true;
        });
  g.add("ALG9-TAU-MEET", "Ch.9 Prop, weak meet preservation under tau", kReg,
        kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          BinRel w = weak_transitive_closure(ctx.rel);
          PhiTau pt(ctx.rel, w);
          std::vector<RoughPair> ps = pair_space(ctx.rel);
          for (const RoughPair& a : ps)
            for (const RoughPair& b : ps) {
              auto m = pv_meet(ctx.rel, a, b);
              if (!m) continue;
              auto mw = pv_meet(w, pt.tau_pair(a), pt.tau_pair(b));
              if (mw && !(pt.tau_pair(*m) == *mw)) {
                put_pair(ctx, {{"a", a}, {"b", b}});
                return false;
              }
            }
          return true;
        });
  g.add("ALG9-TAU-RANGE", "Ch.9 Prop, tau lands in the coarse pair space",
        kReg, kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          BinRel w = weak_transitive_closure(ctx.rel);
          PhiTau pt(ctx.rel, w);
          for (const RoughPair& a : pair_space(ctx.rel))
            if (!pair_realized(w, pt.tau_pair(a))) {
              put_pair(ctx, {{"a", a}});
              return false;
            }
          return true;
        });
}

// ---- The nine coarse/fine comparison scenarios ----

void add_scenario_claims(Reg& g) {
  auto scen = [&](const char* id, const char* ref, int which, bool sampled) {
    g.add(id, ref, kReg, kSome, Constraint::prax, 4, sampled,
          [which](const EvalCtx& ctx) {
            // W ranges over quasi-orders strictly containing R: every one of
            // them on small exhaustive instances, seeded random transitive
            // extensions on sampled ones.
            ApproxTable tr(ctx.rel);
            const int n = ctx.rel.n();
            const Bits top = ctx.rel.universe.all();
            const std::size_t m = std::size_t(top) + 1;
            std::vector<Bits> lv(m), uv(m);
            for (Bits a = 0;; ++a) {
              lv[a] = tr.get(a, ApproxKind::l);
              uv[a] = tr.get(a, ApproxKind::u);
              if (a == top) break;
            }
            auto par = [&](Bits x, Bits y) {
              return !subset_of(x, y) && !subset_of(y, x);
            };
            auto try_w = [&](const BinRel& w) {
              if (w == ctx.rel || !rel_subset(ctx.rel, w)) return false;
              ApproxTable tw(w);
              std::vector<Bits> lwv(m), uwv(m);
              for (Bits a = 0;; ++a) {
                lwv[a] = tw.get(a, ApproxKind::l);
                uwv[a] = tw.get(a, ApproxKind::u);
                if (a == top) break;
              }
              for (Bits a = 0;; ++a) {
                for (Bits b = 0;; ++b) {
                  bool hit = false;
                  switch (which) {
                    case 1:
                      hit = proper_subset_of(a, b) && uv[a] == uv[b] &&
                            proper_subset_of(uwv[a], uwv[b]);
                      break;
                    case 2:
                      hit = proper_subset_of(a, b) && lv[a] == lv[b] &&
                            proper_subset_of(lwv[a], lwv[b]);
                      break;
                    case 3:
                      hit = proper_subset_of(a, b) && uwv[a] == uwv[b] &&
                            proper_subset_of(uv[a], uv[b]);
                      break;
                    case 4:
                      hit = proper_subset_of(a, b) && lwv[a] == lwv[b] &&
                            proper_subset_of(lv[a], lv[b]);
                      break;
                    case 5:
                      hit = par(a, b) && lv[a] == lv[b] && par(lwv[a], lwv[b]);
                      break;
                    case 6:
                      hit = par(a, b) && lwv[a] == lwv[b] && par(lv[a], lv[b]);
                      break;
                    case 7:
                      hit = par(a, b) && uv[a] == uv[b] && par(uwv[a], uwv[b]);
                      break;
                    case 8:
                      hit = par(a, b) && uwv[a] == uwv[b] && par(uv[a], uv[b]);
                      break;
                    case 9:
                      hit = proper_subset_of(a, b) && lv[a] == lv[b] &&
                            uv[a] == uv[b] && proper_subset_of(lwv[a], lwv[b]) &&
                            proper_subset_of(uwv[a], uwv[b]);
                      break;
                  }
                  if (hit) {
                    put(ctx, {{"A", a}, {"B", b}},
                        "W = " + relation_to_json(w));
                    return true;
                  }
                  if (b == top) break;
                }
                if (a == top) break;
              }
              return false;
            };
            if (ctx.exhaustive && n <= 5) {
              for (std::uint64_t wm :
                   enumerate_masks(n, Constraint::quasi_order))
                if (try_w(relation_from_mask(n, wm))) return true;
            } else {
              std::mt19937_64 rng(ctx.rng_seed);
              for (int i = 0; i < ctx.tuple_samples; ++i) {
                BinRel w = ctx.rel;
                int extra = 1 + int(rng() % 4);
                for (int e = 0; e < extra; ++e)
                  w.add(int(rng() % std::uint64_t(n)),
                        int(rng() % std::uint64_t(n)));
                if (try_w(weak_transitive_closure(w))) return true;
              }
            }
            return false;
          });
  };
  scen("ALG9-SCEN-1", "Ch.9 list, coarser upper separates equal uppers", 1,
       false);
  scen("ALG9-SCEN-2", "Ch.9 list, coarser lower separates equal lowers", 2,
       false);
  scen("ALG9-SCEN-3", "Ch.9 list, finer upper separates equal coarse uppers",
       3, false);
  scen("ALG9-SCEN-4", "Ch.9 list, finer lower separates equal coarse lowers",
       4, false);
  scen("ALG9-SCEN-5", "Ch.9 list, incomparable coarse lowers", 5, false);
  scen("ALG9-SCEN-6", "Ch.9 list, incomparable fine lowers", 6, false);
  scen("ALG9-SCEN-7", "Ch.9 list, incomparable coarse uppers", 7, true);
  scen("ALG9-SCEN-8", "Ch.9 list, incomparable fine uppers", 8, false);
  scen("ALG9-SCEN-9", "Ch.9 list, both coarse approximations separate", 9,
       false);

  // Explains the unsatisfiable lower-approximation scenarios: equal lower
  // approximations stay equal under every coarser quasi-order, because each
  // coarse granule is a union of fine granules and lower approximations are
  // contractive.
  g.add("ALG9-SCEN-LRIG", "Ch.9 list, lower scenarios blocked", kMust, kAll,
        Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          ApproxTable tr(ctx.rel);
          const int n = ctx.rel.n();
          const Bits top = ctx.rel.universe.all();
          const std::size_t m = std::size_t(top) + 1;
          std::vector<Bits> lv(m);
          for (Bits a = 0;; ++a) {
            lv[a] = tr.get(a, ApproxKind::l);
            if (a == top) break;
          }
          for (std::uint64_t wm : enumerate_masks(n, Constraint::quasi_order)) {
            BinRel w = relation_from_mask(n, wm);
            if (!rel_subset(ctx.rel, w)) continue;
            ApproxTable tw(w);
            for (Bits a = 0; a < top; ++a) {
              for (Bits b = Bits(a + 1); b <= top; ++b) {
                if (lv[a] == lv[b] && tw.get(a, ApproxKind::l) !=
                                          tw.get(b, ApproxKind::l)) {
                  put(ctx, {{"A", a}, {"B", b}},
                      "W = " + relation_to_json(w));
                  return false;
                }
              }
            }
          }
          return true;
        });
}

// ---- Dependence degrees ----

struct DepCtx {
  std::vector<Bits> gran, nu;
  Ap ap;

  DepCtx(const BinRel& r, NuKind k)
      : gran(granulation_of(r)), nu(nu_family(r, k)), ap(r) {}
  Bits beta(Bits x, Bits y) const { return beta_inf(gran, nu, x, y); }
};

void add_dependence_claims(Reg& g) {
  auto dep = [&](const char* id, const char* ref, Expectation e, ClaimMode m,
                 Constraint c, NuKind k,
                 std::function<bool(const EvalCtx&, const DepCtx&)> f) {
    g.add(id, ref, e, m, c, 4, false,
          [k, f = std::move(f)](const EvalCtx& ctx) {
            DepCtx d(ctx.rel, k);
            return f(ctx, d);
          });
  };
  auto cls = [&](const char* id, const char* ref,
                 std::function<bool(const EvalCtx&, const DepCtx&)> f) {
    dep(id, ref, kReg, kAll, Constraint::equivalence, NuKind::delta_l,
        std::move(f));
  };
  auto vag = [&](const char* id, const char* ref, Expectation e,
                 std::function<bool(const EvalCtx&, const DepCtx&)> f) {
    dep(id, ref, e, kAll, Constraint::all_reflexive, NuKind::delta_l,
        std::move(f));
  };
  auto du = [&](const char* id, const char* ref,
                std::function<bool(const EvalCtx&, const DepCtx&)> f) {
    dep(id, ref, kReg, kAll, Constraint::prax, NuKind::delta_u, std::move(f));
  };

  cls("DEP-CL-1", "Ch.12 Thm item 1, \"beta_i x y = x^l cap y^l\"",
      [](const EvalCtx& ctx, const DepCtx& d) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          Bits b = d.beta(x, y);
          if (b != (d.ap.l(x) & d.ap.l(y))) return false;
          auto s = beta_sup(d.gran, d.nu, x, y);
          return s && *s == b;
        });
      });
  cls("DEP-CL-2", "Ch.12 Thm item 2, \"beta x x = x^l\"",
      [](const EvalCtx& ctx, const DepCtx& d) {
        return all_subsets(ctx,
                           [&](Bits x) { return d.beta(x, x) == d.ap.l(x); });
      });
  cls("DEP-CL-3", "Ch.12 Thm item 3, symmetry",
      [](const EvalCtx& ctx, const DepCtx& d) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          return d.beta(x, y) == d.beta(y, x);
        });
      });
  cls("DEP-CL-4", "Ch.12 Thm item 4, \"beta (beta x y) x = beta x y\"",
      [](const EvalCtx& ctx, const DepCtx& d) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          Bits b = d.beta(x, y);
          return d.beta(b, x) == b;
        });
      });
  cls("DEP-CL-5", "Ch.12 Thm item 5, monotony in the aggregate",
      [](const EvalCtx& ctx, const DepCtx& d) {
        return all_triples(ctx, [&](Bits x, Bits y, Bits z) {
          return subset_of(d.beta(x, y), d.beta(x, y | z));
        });
      });
  cls("DEP-CL-6", "Ch.12 Thm item 6, \"y^l subseteq z implies\"",
      [](const EvalCtx& ctx, const DepCtx& d) {
        return all_triples(ctx, [&](Bits x, Bits y, Bits z) {
          return !subset_of(d.ap.l(y), z) ||
                 subset_of(d.beta(x, y), d.beta(x, z));
        });
      });
  cls("DEP-CL-7", "Ch.12 Thm item 7, lower-approximation invariance",
      [](const EvalCtx& ctx, const DepCtx& d) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          Bits b = d.beta(x, y);
          return b == d.beta(d.ap.l(x), d.ap.l(y)) &&
                 b == d.beta(x, d.ap.l(y));
        });
      });
  cls("DEP-CL-8", "Ch.12 Thm item 8, bounds",
      [](const EvalCtx& ctx, const DepCtx& d) {
        return all_subsets(ctx, [&](Bits x) {
          return d.beta(0, x) == 0 && d.beta(x, d.ap.top) == d.ap.l(x);
        });
      });
  cls("DEP-CL-9", "Ch.12 Thm item 9, \"x subseteq y implies\"",
      [](const EvalCtx& ctx, const DepCtx& d) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          return !subset_of(x, y) || d.beta(x, y) == d.ap.l(x);
        });
      });

  vag("DEP-VAG-1", "Ch.12 Thm (vague) item 1, intersection form",
      Expectation::expected_fail, [](const EvalCtx& ctx, const DepCtx& d) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          return d.beta(x, y) == (d.ap.l(x) & d.ap.l(y));
        });
      });
  vag("DEP-VAG-2", "Ch.12 Thm (vague) item 2, \"beta x x = x^l\" + symmetry",
      kReg, [](const EvalCtx& ctx, const DepCtx& d) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          return d.beta(x, x) == d.ap.l(x) && d.beta(x, y) == d.beta(y, x);
        });
      });
  vag("DEP-VAG-3", "Ch.12 Thm (vague) item 3, disjointness gives zero", kReg,
      [](const EvalCtx& ctx, const DepCtx& d) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          return (x & y) != 0 || d.beta(x, y) == 0;
        });
      });
  dep("DEP-VAG-3C", "Ch.12 Thm (vague) item 3, converse failure", kReg,
      kSome, Constraint::all_reflexive, NuKind::delta_l,
      [](const EvalCtx& ctx, const DepCtx& d) {
        for (Bits x = 0;; ++x) {
          for (Bits y = 0;; ++y) {
            if ((x & y) != 0 && d.beta(x, y) == 0) {
              put(ctx, {{"x", x}, {"y", y}});
              return true;
            }
            if (y == d.ap.top) break;
          }
          if (x == d.ap.top) break;
        }
        return false;
      });
  vag("DEP-VAG-4", "Ch.12 Thm (vague) item 4, idempotent return", kReg,
      [](const EvalCtx& ctx, const DepCtx& d) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          Bits b = d.beta(x, y);
          return d.beta(b, x) == b;
        });
      });
  vag("DEP-VAG-5", "Ch.12 Thm (vague) item 5, monotony in the aggregate",
      kReg, [](const EvalCtx& ctx, const DepCtx& d) {
        return all_triples(ctx, [&](Bits x, Bits y, Bits z) {
          return subset_of(d.beta(x, y), d.beta(x, y | z));
        });
      });
  vag("DEP-VAG-6", "Ch.12 Thm (vague) item 6, \"y^l subseteq z implies\"",
      kReg, [](const EvalCtx& ctx, const DepCtx& d) {
        return all_triples(ctx, [&](Bits x, Bits y, Bits z) {
          return !subset_of(d.ap.l(y), z) ||
                 subset_of(d.beta(x, y), d.beta(x, z));
        });
      });
  vag("DEP-VAG-7", "Ch.12 Thm (vague) item 7, lower invariance", kReg,
      [](const EvalCtx& ctx, const DepCtx& d) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          Bits b = d.beta(x, y);
          return b == d.beta(d.ap.l(x), d.ap.l(y)) &&
                 b == d.beta(x, d.ap.l(y));
        });
      });
  vag("DEP-VAG-8", "Ch.12 Thm (vague) item 8, bounds", kReg,
      [](const EvalCtx& ctx, const DepCtx& d) {
        return all_subsets(ctx, [&](Bits x) {
          return d.beta(0, x) == 0 && d.beta(x, d.ap.top) == d.ap.l(x);
        });
      });
  vag("DEP-VAG-9", "Ch.12 Thm (vague) item 9, \"x subseteq y implies\"",
      kReg, [](const EvalCtx& ctx, const DepCtx& d) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          return !subset_of(x, y) || d.beta(x, y) == d.ap.l(x);
        });
      });

  du("DEP-U-1", "Ch.12 Thm (delta_u) item 1, below the delta_l degree",
     [](const EvalCtx& ctx, const DepCtx& d) {
       std::vector<Bits> nul = nu_family(ctx.rel, NuKind::delta_l);
       return all_pairs(ctx, [&](Bits x, Bits y) {
         return subset_of(d.beta(x, y), beta_inf(d.gran, nul, x, y));
       });
     });
  du("DEP-U-2", "Ch.12 Thm (delta_u) item 2, diagonal and symmetry",
     [](const EvalCtx& ctx, const DepCtx& d) {
       return all_pairs(ctx, [&](Bits x, Bits y) {
         return subset_of(d.beta(x, x), d.ap.l(x)) &&
                d.beta(x, y) == d.beta(y, x);
       });
     });
  du("DEP-U-3", "Ch.12 Thm (delta_u) item 3, disjointness gives zero",
     [](const EvalCtx& ctx, const DepCtx& d) {
       return all_pairs(ctx, [&](Bits x, Bits y) {
         return (x & y) != 0 || d.beta(x, y) == 0;
       });
     });
  du("DEP-U-4", "Ch.12 Thm (delta_u) item 4, idempotent return",
     [](const EvalCtx& ctx, const DepCtx& d) {
       return all_pairs(ctx, [&](Bits x, Bits y) {
         Bits b = d.beta(x, y);
         return d.beta(b, x) == b;
       });
     });
  du("DEP-U-5", "Ch.12 Thm (delta_u) item 5, monotony in the aggregate",
     [](const EvalCtx& ctx, const DepCtx& d) {
       return all_triples(ctx, [&](Bits x, Bits y, Bits z) {
         return subset_of(d.beta(x, y), d.beta(x, y | z));
       });
     });
  du("DEP-U-6", "Ch.12 Thm (delta_u) item 6, \"y^l subseteq z implies\"",
     [](const EvalCtx& ctx, const DepCtx& d) {
       return all_triples(ctx, [&](Bits x, Bits y, Bits z) {
         return !subset_of(d.ap.l(y), z) ||
                subset_of(d.beta(x, y), d.beta(x, z));
       });
     });
  du("DEP-U-7", "Ch.12 Thm (delta_u) item 7, approximation invariance",
     [](const EvalCtx& ctx, const DepCtx& d) {
       return all_pairs(ctx, [&](Bits x, Bits y) {
         return d.beta(x, y) == d.beta(d.ap.l(x), d.ap.l(y)) &&
                subset_of(d.beta(x, d.ap.l(y)),
                          d.beta(d.ap.u(x), d.ap.u(y)));
       });
     });
  du("DEP-U-8", "Ch.12 Thm (delta_u) item 8, bounds",
     [](const EvalCtx& ctx, const DepCtx& d) {
       return all_subsets(ctx, [&](Bits x) {
         return d.beta(0, x) == 0 &&
                subset_of(d.beta(x, d.ap.top), d.ap.l(x));
       });
     });
  du("DEP-U-9", "Ch.12 Thm (delta_u) item 9, monotone second argument",
     [](const EvalCtx& ctx, const DepCtx& d) {
       return all_triples(ctx, [&](Bits z, Bits x, Bits y) {
         return !subset_of(x, y) || subset_of(d.beta(z, x), d.beta(z, y));
       });
     });
  du("DEP-U-10", "Ch.12 Thm (delta_u) item 10, degrees are definite",
     [](const EvalCtx& ctx, const DepCtx& d) {
       return all_pairs(ctx, [&](Bits x, Bits y) {
         Bits b = d.beta(x, y);
         return d.ap.l(b) == b;
       });
     });

  // PN-dependence; the fast form of the predicate over a shared table.
  auto pn = [](const Ap& ap) {
    return [&ap](Bits x, Bits y) {
      return (ap.l(x) & ap.u(y)) != 0 && (ap.l(y) & ap.u(x)) != 0;
    };
  };
  g.add("DEP-PN-1", "Ch.12 Thm (PN) item 1, \"varsigma x x\"", kReg, kAll,
        Constraint::all_reflexive, 4, false, [pn](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          auto s = pn(ap);
          return all_subsets(ctx, [&](Bits x) { return s(x, x); });
        });
  g.add("DEP-PN-2", "Ch.12 Thm (PN) item 2, symmetry", kReg, kAll,
        Constraint::all_reflexive, 4, false, [pn](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          auto s = pn(ap);
          return all_pairs(ctx,
                           [&](Bits x, Bits y) { return s(x, y) == s(y, x); });
        });
  g.add("DEP-PN-3", "Ch.12 Thm (PN) item 3, non-transitivity", kReg, kSome,
        Constraint::all_reflexive, 4, false, [pn](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          auto s = pn(ap);
          for (Bits x = 0;; ++x) {
            for (Bits y = 0;; ++y) {
              for (Bits z = 0;; ++z) {
                if (s(x, y) && s(z, y) && !s(x, z)) {
                  put(ctx, {{"x", x}, {"y", y}, {"z", z}});
                  return true;
                }
                if (z == ap.top) break;
              }
              if (y == ap.top) break;
            }
            if (x == ap.top) break;
          }
          return false;
        });
  g.add("DEP-PN-4A",
        "Ch.12 Thm (PN) item 4, \"varsigma x y not-to varsigma x^u y^u\"",
        kReg, kSome, Constraint::all_reflexive, 4, false,
        [pn](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          auto s = pn(ap);
          for (Bits x = 0;; ++x) {
            for (Bits y = 0;; ++y) {
              if (s(x, y) && !s(ap.u(x), ap.u(y))) {
                put(ctx, {{"x", x}, {"y", y}});
                return true;
              }
              if (y == ap.top) break;
            }
            if (x == ap.top) break;
          }
          return false;
        });
  g.add("DEP-PN-4B",
        "Ch.12 Thm (PN) item 4, \"varsigma x^u y^u not-to varsigma x y\"",
        kReg, kSome, Constraint::all_reflexive, 4, false,
        [pn](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          auto s = pn(ap);
          for (Bits x = 0;; ++x) {
            for (Bits y = 0;; ++y) {
              if (s(ap.u(x), ap.u(y)) && !s(x, y)) {
                put(ctx, {{"x", x}, {"y", y}});
                return true;
              }
              if (y == ap.top) break;
            }
            if (x == ap.top) break;
          }
          return false;
        });
  g.add("DEP-PN-5", "Ch.12 Thm (PN) item 5, disjointness blocks dependence",
        kReg, kAll, Constraint::all_reflexive, 4, false,
        [pn](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          auto s = pn(ap);
          return all_pairs(ctx, [&](Bits x, Bits y) {
            return (x & y) != 0 || !s(x, y);
          });
        });
  g.add("DEP-PN-6", "Ch.12 Thm (PN) item 6, inclusion forces dependence",
        kReg, kAll, Constraint::all_reflexive, 4, false,
        [pn](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          auto s = pn(ap);
          return all_pairs(ctx, [&](Bits x, Bits y) {
            return !subset_of(x, y) || s(x, y);
          });
        });
  g.add("DEP-BETA-PN", "Ch.12 Prop, \"beta x y != 0 then varsigma x y\"",
        kMust, kAll, Constraint::all_reflexive, 4, false,
        [pn](const EvalCtx& ctx) {
          DepCtx d(ctx.rel, NuKind::delta_l);
          auto s = pn(d.ap);
          return all_pairs(ctx, [&](Bits x, Bits y) {
            return d.beta(x, y) == 0 || s(x, y);
          });
        });
  g.add("DEP-BETA-PN-CONV",
        "Ch.12 Prop, \"the converse need not hold\"", kReg, kSome,
        Constraint::prax, 4, false, [pn](const EvalCtx& ctx) {
          DepCtx d(ctx.rel, NuKind::delta_l);
          auto s = pn(d.ap);
          for (Bits x = 0;; ++x) {
            for (Bits y = 0;; ++y) {
              if (s(x, y) && d.beta(x, y) == 0) {
                put(ctx, {{"x", x}, {"y", y}});
                return true;
              }
              if (y == d.ap.top) break;
            }
            if (x == d.ap.top) break;
          }
          return false;
        });
  g.add("DEP-BETA-PN-CL",
        "Ch.12 Prop, \"In classical RST, the converse holds\"", kReg, kAll,
        Constraint::equivalence, 4, false, [pn](const EvalCtx& ctx) {
          DepCtx d(ctx.rel, NuKind::delta_l);
          auto s = pn(d.ap);
          return all_pairs(ctx, [&](Bits x, Bits y) {
            return !s(x, y) || d.beta(x, y) != 0;
          });
        });
  g.add("DEP-LB-CL", "Ch.12 Prop, \"B_z = P_z\" in the classical case", kReg,
        kAll, Constraint::equivalence, 4, false, [](const EvalCtx& ctx) {
          return all_pairs(ctx, [&](Bits x, Bits y) {
            LocalBases lb = local_bases(ctx.rel, x, y);
            std::set<Bits> p(lb.p_z.begin(), lb.p_z.end());
            std::set<Bits> b(lb.b_z.begin(), lb.b_z.end());
            return p == b;
          });
        });
}

// ---- Probabilistic dependence ----

const std::vector<FiniteProbSpace>& prob_spaces() {
  static const std::vector<FiniteProbSpace> spaces = [] {
    std::vector<FiniteProbSpace> out;
    for (int n = 1; n <= 4; ++n)
      out.push_back(FiniteProbSpace::uniform(Universe::numbered(n)));
    const long long kDen = 16;
    for (int n = 1; n <= 4; ++n) {
      std::vector<long long> part(n, 0);
      std::function<void(int, long long)> rec = [&](int i, long long left) {
        if (i == n - 1) {
          part[i] = left;
          std::vector<Rational> w;
          for (long long k : part) w.emplace_back(k, kDen);
          out.emplace_back(Universe::numbered(n), std::move(w));
          return;
        }
        for (long long k = 0; k <= left; ++k) {
          part[i] = k;
          rec(i + 1, left - k);
        }
      };
      rec(0, kDen);
    }
    return out;
  }();
  return spaces;
}

std::string prb_note(const FiniteProbSpace& sp, Bits x, Bits y, Bits z,
                     bool has_z) {
  std::ostringstream os;
  os << "weights=[";
  for (std::size_t i = 0; i < sp.weight.size(); ++i) {
    if (i) os << ",";
    os << sp.weight[i].numerator() << "/" << sp.weight[i].denominator();
  }
  os << "] x=" << subset_to_string(sp.universe, x)
     << " y=" << subset_to_string(sp.universe, y);
  if (has_z) os << " z=" << subset_to_string(sp.universe, z);
  return os.str();
}

void add_prob_claims(Reg& g) {
  auto over_pairs = [](const EvalCtx& ctx,
                       const std::function<bool(const FiniteProbSpace&, Bits,
                                                Bits)>& f) {
    for (const FiniteProbSpace& sp : prob_spaces()) {
      const Bits top = sp.universe.all();
      for (Bits x = 0;; ++x) {
        for (Bits y = 0;; ++y) {
          if (!f(sp, x, y)) {
            put(ctx, {}, prb_note(sp, x, y, 0, false));
            return false;
          }
          if (y == top) break;
        }
        if (x == top) break;
      }
    }
    return true;
  };
  auto over_triples = [](const EvalCtx& ctx,
                         const std::function<bool(const FiniteProbSpace&,
                                                  Bits, Bits, Bits)>& f) {
    for (const FiniteProbSpace& sp : prob_spaces()) {
      const Bits top = sp.universe.all();
      for (Bits x = 0;; ++x) {
        for (Bits y = 0;; ++y) {
          for (Bits z = 0;; ++z) {
            if (!f(sp, x, y, z)) {
              put(ctx, {}, prb_note(sp, x, y, z, true));
              return false;
            }
            if (z == top) break;
          }
          if (y == top) break;
        }
        if (x == top) break;
      }
    }
    return true;
  };
  auto prb = [&](const char* id, const char* ref, Expectation e,
                 std::function<bool(const EvalCtx&)> f) {
    g.add(id, ref, e, kAll, Constraint::all_reflexive, 1, false,
          std::move(f));
  };

  prb("PRB-01", "Ch.13 list, \"pi x y^c iff sigma y x\"", kMust,
      [over_pairs](const EvalCtx& ctx) {
        return over_pairs(ctx, [](const FiniteProbSpace& sp, Bits x, Bits y) {
          return sp.pi(x, sp.universe.all() & ~y) == sp.sigma(y, x);
        });
      });
  prb("PRB-02", "Ch.13 list, \"pi x y iff pi y x\"", kMust,
      [over_pairs](const EvalCtx& ctx) {
        return over_pairs(ctx, [](const FiniteProbSpace& sp, Bits x, Bits y) {
          return sp.pi(x, y) == sp.pi(y, x);
        });
      });
  prb("PRB-03", "Ch.13 list, disjoint union law for pi", kMust,
      [over_triples](const EvalCtx& ctx) {
        return over_triples(
            ctx, [](const FiniteProbSpace& sp, Bits x, Bits y, Bits z) {
              return (x & y) != 0 || !sp.pi(x, z) || !sp.pi(y, z) ||
                     sp.pi(x | y, z);
            });
      });
  prb("PRB-04", "Ch.13 list, disjoint union law for sigma", kMust,
      [over_triples](const EvalCtx& ctx) {
        return over_triples(
            ctx, [](const FiniteProbSpace& sp, Bits x, Bits y, Bits z) {
              return (x & y) != 0 || !sp.sigma(x, z) || !sp.sigma(y, z) ||
                     sp.sigma(x | y, z);
            });
      });
  prb("PRB-05", "Ch.13 list, inclusion gives pi (positive measures)", kMust,
      [over_pairs](const EvalCtx& ctx) {
        return over_pairs(ctx, [](const FiniteProbSpace& sp, Bits x, Bits y) {
          if (!(x != 0 && subset_of(x, y))) return true;
          if (!(sp.p(x) > Rational(0)) || !(sp.p(y) < Rational(1)))
            return true;
          return sp.pi(x, y);
        });
      });
  prb("PRB-06", "Ch.13 list, disjointness gives sigma (positive measures)",
      kMust, [over_pairs](const EvalCtx& ctx) {
        return over_pairs(ctx, [](const FiniteProbSpace& sp, Bits x, Bits y) {
          if ((x & y) != 0) return true;
          if (!(sp.p(x) > Rational(0)) || !(sp.p(y) > Rational(0)))
            return true;
          return sp.sigma(x, y);
        });
      });
  prb("PRB-07", "Ch.13 Prop, \"del(x, x) in [0, 1/4]\"", kMust,
      [over_pairs](const EvalCtx& ctx) {
        return over_pairs(ctx, [](const FiniteProbSpace& sp, Bits x, Bits) {
          Rational d = sp.dep(x, x);
          return Rational(0) <= d && d <= Rational(1, 4);
        });
      });
  prb("PRB-08", "Ch.13 Prop, \"del(x, x^c) in [-1/4, 0]\"", kMust,
      [over_pairs](const EvalCtx& ctx) {
        return over_pairs(ctx, [](const FiniteProbSpace& sp, Bits x, Bits) {
          Rational d = sp.dep(x, sp.universe.all() & ~x);
          return Rational(-1, 4) <= d && d <= Rational(0);
        });
      });
  prb("PRB-09", "Ch.13 list, inclusion gives pi (unguarded reading)", kReg,
      [over_pairs](const EvalCtx& ctx) {
        return over_pairs(ctx, [](const FiniteProbSpace& sp, Bits x, Bits y) {
          return !(x != 0 && subset_of(x, y)) || sp.pi(x, y);
        });
      });
  prb("PRB-WME", "Ch.13 list, union laws under measure-zero overlap", kReg,
      [over_triples](const EvalCtx& ctx) {
        return over_triples(
            ctx, [](const FiniteProbSpace& sp, Bits x, Bits y, Bits z) {
              if (!sp.wme(x, y)) return true;
              if (sp.pi(x, z) && sp.pi(y, z) && !sp.pi(x | y, z))
                return false;
              return !(sp.sigma(x, z) && sp.sigma(y, z)) ||
                     sp.sigma(x | y, z);
            });
      });
}

// ---- Dependency semantics over the coarse space ----

void add_semantics_claims(Reg& g) {
  g.add("SEM14-OPC", "Ch.14 Prop, the one-point completion of tau", kReg,
        kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          DepSemantics ds(ctx.rel);
          for (const RoughPair& a : ds.space_r()) {
            bool fixed = ds.phi.tau_pair(a) == a;
            if (pair_realized(ds.w, a) != fixed) {
              put_pair(ctx, {{"a", a}});
              return false;
            }
          }
          return true;
        });

  auto ups = [&](const char* id, const char* ref,
                 std::function<bool(const EvalCtx&, const DepSemantics&,
                                    const std::vector<std::pair<
                                        RoughPair, RoughPair>>&)>
                     f) {
    g.add(id, ref, kMust, kAll, Constraint::prax, 4, false,
          [f = std::move(f)](const EvalCtx& ctx) {
            DepSemantics ds(ctx.rel);
            std::vector<std::pair<RoughPair, RoughPair>> entries;
            for (const RoughPair& b : ds.space_r())
              entries.emplace_back(ds.phi.tau_pair(b), ds.varrho(b));
            return f(ctx, ds, entries);
          });
  };

  ups("SEM14-UPS-1", "Ch.14 Thm, \"alpha = tau(alpha) implies Ups\"",
      [](const EvalCtx& ctx, const DepSemantics& ds,
         const std::vector<std::pair<RoughPair, RoughPair>>&) {
        for (const RoughPair& a : ds.space_r()) {
          if (!(ds.phi.tau_pair(a) == a)) continue;
          if (!ds.upsilon(a, a)) {
            put_pair(ctx, {{"a", a}});
            return false;
          }
        }
        return true;
      });
  // The first property holds once the premise is strengthened to pairs that
  // actually live in both spaces, which is what the one-point completion
  // intends to capture.
  g.add("SEM14-UPS-1W", "Ch.14 Thm, \"alpha = tau(alpha) implies Ups\"",
        kReg, kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          DepSemantics ds(ctx.rel);
          for (const RoughPair& a : ds.space_r()) {
            if (!(ds.phi.tau_pair(a) == a) || !ds.in_space_w(a)) continue;
            if (!ds.upsilon(a, a)) {
              put_pair(ctx, {{"a", a}});
              return false;
            }
          }
          return true;
        });
  ups("SEM14-UPS-2", "Ch.14 Thm, the degree sits inside its source",
      [](const EvalCtx& ctx, const DepSemantics&,
         const std::vector<std::pair<RoughPair, RoughPair>>& e) {
        for (const auto& [ta, v] : e)
          if (!subset_of(v.lower, ta.lower) || !subset_of(v.upper, ta.upper)) {
            put_pair(ctx, {{"tau(a)", ta}, {"g", v}});
            return false;
          }
        return true;
      });
  ups("SEM14-UPS-3", "Ch.14 Thm, antisymmetry",
      [](const EvalCtx& ctx, const DepSemantics&,
         const std::vector<std::pair<RoughPair, RoughPair>>& e) {
        std::set<std::pair<RoughPair, RoughPair>> have(e.begin(), e.end());
        for (const auto& [a, v] : e)
          if (!(a == v) && have.count({v, a})) {
            put_pair(ctx, {{"a", a}, {"g", v}});
            return false;
          }
        return true;
      });
  ups("SEM14-UPS-4", "Ch.14 Thm, \"Ups 0 0 and Ups 1 1\"",
      [](const EvalCtx& ctx, const DepSemantics& ds,
         const std::vector<std::pair<RoughPair, RoughPair>>&) {
        const Bits top = ctx.rel.universe.all();
        return ds.upsilon({0, 0}, {0, 0}) &&
               ds.upsilon({top, top}, {top, top});
      });
  ups("SEM14-UPS-5", "Ch.14 Thm, closure under joins of sources",
      [](const EvalCtx& ctx, const DepSemantics& ds,
         const std::vector<std::pair<RoughPair, RoughPair>>& e) {
        for (const auto& [a1, v1] : e)
          for (const auto& [a2, v2] : e) {
            if (!(v1 == v2)) continue;
            if (!ds.upsilon(pv_join(a1, a2), v1)) {
              put_pair(ctx, {{"a", a1}, {"b", a2}, {"g", v1}});
              return false;
            }
          }
        return true;
      });

  auto fd_claim = [&](const char* id, const char* ref, Expectation e,
                      ClaimMode m,
                      std::function<bool(const EvalCtx&, const FallsDown&)>
                          f) {
    g.add(id, ref, e, m, Constraint::prax, 4, false,
          [f = std::move(f)](const EvalCtx& ctx) {
            FallsDown fd(ctx.rel);
            return f(ctx, fd);
          });
  };
  auto candidates = [](const BinRel& r) {
    std::vector<RoughPair> v;
    for (Bits m1 : definites(r, ApproxKind::lo))
      for (Bits m2 : images(r, ApproxKind::uo))
        if (subset_of(m1, m2)) v.push_back({m1, m2});
    return v;
  };

  fd_claim("SEM14-PI-1", "Ch.14 Thm, \"Pi alpha alpha\"", kMust, kAll,
           [](const EvalCtx& ctx, const FallsDown& fd) {
             for (const RoughPair& a : fd.space_o())
               if (!fd.pi(a, a)) {
                 put_pair(ctx, {{"a", a}});
                 return false;
               }
             return true;
           });
  fd_claim("SEM14-PI-2", "Ch.14 Thm, antisymmetry", kMust, kAll,
           [](const EvalCtx& ctx, const FallsDown& fd) {
             for (const RoughPair& a : fd.space_o())
               for (const RoughPair& v : fd.pi_class(a))
                 if (fd.pi(v, a) && !(a == v)) {
                   put_pair(ctx, {{"a", a}, {"v", v}});
                   return false;
                 }
             return true;
           });
  fd_claim("SEM14-PI-3", "Ch.14 Thm, the degree sits inside its source",
           kMust, kAll, [](const EvalCtx& ctx, const FallsDown& fd) {
             for (const RoughPair& a : fd.space_o())
               for (const RoughPair& v : fd.pi_class(a))
                 if (!subset_of(v.lower, a.lower) ||
                     !subset_of(v.upper, a.upper)) {
                   put_pair(ctx, {{"a", a}, {"v", v}});
                   return false;
                 }
             return true;
           });
  fd_claim("SEM14-PI-3C", "Ch.14 Thm, the converse of containment fails",
           kReg, kSome,
           [candidates](const EvalCtx& ctx, const FallsDown& fd) {
             std::vector<RoughPair> cand = candidates(ctx.rel);
             for (const RoughPair& a : fd.space_o())
               for (const RoughPair& v : cand)
                 if (subset_of(v.lower, a.lower) &&
                     subset_of(v.upper, a.upper) && !fd.pi(a, v)) {
                   put_pair(ctx, {{"a", a}, {"v", v}});
                   return true;
                 }
             return false;
           });
  fd_claim("SEM14-PI-4", "Ch.14 Thm, joint degrees do not vanish", kReg,
           kAll, [](const EvalCtx& ctx, const FallsDown& fd) {
             for (const RoughPair& a : fd.space_o()) {
               if (a == RoughPair{0, 0}) continue;
               std::vector<RoughPair> cls = fd.pi_class(a);
               for (const RoughPair& v : cls)
                 for (const RoughPair& m : cls)
                   if (fd.beta_plus(v, m) == RoughPair{0, 0}) {
                     put_pair(ctx, {{"a", a}, {"v", v}, {"m", m}});
                     return false;
                   }
             }
             return true;
           });
  fd_claim("SEM14-PI-5", "Ch.14 Thm, convexity of the degree class", kMust,
           kAll, [](const EvalCtx& ctx, const FallsDown& fd) {
             std::vector<RoughPair> sp = fd.space_o();
             for (const RoughPair& a : sp)
               for (const RoughPair& m : fd.pi_class(a))
                 for (const RoughPair& v : sp) {
                   bool between = subset_of(m.lower, v.lower) &&
                                  subset_of(m.upper, v.upper) &&
                                  subset_of(v.lower, a.lower) &&
                                  subset_of(v.upper, a.upper);
                   if (between && !fd.pi(a, v)) {
                     put_pair(ctx, {{"a", a}, {"m", m}, {"v", v}});
                     return false;
                   }
                 }
             return true;
           });
  // Same convexity statement with the intermediate value drawn from the
  // wider family of componentwise-definite pairs; this version fails.
  fd_claim("SEM14-PI-5B", "Ch.14 Thm, convexity over definite pairs", kReg,
           kAll, [candidates](const EvalCtx& ctx, const FallsDown& fd) {
             std::vector<RoughPair> cand = candidates(ctx.rel);
             for (const RoughPair& a : fd.space_o())
               for (const RoughPair& m : fd.pi_class(a))
                 for (const RoughPair& v : cand) {
                   bool between = subset_of(m.lower, v.lower) &&
                                  subset_of(m.upper, v.upper) &&
                                  subset_of(v.lower, a.lower) &&
                                  subset_of(v.upper, a.upper);
                   if (between && !fd.pi(a, v)) {
                     put_pair(ctx, {{"a", a}, {"m", m}, {"v", v}});
                     return false;
                   }
                 }
             return true;
           });
}

}  // namespace

void add_alg_dep_claims(Reg& g) {
  add_class_op_claims(g);
  add_filter_claims(g);
  add_pair_alg_claims(g);
  add_tau_claims(g);
  add_scenario_claims(g);
  add_dependence_claims(g);
  add_prob_claims(g);
  add_semantics_claims(g);
}

}  // namespace reg_detail
}  // namespace prax
