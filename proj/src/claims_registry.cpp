// Claim registry, part 1: relations, granules, approximations, rough
// objects, the definite-element lattice, and the choice-dependent operator
// law suite.
#include <algorithm>
#include <set>

#include "claims_detail.hpp"

namespace prax {
namespace reg_detail {
namespace {

constexpr auto kMust = Expectation::must_pass;
constexpr auto kReg = Expectation::registered;
constexpr auto kFail = Expectation::expected_fail;
constexpr auto kAll = ClaimMode::universal;
constexpr auto kSome = ClaimMode::existential;

// ---- Relations ----

void add_relation_claims(Reg& g) {
  g.add("REL-01", "Sec. Basics Prop, \"R in ptau(S) iff tau(R) in EQ(S)\"",
        kMust, kAll, Constraint::all_reflexive, 4, false,
        [](const EvalCtx& ctx) {
          RelationProfile p = classify(ctx.rel);
          if (p.transitive && !p.weakly_transitive) return false;
          if (p.weakly_transitive && !p.semi_transitive) return false;
          if (p.semi_transitive && !p.proto_tau) return false;
          bool tau_eq = classify(tau(ctx.rel)).equivalence;
          return p.proto_tau == tau_eq;
        });
  g.add("REL-02", "Ch.10, \"weak transitive closure of R\"", kMust, kAll,
        Constraint::all_reflexive, 4, false, [](const EvalCtx& ctx) {
          BinRel w = weak_transitive_closure(ctx.rel);
          if (!rel_subset(ctx.rel, w)) return false;
          if (!(weak_transitive_closure(w) == w)) return false;
          if (classify(ctx.rel).transitive && !(w == ctx.rel)) return false;
          return classify(w).transitive;
        });
  g.add("REL-03", "Ch.10 Thm, \"R^h = emptyset\"", kMust, kAll,
        Constraint::prax, 5, false, [](const EvalCtx& ctx) {
          return derived_relation(ctx.rel, DerivedKind::h).empty();
        });
  g.add("REL-04",
        "Ch.10 Thm, \"(R minus tau(R))^# subseteq R^# minus tau(R)\"", kMust,
        kAll, Constraint::prax, 5, false, [](const EvalCtx& ctx) {
          return rel_subset(derived_relation(ctx.rel, DerivedKind::dot_hash),
                            derived_relation(ctx.rel, DerivedKind::hash_dot));
        });
  g.add("REL-05",
        "Ch.10 Prop, \"((R minus tau(R))^# cup tau(R))^# = R^#\"", kMust,
        kAll, Constraint::prax, 5, false, [](const EvalCtx& ctx) {
          BinRel ou = derived_relation(ctx.rel, DerivedKind::ortho_union);
          return weak_transitive_closure(ou) ==
                 weak_transitive_closure(ctx.rel);
        });
  g.add("REL-06", "Ch.10 Prop, \"not (R. ab and R. ba)\"", kMust, kAll,
        Constraint::all_reflexive, 4, false, [](const EvalCtx& ctx) {
          BinRel d = derived_relation(ctx.rel, DerivedKind::dot);
          for (int a = 0; a < d.n(); ++a)
            for (int b = a + 1; b < d.n(); ++b)
              if (d.has(a, b) && d.has(b, a)) return false;
          return true;
        });
}

// ---- Granules ----

void add_granule_claims(Reg& g) {
  g.add("GRN-01", "Ch.2 Prop, \"[x]_o subseteq [x]\"", kMust, kAll,
        Constraint::all_reflexive, 4, false, [](const EvalCtx& ctx) {
          for (int x = 0; x < ctx.rel.n(); ++x)
            if (!subset_of(nbhd(ctx.rel, x, GranuleKind::sym),
                           nbhd(ctx.rel, x, GranuleKind::succ)))
              return false;
          return true;
        });
  g.add("GRN-02", "Ch.2, successor vs predecessor neighborhood duality",
        kMust, kAll, Constraint::all_reflexive, 4, false,
        [](const EvalCtx& ctx) {
          BinRel conv = converse(ctx.rel);
          for (int x = 0; x < ctx.rel.n(); ++x)
            if (nbhd(ctx.rel, x, GranuleKind::succ) !=
                nbhd(conv, x, GranuleKind::pred))
              return false;
          return true;
        });
  g.add("GRN-OTO", "Ch.10 Prop, \"[x]_ot^o = {x}\"", kFail, kAll,
        Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          for (int x = 0; x < ctx.rel.n(); ++x)
            if (nbhd(ctx.rel, x, GranuleKind::ot_o) != (Bits(1) << x)) {
              put(ctx, {{"[x]_ot^o", nbhd(ctx.rel, x, GranuleKind::ot_o)},
                        {"x", Bits(1) << x}});
              return false;
            }
          return true;
        });
  g.add("GRN-OTO-SUB", "Ch.10 Prop, \"[x]_ot^o = {x}\" (inclusion reading)",
        kReg, kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          for (int x = 0; x < ctx.rel.n(); ++x)
            if (!subset_of(nbhd(ctx.rel, x, GranuleKind::ot_o),
                           Bits(1) << x)) {
              put(ctx, {{"[x]_ot^o", nbhd(ctx.rel, x, GranuleKind::ot_o)},
                        {"x", Bits(1) << x}});
              return false;
            }
          return true;
        });
}

// ---- Approximations ----

void add_approx_claims(Reg& g) {
  g.add("APP-BI", "Ch.2 Thm, \"(Bi)\"", kMust, kAll, Constraint::prax, 4,
        true, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          return all_subsets(ctx, [&](Bits a) {
            Bits al = ap.l(a), au = ap.u(a);
            return subset_of(al, a) && subset_of(a, au) &&
                   ap.l(al) == al && subset_of(au, ap.u(au));
          });
        });
  g.add("APP-CUPCAP", "Ch.2 Thm, \"(l-Cup) ... (Dual)\"", kMust, kAll,
        Constraint::prax, 4, true, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          return all_pairs(ctx, [&](Bits a, Bits b) {
            return subset_of(ap.l(a) | ap.l(b), ap.l(a | b)) &&
                   subset_of(ap.l(a & b), ap.l(a) & ap.l(b)) &&
                   ap.u(a | b) == (ap.u(a) | ap.u(b)) &&
                   subset_of(ap.u(a & b), ap.u(a) & ap.u(b)) &&
                   subset_of(ap.c(ap.l(a)), ap.u(ap.c(a)));
          });
        });
  g.add("APP-LPLUS", "Ch.2 Thm, \"(A cap B)^l+ = A^l+ cap B^l+\"", kMust,
        kAll, Constraint::prax, 4, true, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          auto lp = [&](Bits a) { return ap.g(a, ApproxKind::lplus); };
          auto up = [&](Bits a) { return ap.g(a, ApproxKind::uplus); };
          return all_pairs(ctx, [&](Bits a, Bits b) {
            return lp(a & b) == (lp(a) & lp(b)) &&
                   ap.c(lp(a)) == up(ap.c(a));
          });
        });
  g.add("APP-FIG1", "Ch.2 Fig.1, \"Relationship Between Approximations\"",
        kMust, kAll, Constraint::prax, 4, true, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          return all_subsets(ctx, [&](Bits a) {
            return subset_of(ap.g(a, ApproxKind::lplus), ap.l(a)) &&
                   subset_of(ap.l(a), a) &&
                   subset_of(a, ap.g(a, ApproxKind::uo)) &&
                   subset_of(ap.g(a, ApproxKind::uo),
                             ap.g(a, ApproxKind::uplus)) &&
                   subset_of(ap.g(a, ApproxKind::uplus), ap.u(a));
          });
        });
  g.add("APP-SHARP-L", "Ch.11 Prop, \"(App)\" lower part", kMust, kAll,
        Constraint::prax, 4, true, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          return all_subsets(ctx, [&](Bits a) {
            return subset_of(ap.l(a), ap.g(a, ApproxKind::l_sharp));
          });
        });
  g.add("APP-SHARP-U", "Ch.11 Prop, \"(App)\" upper part", kMust, kAll,
        Constraint::prax, 4, true, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          return all_subsets(ctx, [&](Bits a) {
            return subset_of(ap.u(a), ap.g(a, ApproxKind::u_sharp));
          });
        });
  g.add("APP-LHAT-IDEM", "Ch.11 Thm, \"B^lhat lhat = B^lhat\"", kMust, kAll,
        Constraint::prax, 4, true, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          return all_subsets(ctx, [&](Bits b) {
            Bits h = ap.g(b, ApproxKind::l_hat);
            return ap.g(h, ApproxKind::l_hat) == h;
          });
        });
  g.add("APP-UHAT-STRICT", "Ch.11 Thm, \"B^uhat uhat subset B^uhat\"", kMust,
        kSome, Constraint::prax, 5, false, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          for (Bits b = 0;; ++b) {
            Bits h = ap.g(b, ApproxKind::u_hat);
            Bits hh = ap.g(h, ApproxKind::u_hat);
            if (hh != h && subset_of(hh, h)) {
              put(ctx, {{"B", b}, {"B^uhat", h}, {"B^uhat uhat", hh}});
              return true;
            }
            if (b == ap.top) break;
          }
          return false;
        });
  g.add("APP-UHAT-DEF", "Ch.11 Thm, \"B^uhat = B implies B^lhat = B\"", kReg,
        kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          return all_subsets(ctx, [&](Bits b) {
            return ap.g(b, ApproxKind::u_hat) != b ||
                   ap.g(b, ApproxKind::l_hat) == b;
          });
        });
  g.add("APP-UHAT-DEF-CONV",
        "Ch.11 Thm, converse of \"B^uhat = B implies B^lhat = B\"", kReg,
        kSome, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          for (Bits b = 0;; ++b) {
            if (ap.g(b, ApproxKind::l_hat) == b &&
                ap.g(b, ApproxKind::u_hat) != b) {
              put(ctx, {{"B", b}});
              return true;
            }
            if (b == ap.top) break;
          }
          return false;
        });
  g.add("APP-DELTA-UO", "Ch.2 Thm, \"delta_u(S) subseteq delta_uo(S)\"",
        kMust, kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          return all_subsets(ctx, [&](Bits a) {
            return ap.u(a) != a || ap.g(a, ApproxKind::uo) == a;
          });
        });
  g.add("APP-SK-L", "Ch.2 Thm, \"sk(A) = sk(A^l)\"", kMust, kAll,
        Constraint::prax, 4, true, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          return all_subsets(ctx, [&](Bits a) {
            Skeletons sa = skeletons(ctx.rel, a);
            Skeletons sl = skeletons(ctx.rel, ap.l(a));
            return sa.all == sl.all;
          });
        });
  g.add("APP-SK-GREATEST", "Ch.2 Def., maximal skeleton element is A^l+",
        kMust, kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          return all_subsets(ctx, [&](Bits a) {
            Skeletons sk = skeletons(ctx.rel, a);
            Bits lp = ap.g(a, ApproxKind::lplus);
            if (sk.all.empty() || sk.minimal.empty()) return false;
            bool has_lp = false;
            for (Bits b : sk.all) {
              if (b == lp) has_lp = true;
              if (!subset_of(b, lp)) return false;
            }
            return has_lp;
          });
        });
  g.add("ASSOC-F0-ALT",
        "Ch.5 Assoc. Sets, F0 formula vs prose reading", kReg, kAll,
        Constraint::all_reflexive, 4, false, [](const EvalCtx& ctx) {
          return all_subsets(ctx, [&](Bits x) {
            return associated(ctx.rel, x, AssociatedKind::F0) ==
                   associated(ctx.rel, x, AssociatedKind::F0_alt);
          });
        });
}

// ---- Rough objects ----

void add_object_claims(Reg& g) {
  g.add("OBJ-ORDER", "Ch.5/Ch.7, rough inclusion orders the quotient", kMust,
        kAll, Constraint::all_reflexive, 4, false, [](const EvalCtx& ctx) {
          PosetH h = requal_classes(ctx.rel);
          const int m = h.size();
          for (int a = 0; a < m; ++a) {
            if (!class_leq(h, a, a)) return false;
            for (int b = 0; b < m; ++b) {
              if (a != b && class_leq(h, a, b) && class_leq(h, b, a))
                return false;
              for (int c = 0; c < m; ++c)
                if (class_leq(h, a, b) && class_leq(h, b, c) &&
                    !class_leq(h, a, c))
                  return false;
            }
          }
          const Bits top = ctx.rel.universe.all();
          for (Bits x = 0;; ++x) {
            for (Bits y = 0;; ++y) {
              if (rough_leq(ctx.rel, x, y) !=
                  class_leq(h, h.class_of(x), h.class_of(y)))
                return false;
              if (y == top) break;
            }
            if (x == top) break;
          }
          return true;
        });
  g.add("OBJ-ATOMIC", "Ch.7 Thm, \"The partially ordered set H is atomic\"",
        kMust, kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          PosetH h = requal_classes(ctx.rel);
          AtomicityResult ar = is_atomic(h);
          if (!ar.atomic) return false;
          for (const Atom& a : atoms(h))
            if (a.type == AtomType::none) return false;
          return true;
        });
  g.add("OBJ-FULL-INT",
        "Ch.5 Meta-Thm, \"necessarily a union of intervals\"", kReg, kAll,
        Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          PosetH h = requal_classes(ctx.rel);
          for (const RoughClass& c : h.classes) {
            std::set<Bits> mem(c.members.begin(), c.members.end());
            for (Bits a : c.members)
              for (Bits b : c.members) {
                if (!subset_of(a, b)) continue;
                const Bits free = b & ~a;
                for (Bits s = free;; s = (s - 1) & free) {
                  if (!mem.count(a | s)) {
                    put(ctx, {{"a", a}, {"b", b}, {"w", a | s}});
                    return false;
                  }
                  if (s == 0) break;
                }
              }
          }
          return true;
        });
  g.add("OBJ-UDCRIT",
        "Ch.5 Prop, \"every upper definite subset is also upper critical\"",
        kReg, kAll, Constraint::all_reflexive, 4, false,
        [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          CriticalSets cs = critical_sets(ctx.rel);
          std::set<Bits> uc(cs.uc.begin(), cs.uc.end());
          // the empty set is vacuously definite but has no interior witness
          return all_subsets(ctx, [&](Bits x) {
            return x == 0 || ap.u(x) != x || uc.count(x) != 0;
          });
        });
  g.add("OBJ-UDCRIT-CONV",
        "Ch.5 Prop, upper critical without upper definiteness", kReg, kSome,
        Constraint::all_reflexive, 4, false, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          CriticalSets cs = critical_sets(ctx.rel);
          for (Bits x : cs.uc)
            if (ap.u(x) != x) {
              put(ctx, {{"x", x}});
              return true;
            }
          return false;
        });
  g.add("OBJ-BROOM-SINGLETON",
        "Ch.5 Prop, \"{x} notin pitchfork(S)\" for x in delta_lu", kReg,
        kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          std::vector<Bits> dlu =
              definites(ctx.rel, ApproxKind::l, ApproxKind::u);
          std::set<Bits> dset(dlu.begin(), dlu.end());
          for (const auto& fam : brooms(ctx.rel, BroomDirection::upper))
            if (fam.size() == 1 && fam.front() != 0 &&
                dset.count(fam.front())) {
              put(ctx, {{"x", fam.front()}});
              return false;
            }
          return true;
        });
}

// ---- Definite-element Boolean lattice ----

void add_lattice_claims(Reg& g) {
  g.add("ALG4-BOOL", "Ch.4 Thm, \"is a Boolean lattice\"", kMust, kAll,
        Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          const Bits top = ctx.rel.universe.all();
          std::vector<Bits> d =
              definites(ctx.rel, ApproxKind::l, ApproxKind::u);
          std::set<Bits> s(d.begin(), d.end());
          if (!s.count(0) || !s.count(top)) return false;
          for (Bits a : d) {
            if (!s.count(top & ~a)) return false;
            if ((a | (top & ~a)) != top || (a & (top & ~a)) != 0)
              return false;
            for (Bits b : d) {
              if (!s.count(a | b) || !s.count(a & b)) return false;
              if ((a | b) != (b | a) || (a & b) != (b & a)) return false;
              if ((a | (a & b)) != a || (a & (a | b)) != a) return false;
              if ((top & ~(a | b)) != ((top & ~a) & (top & ~b)))
                return false;
              for (Bits c : d) {
                if ((a & (b | c)) != ((a & b) | (a & c))) return false;
                if ((a | (b & c)) != ((a | b) & (a | c))) return false;
              }
            }
          }
          return true;
        });
}

// ---- The almost-upper operator law suite ----

void add_nmr_claims(Reg& g) {
  auto with_hearts = [](std::function<bool(const EvalCtx&, const Hearts&)> f) {
    return [f = std::move(f)](const EvalCtx& ctx) {
      Hearts h(ctx.rel);
      return f(ctx, h);
    };
  };
  auto nmr = [&](const char* id, const char* ref, Expectation e,
                 std::function<bool(const EvalCtx&, const Hearts&)> f) {
    g.add(id, ref, e, kAll, Constraint::prax, 4, false,
          with_hearts(std::move(f)));
  };

  nmr("NMR-01", "Ch.6 Prop, \"(Inclusion)\"", kMust,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_subsets(ctx,
                           [&](Bits x) { return subset_of(x, h.hv[x]); });
      });
  nmr("NMR-02", "Ch.6 Prop, \"(Non-Idempotence)\"", kMust,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_subsets(
            ctx, [&](Bits x) { return subset_of(h.hv[x], h.hv[h.hv[x]]); });
      });
  g.add("NMR-03", "Ch.6 Prop, \"(Cautious Monotony)\"", kMust, kAll,
        Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          if (!choice_regular(ctx.rel, default_choice())) return true;
          Hearts h(ctx.rel);
          return all_pairs(ctx, [&](Bits x, Bits y) {
            return !(subset_of(x, y) && subset_of(y, h.hv[x])) ||
                   subset_of(h.hv[x], h.hv[y]);
          });
        });
  nmr("NMR-04", "Ch.6 Prop, \"(Supra Pseudo Classicality)\"", kMust,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_subsets(
            ctx, [&](Bits x) { return subset_of(h.uv[x], h.hv[x]); });
      });
  nmr("NMR-05", "Ch.6 Prop, \"(Top.)\"", kMust,
      [](const EvalCtx&, const Hearts& h) { return h.hv[h.top] == h.top; });
  nmr("NMR-06", "Ch.6 Thm, \"(Sub Left Absorption)\"", kMust,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_subsets(
            ctx, [&](Bits x) { return subset_of(h.hv[x], h.hv[h.uv[x]]); });
      });
  nmr("NMR-07", "Ch.6 Thm, \"(Sub Right Absorption)\"", kMust,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_subsets(
            ctx, [&](Bits x) { return subset_of(h.hv[x], h.uv[h.hv[x]]); });
      });
  nmr("NMR-08", "Ch.6 Thm, \"(No Left Logical Equivalence)\"", kFail,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          return h.uv[x] != h.uv[y] || h.hv[x] == h.hv[y];
        });
      });
  nmr("NMR-09", "Ch.6 Thm, \"(No Jump Equivalence)\"", kFail,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          return h.hv[x] != h.hv[y] || h.lv[x] == h.lv[y];
        });
      });
  nmr("NMR-10", "Ch.6 Thm, \"(No Weakening)\"", kFail,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_triples(ctx, [&](Bits x, Bits y, Bits z) {
          return !(subset_of(x, h.hv[y]) && subset_of(z, h.uv[x])) ||
                 subset_of(z, h.hv[y]);
        });
      });
  nmr("NMR-11", "Ch.6 Thm, \"(No Subclassical Cumulativity)\"", kFail,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          return !(subset_of(x, y) && subset_of(y, h.uv[x])) ||
                 h.hv[x] == h.hv[y];
        });
      });
  nmr("NMR-12", "Ch.6 Thm, \"(Distributivity)\"", kMust,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          return subset_of(h.hv[x] & h.hv[y], h.hv[h.uv[x] & h.uv[y]]);
        });
      });
  nmr("NMR-13", "Ch.6 Thm, \"(Weak Distributivity)\"", kMust,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_triples(ctx, [&](Bits x, Bits y, Bits z) {
          return subset_of(h.hv[x | z] & h.hv[y | z],
                           h.hv[z | (h.uv[x] & h.uv[y])]);
        });
      });
  nmr("NMR-14", "Ch.6 Thm, \"(Disjunction in Antecedent)\"", kReg,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_triples(ctx, [&](Bits x, Bits y, Bits z) {
          return subset_of(h.hv[x | y] & h.hv[x | z], h.hv[x | y | z]);
        });
      });
  nmr("NMR-15", "Ch.6 Thm, \"(Proof by Cases)\"", kMust,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          return subset_of(h.hv[x | y] & h.hv[x | (h.top & ~y)], h.hv[x]);
        });
      });
  nmr("NMR-COND", "Ch.6 Thm, \"(Conditionalization.)\"", kMust,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_triples(ctx, [&](Bits x, Bits y, Bits z) {
          return !subset_of(y, h.hv[x | z]) ||
                 subset_of((h.top & ~x) | y, h.hv[z]);
        });
      });
  nmr("NMR-COND-ALT",
      "Ch.6 Thm, \"(Conditionalization.)\" difference reading", kReg,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_triples(ctx, [&](Bits x, Bits y, Bits z) {
          return !subset_of(y, h.hv[x | z]) || subset_of(y & ~x, h.hv[z]);
        });
      });
  nmr("NMR-HUC", "Ch.6 Prop, \"x^heart u subseteq x^u heart\"", kReg,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_subsets(ctx, [&](Bits x) {
          return subset_of(h.uv[h.hv[x]], h.hv[h.uv[x]]);
        });
      });
  g.add("NMR-CHI-REG", "Ch.6 Def., \"regular if and only if\"", kReg, kAll,
        Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          return choice_regular(ctx.rel, default_choice());
        });
  nmr("NMR-SCC-ALT", "Ch.6 Discussion, \"(Cumulativity)\"", kReg,
      [](const EvalCtx& ctx, const Hearts& h) {
        return all_pairs(ctx, [&](Bits x, Bits y) {
          return !(subset_of(x, y) && subset_of(y, h.hv[x])) ||
                 h.hv[x] == h.hv[y];
        });
      });
}

// ---- Limiters and closure systems ----

void add_limiter_claims(Reg& g) {
  auto dia_tables = [](const BinRel& r) {
    ApproxTable t(r);
    const Bits top = r.universe.all();
    std::vector<Bits> dv(std::size_t(top) + 1);
    ChoiceFn chi = default_choice();
    for (Bits x = 0;; ++x) {
      dv[x] = diamond(t, x, chi);
      if (x == top) break;
    }
    return dv;
  };

  g.add("DIA-01", "Ch.6 Prop, lower limiter \"(Inclusion)\"", kMust, kAll,
        Constraint::prax, 4, false, [dia_tables](const EvalCtx& ctx) {
          auto dv = dia_tables(ctx.rel);
          return all_subsets(ctx,
                             [&](Bits x) { return subset_of(x, dv[x]); });
        });
  g.add("DIA-02", "Ch.6 Prop, lower limiter \"(Idempotence)\"", kReg, kAll,
        Constraint::prax, 4, false, [dia_tables](const EvalCtx& ctx) {
          auto dv = dia_tables(ctx.rel);
          return all_subsets(ctx,
                             [&](Bits x) { return dv[dv[x]] == dv[x]; });
        });
  g.add("DIA-03", "Ch.6 Prop, lower limiter \"(Cumulativity)\"", kReg, kAll,
        Constraint::prax, 4, false, [dia_tables](const EvalCtx& ctx) {
          auto dv = dia_tables(ctx.rel);
          return all_pairs(ctx, [&](Bits x, Bits y) {
            return !(subset_of(x, y) && subset_of(y, dv[x])) ||
                   dv[x] == dv[y];
          });
        });
  g.add("DIA-04", "Ch.6 Prop, lower limiter \"(Upper Inclusion)\"", kReg,
        kAll, Constraint::prax, 4, false, [dia_tables](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          auto dv = dia_tables(ctx.rel);
          return all_subsets(
              ctx, [&](Bits x) { return subset_of(ap.u(x), dv[x]); });
        });
  g.add("DIA-05", "Ch.6 Prop, lower limiter \"(Top)\"", kMust, kAll,
        Constraint::prax, 4, false, [dia_tables](const EvalCtx& ctx) {
          auto dv = dia_tables(ctx.rel);
          const Bits top = ctx.rel.universe.all();
          return dv[top] == top;
        });
  g.add("DIA-INJ", "Ch.6 Prop, \"x^dia = y^dia implies x^l = y^l\"", kReg,
        kAll, Constraint::prax, 4, false, [dia_tables](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          auto dv = dia_tables(ctx.rel);
          return all_pairs(ctx, [&](Bits x, Bits y) {
            return dv[x] != dv[y] || ap.l(x) == ap.l(y);
          });
        });
  g.add("FLAT-INJ", "Ch.6 Prop, \"x^flat = y^flat implies x^u = y^u\"", kReg,
        kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          Ap ap(ctx.rel);
          ChoiceFn xi = default_choice();
          const Bits top = ctx.rel.universe.all();
          std::vector<Bits> fv(std::size_t(top) + 1);
          for (Bits x = 0;; ++x) {
            fv[x] = flat(ap.t, x, xi);
            if (x == top) break;
          }
          return all_pairs(ctx, [&](Bits x, Bits y) {
            return fv[x] != fv[y] || ap.u(x) == ap.u(y);
          });
        });
  g.add("CRV-IDEM", "Ch.6 Prop, \"x^curlyvee curlyvee = x^curlyvee\"", kReg,
        kAll, Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          ApproxTable t(ctx.rel);
          ChoiceFn chi = default_choice();
          const Bits top = ctx.rel.universe.all();
          std::vector<Bits> cv(std::size_t(top) + 1);
          for (Bits x = 0;; ++x) {
            cv[x] = curlyvee(t, x, chi);
            if (x == top) break;
          }
          return all_subsets(ctx,
                             [&](Bits x) { return cv[cv[x]] == cv[x]; });
        });
  g.add("CLS-U",
        "Ch.6 Prop, \"U(S) ... is not a bounded U-closure system\"", kReg,
        kSome, Constraint::prax, 5, false, [](const EvalCtx& ctx) {
          ClosureSystemKind k =
              closure_kind(images(ctx.rel, ApproxKind::u), ctx.rel);
          if (!(k.u_closure && k.bounded)) {
            put(ctx, {}, "u-image family is not a bounded U-closure system");
            return true;
          }
          return false;
        });
  g.add("CLS-HEART",
        "Ch.6 Thm, \"bounded LU-closure system if the choice\"", kReg, kAll,
        Constraint::prax, 4, false, [](const EvalCtx& ctx) {
          if (!choice_regular(ctx.rel, default_choice())) return true;
          Hearts h(ctx.rel);
          std::set<Bits> fam(h.hv.begin(), h.hv.end());
          ClosureSystemKind k =
              closure_kind({fam.begin(), fam.end()}, ctx.rel);
          return k.lu_closure && k.bounded;
        });
  g.add("CCO-SAFE",
        "Ch.6 Prop, \"A safe map is a cautious closure operator\"", kReg,
        kAll, Constraint::quasi_order, 4, false, [](const EvalCtx& ctx) {
          if (!classify(ctx.rel).antisymmetric) return true;
          Poset p;
          p.n = ctx.rel.n();
          p.leq = ctx.rel.out;
          return is_cco(p.n, [&](Bits z) { return safe_map(p, z); });
        });
}

}  // namespace
}  // namespace reg_detail

const std::vector<ClaimDef>& claim_registry() {
  static const std::vector<ClaimDef> reg = [] {
    reg_detail::Reg g;
    reg_detail::add_relation_claims(g);
    reg_detail::add_granule_claims(g);
    reg_detail::add_approx_claims(g);
    reg_detail::add_object_claims(g);
    reg_detail::add_lattice_claims(g);
    reg_detail::add_nmr_claims(g);
    reg_detail::add_limiter_claims(g);
    reg_detail::add_alg_dep_claims(g);
    return std::move(g.v);
  }();
  return reg;
}

}  // namespace prax
