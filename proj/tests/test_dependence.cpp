// Dependence degrees, local bases, exact probabilistic dependence, and the
// two coarse-space semantics.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prax/dependence.hpp"

using namespace prax;

namespace {

BinRel chain3() {
  return build_relation(Universe::numbered(3), {{0, 1}, {1, 2}}, true);
}

}  // namespace

TEST_CASE("granulation and the aggregate") {
  BinRel r = chain3();
  std::vector<Bits> gran = granulation_of(r);
  REQUIRE(gran.size() == 3);  // {0}, {0,1}, {1,2}
  CHECK(dep_aggregate(gran, 0b011, 0b111) == 0b011);
  CHECK(dep_aggregate(gran, 0b011, 0b110) == 0b000);
  CHECK(dep_aggregate(gran, 0b110, 0b111) == 0b110);
}

TEST_CASE("infimal and supremal degrees") {
  BinRel r = chain3();
  std::vector<Bits> gran = granulation_of(r);
  std::vector<Bits> nu = nu_family(r, NuKind::delta_l);
  CHECK(nu.size() == 5);
  CHECK(beta_inf(gran, nu, 0b011, 0b111) == 0b011);
  CHECK(beta_inf(gran, nu, 0b001, 0b010) == 0b000);
  auto sup = beta_sup(gran, nu, 0b011, 0b111);
  REQUIRE(sup);
  CHECK(subset_of(beta_inf(gran, nu, 0b011, 0b111), *sup));
  // The upper-definite family differs from the lower one here.
  std::vector<Bits> nuu = nu_family(r, NuKind::gamma_u);
  CHECK(nuu != nu);
}

TEST_CASE("positive-negative dependence") {
  BinRel r = chain3();
  CHECK(pn_dependent(r, 0b011, 0b110));
  CHECK_FALSE(pn_dependent(r, 0b001, 0b100));
  for (Bits x = 0; x <= 7; ++x) {
    CHECK_FALSE(pn_dependent(r, x, 0));  // nothing depends on the empty set
    CHECK(pn_independent(r, x, 0));
  }
}

TEST_CASE("local bases") {
  BinRel r = chain3();
  LocalBases lb = local_bases(r, 0b011, 0b111);
  for (Bits p : lb.b_z) {
    bool in_p = false;
    for (Bits q : lb.p_z) in_p |= (q == p);
    CHECK(in_p);
  }
}

TEST_CASE("probability spaces with exact rationals") {
  Universe u = Universe::numbered(4);
  FiniteProbSpace sp = FiniteProbSpace::uniform(u);
  CHECK(sp.p(0b0001) == Rational(1, 4));
  CHECK(sp.p(0b1111) == Rational(1));
  CHECK(sp.p(0) == Rational(0));
  // Independent halves: {0,1} and {0,2}.
  CHECK(sp.dep(0b0011, 0b0101) == Rational(0));
  CHECK_FALSE(sp.pi(0b0011, 0b0101));
  CHECK_FALSE(sp.sigma(0b0011, 0b0101));
  // Positive association of a set with itself.
  CHECK(sp.pi(0b0011, 0b0011));
  CHECK(sp.wme(0b0011, 0b1100));

  // Weighted space, still exact.
  FiniteProbSpace w(Universe::numbered(2),
                    {Rational(1, 3), Rational(2, 3)});
  CHECK(w.p(0b01) == Rational(1, 3));
  CHECK(w.dep(0b01, 0b11) == Rational(1, 3) - Rational(1, 3));

  CHECK_THROWS_AS(
      FiniteProbSpace(Universe::numbered(2), {Rational(1), Rational(1)}),
      PraxError);
  CHECK_THROWS_AS(
      FiniteProbSpace(Universe::numbered(2), {Rational(3, 2), Rational(-1, 2)}),
      PraxError);
  CHECK_THROWS_AS(FiniteProbSpace(Universe::numbered(3),
                                  {Rational(1, 2), Rational(1, 2)}),
                  UniverseMismatch);
}

TEST_CASE("coarse-space semantics over the closure") {
  BinRel r = chain3();
  DepSemantics ds(r);
  CHECK(ds.space_r().size() == 8);
  // Frozen relative dependences.
  struct Row {
    RoughPair a, tau, rho;
  };
  const Row rows[] = {
      {{0, 0}, {0, 0}, {0, 0}},          {{0, 6}, {0, 7}, {0, 0}},
      {{0, 7}, {0, 7}, {0, 7}},          {{1, 3}, {1, 3}, {1, 0}},
      {{1, 7}, {1, 7}, {1, 7}},          {{3, 7}, {3, 7}, {3, 7}},
      {{6, 7}, {7, 7}, {0, 7}},          {{7, 7}, {7, 7}, {7, 7}}};
  for (const Row& row : rows) {
    CHECK(ds.in_space_r(row.a));
    CHECK(ds.phi.tau_pair(row.a) == row.tau);
    CHECK(ds.varrho(row.a) == row.rho);
  }
  // The one-point completion reports pairs outside the base space as absent.
  CHECK_FALSE(ds.tau_bar(RoughPair{0b100, 0b100}).has_value());
  REQUIRE(ds.tau_bar(RoughPair{0, 0}).has_value());
  // Upsilon holds exactly when some base pair hits the degree.
  CHECK(ds.upsilon({0, 0}, {0, 0}));
  CHECK(ds.upsilon({0, 7}, {0, 0}));  // through the pair (0,6)
  CHECK_FALSE(ds.upsilon({0, 0}, {7, 7}));
}

TEST_CASE("falls-down semantics on the chain") {
  BinRel r = chain3();
  FallsDown fd(r);
  // Symmetric granules are singletons, so the o-space is the full powerset
  // diagonal and the integral recovers successor granules.
  CHECK(fd.space_o().size() == 8);
  CHECK(fd.integral(0) == 0b001);
  CHECK(fd.integral(1) == 0b011);
  CHECK(fd.integral(2) == 0b110);
  CHECK(fd.ointegral(0b111) == 0b111);
  CHECK(fd.ltimes(RoughPair{0b100, 0b100}) == RoughPair{0b110, 0b110});
  // Pi is reflexive on the o-space and its classes sit inside their source.
  for (const RoughPair& a : fd.space_o()) {
    CHECK(fd.pi(a, a));
    for (const RoughPair& v : fd.pi_class(a)) {
      CHECK(subset_of(v.lower, a.lower));
      CHECK(subset_of(v.upper, a.upper));
    }
  }
  CHECK_FALSE(fd.cover_sets().empty());
}
