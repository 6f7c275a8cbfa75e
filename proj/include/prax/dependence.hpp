// Granular dependence degrees, PN-dependence, local bases, exact-arithmetic
// probabilistic dependence, and the dependency semantics built over a
// coarser quasi-order (one-point completion, paired degrees, falls-down).
#ifndef PRAX_DEPENDENCE_HPP
#define PRAX_DEPENDENCE_HPP

#include <boost/rational.hpp>
#include <optional>
#include <vector>

#include "prax/algebras.hpp"

namespace prax {

enum class NuKind { delta_l, delta_u, delta_lw, gamma_u, gamma_uw };

// The family of fixed points (or images) of the named operator, deduplicated.
// The *w variants use the coarser relation w in place of r.
std::vector<Bits> nu_family(const BinRel& r, const BinRel& w, NuKind kind);
std::vector<Bits> nu_family(const BinRel& r, NuKind kind);

// Successor granulation of r as a deduplicated family.
std::vector<Bits> granulation_of(const BinRel& r);

// Union of granules contained in both arguments.
Bits dep_aggregate(const std::vector<Bits>& granules, Bits x, Bits y);

// Largest family member inside the aggregate. The families used here are
// union-closed, so this always exists.
Bits beta_inf(const std::vector<Bits>& granules, const std::vector<Bits>& nu,
              Bits x, Bits y);

// Least family member containing the aggregate, when one exists.
std::optional<Bits> beta_sup(const std::vector<Bits>& granules,
                             const std::vector<Bits>& nu, Bits x, Bits y);

bool pn_independent(const BinRel& r, Bits x, Bits y);
bool pn_dependent(const BinRel& r, Bits x, Bits y);

struct LocalBases {
  std::vector<Bits> p_z;  // minimal covering selections
  std::vector<Bits> b_z;  // greatest neighbor-closed subcollection of p_z
};

LocalBases local_bases(const BinRel& r, Bits x, Bits y);

// ---- Probabilistic dependence with exact rationals ----

using Rational = boost::rational<long long>;

struct FiniteProbSpace {
  Universe universe;
  std::vector<Rational> weight;  // must sum to 1

  FiniteProbSpace(Universe u, std::vector<Rational> w);
  static FiniteProbSpace uniform(const Universe& u);

  Rational p(Bits event) const;
  Rational dep(Bits x, Bits y) const;  // p(x∩y) - p(x)p(y)
  bool pi(Bits x, Bits y) const;       // p(x)p(y) < p(x∩y)
  bool sigma(Bits x, Bits y) const;    // p(x∩y) < p(x)p(y)
  bool wme(Bits x, Bits y) const;      // the intersection has measure zero
};

// ---- Dependency semantics over a coarser transitive relation ----

struct DepSemantics {
  BinRel r, w;
  PhiTau phi;  // granule evolution map

  // Uses the weak transitive closure of r as the coarser relation.
  explicit DepSemantics(const BinRel& r_);
  DepSemantics(const BinRel& r_, const BinRel& w_);

  std::vector<RoughPair> space_r() const;   // pairs of r
  std::vector<RoughPair> space_w() const;   // pairs of w
  bool in_space_r(const RoughPair& p) const;
  bool in_space_w(const RoughPair& p) const;

  // tau extended by a one-point completion: pairs outside the base space
  // map to the adjoined zero (reported via the optional).
  std::optional<RoughPair> tau_bar(const RoughPair& p) const;

  // Paired infimal degree: componentwise beta over the w-granulation, with
  // the lower-definite family of w on the first slot and the family of
  // w-upper images on the second.
  RoughPair beta_plus(const RoughPair& a, const RoughPair& b) const;

  RoughPair varrho(const RoughPair& a) const;  // beta_plus(a, tau(a))
  RoughPair sigma_dep(const RoughPair& a) const;

  // Upsilon(tau(a), g): some base pair with the same tau image has
  // relative dependence g.
  bool upsilon(const RoughPair& ta, const RoughPair& g) const;

 private:
  std::vector<Bits> gran_w_, nu1_, nu2_;
};

// ---- Falls-down semantics over the symmetric-granule space ----

struct FallsDown {
  BinRel r;

  explicit FallsDown(const BinRel& r_);

  std::vector<RoughPair> space_o() const;  // {(A^{l_o}, A^{u_o})}
  Bits integral(int x) const;   // union of successor granules over [x]_o
  Bits ointegral(Bits b) const; // union of integrals of symmetric granules inside b
  RoughPair ltimes(const RoughPair& p) const;

  // Paired infimal degree over the symmetric granulation, with the
  // lo-definite family on the first slot and the uo-image family on the
  // second.
  RoughPair beta_plus(const RoughPair& a, const RoughPair& b) const;

  // Pi(a, v): some pair with the same ltimes image has paired dependence v.
  bool pi(const RoughPair& a, const RoughPair& v) const;
  std::vector<RoughPair> pi_class(const RoughPair& a) const;

  // The family {Pi_a} flattened to subsets of S for cover checks: the union
  // of both components of each member.
  std::vector<Bits> cover_sets() const;

 private:
  std::vector<Bits> sym_, gran_o_, nu1_, nu2_;
};

}  // namespace prax

#endif
