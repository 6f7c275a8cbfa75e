// Operations over rough-object classes (aggregation, commonality, pragmatic
// variants), filters over the class poset, and the partial algebra of
// lower/upper approximation pairs.
#ifndef PRAX_ALGEBRAS_HPP
#define PRAX_ALGEBRAS_HPP

#include <optional>
#include <vector>

#include "prax/rough.hpp"

namespace prax {

// ---- Class-level operations over the quotient poset H ----

int h_lower(const PosetH& h, int a);   // class of the shared lower approximation
int h_upper(const PosetH& h, int a);   // class of the shared upper approximation
int h_odot(const PosetH& h, int a, int b);   // class of the union of pairwise meets
int h_oplus(const PosetH& h, int a, int b);  // class of the union of pairwise joins

std::vector<int> h_lb(const PosetH& h, int a, int b);  // common lower bounds
std::vector<int> h_ub(const PosetH& h, int a, int b);  // common upper bounds
std::optional<int> h_glb(const PosetH& h, int a, int b);
std::optional<int> h_lub(const PosetH& h, int a, int b);

// Pragmatic operations: each names a target (lower, upper) pair; the result
// is the class realizing it, when some subset does. Throws EmptyResult when
// no subset realizes the pair.
int h_plus(const PosetH& h, int a, int b);          // ((l∩l)^l, u∪u)
int h_plus_variant(const PosetH& h, int a, int b);  // (l∩l, u∪u)
int h_times(const PosetH& h, int a, int b);  // (l∪l, l∪l∪(u∩u))
int h_otimes(const PosetH& h, int a, int b); // (l∪l, u∪u)

// Same solvers but reporting absence instead of throwing.
std::optional<int> h_plus_opt(const PosetH& h, int a, int b);
std::optional<int> h_plus_variant_opt(const PosetH& h, int a, int b);
std::optional<int> h_times_opt(const PosetH& h, int a, int b);
std::optional<int> h_otimes_opt(const PosetH& h, int a, int b);

// ---- Filters over H ----

struct FilterFlags {
  bool f1 = false;  // up-closed
  bool f2 = false;  // closed under oplus and the lower map
  bool f3 = false;  // prime with respect to oplus
  bool f4 = false;  // prime with respect to upper bounds (excluding the top)
  bool f5 = false;  // any two members have a lower bound in the set
  bool order_filter() const { return f1; }
  bool filter() const { return f1 && f2; }
  bool prime_filter() const { return f1 && f2 && f3; }
  bool prime_order_filter() const { return f1 && f4; }
  bool strong_order_filter() const { return f1 && f5; }
};

FilterFlags filter_classify(const PosetH& h, const std::vector<int>& k);

// Smallest filter containing the given classes (up-closure plus closure
// under oplus and the lower map).
std::vector<int> filter_generated(const PosetH& h, const std::vector<int>& base);

std::vector<int> filter_meet(const PosetH& h, const std::vector<int>& f,
                             const std::vector<int>& p);
std::vector<int> filter_join(const PosetH& h, const std::vector<int>& f,
                             const std::vector<int>& p);

// All filters (sets satisfying F1 and F2), as sorted class-index lists.
// Requires the class count to be at most 16.
std::vector<std::vector<int>> all_filters(const PosetH& h);

struct FilterLatticeReport {
  bool bounded = false;
  bool lattice = false;    // meet and join stay inside the family
  bool atomistic = false;  // every filter is the join of the atoms below it
  int count = 0;
};

FilterLatticeReport filter_lattice_report(const PosetH& h);

// ---- The partial algebra of (lower, upper) pairs ----

std::vector<RoughPair> pair_space(const BinRel& r);

RoughPair pv_join(const RoughPair& a, const RoughPair& b);

// Componentwise intersection; absent when the pair is not realized.
std::optional<RoughPair> pv_meet(const BinRel& r, const RoughPair& a,
                                 const RoughPair& b);

// (upper complement, lower complement); absent when not realized.
std::optional<RoughPair> pv_wcomp(const BinRel& r, const RoughPair& a);

// ((l∩l)^l, (u∩u)^l); absent when the pair is not realized.
std::optional<RoughPair> pv_pmeet(const BinRel& r, const RoughPair& a,
                                  const RoughPair& b);

bool pair_realized(const BinRel& r, const RoughPair& p);

// ---- Granule evolution maps into a coarser quasi-order ----

struct PhiTau {
  BinRel r, w;

  // Requires r ⊆ w and w transitive.
  PhiTau(const BinRel& r_, const BinRel& w_);

  Bits phi_o(int x) const;       // union over z in [x] of the w-granule of z
  Bits phi(Bits b) const;        // union of phi_o over granules inside b
  RoughPair tau_pair(const RoughPair& p) const;

  // Pairs of the base space mapping onto the given coarse pair.
  std::vector<RoughPair> co_rough(const RoughPair& target) const;

 private:
  std::vector<Bits> phi_o_;
};

}  // namespace prax

#endif
