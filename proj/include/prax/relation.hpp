// Finite binary relations: construction, classification, and the derived
// relations used throughout the library (tau, transitive completion, the
// dot/cycle/threetimes family, quotients, order approximations).
#ifndef PRAX_RELATION_HPP
#define PRAX_RELATION_HPP

#include <utility>
#include <vector>

#include "prax/core.hpp"

namespace prax {

struct BinRel {
  Universe universe;
  // out[x] = {y : Rxy}; in[x] = {y : Ryx} kept in sync.
  std::vector<Bits> out;
  std::vector<Bits> in;

  BinRel() = default;
  explicit BinRel(Universe u);

  int n() const { return universe.size(); }
  bool has(int x, int y) const { return has_bit(out[x], y); }
  void add(int x, int y);
  void remove(int x, int y);
  bool empty() const;
  std::vector<std::pair<int, int>> pairs() const;

  bool same_universe(const BinRel& o) const;
  bool operator==(const BinRel& o) const { return out == o.out; }
};

BinRel build_relation(const Universe& u,
                      const std::vector<std::pair<int, int>>& pairs,
                      bool take_reflexive_closure);

BinRel diagonal(const Universe& u);
BinRel converse(const BinRel& r);
BinRel compose(const BinRel& a, const BinRel& b);  // (a∘b)xy iff ∃z: a x z & b z y
BinRel rel_union(const BinRel& a, const BinRel& b);
BinRel rel_intersect(const BinRel& a, const BinRel& b);
BinRel rel_minus(const BinRel& a, const BinRel& b);
bool rel_subset(const BinRel& a, const BinRel& b);

// tau(R) = R ∩ R^{-1}.
BinRel tau(const BinRel& r);

// R^# = ∪ R^(i), the transitive completion of R.
BinRel weak_transitive_closure(const BinRel& r);

struct RelationProfile {
  bool reflexive = false;
  bool symmetric = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool weakly_transitive = false;
  // Elementwise rule: Rxy & Ryz & Ryx & Rzy & x!=y!=z implies Rxz.
  bool proto_elementwise = false;
  // tau(R) weakly transitive; the criterion used for proto-transitivity
  // everywhere downstream.
  bool proto_tau = false;
  bool semi_transitive = false;
  bool quasi_order = false;
  bool partial_order = false;
  bool equivalence = false;
  bool tolerance = false;
  bool acyclic = false;
};

RelationProfile classify(const BinRel& r);

// A PRAX is a reflexive relation whose tau is weakly transitive
// (equivalently, an equivalence).
inline bool is_prax(const RelationProfile& p) { return p.reflexive && p.proto_tau; }
bool is_prax(const BinRel& r);

enum class DerivedKind { dot, lf, cyc, h, hash_dot, dot_hash, ortho_union };

BinRel derived_relation(const BinRel& r, DerivedKind kind);

struct Quotient {
  std::vector<Bits> classes;     // tau-classes in order of least member
  std::vector<int> class_of;     // element -> class index
  BinRel sigma;                  // Q|tau(Q) on the class universe
};

// Throws NonEquivalenceTau when tau(Q) is not an equivalence.
Quotient quotient(const BinRel& q);

// Union of the coordinates of the pairs in tau(R) minus the diagonal.
Bits symmetric_center(const BinRel& r);

struct POAProfile {
  bool po1 = false, po2 = false, po3 = false, po4 = false, po5 = false;
  bool poa = false, wpoa = false, ipoa = false, lqo = false;
};

// Evaluates PO1..PO5 for the candidate order LT against R. PO1/PO2 are
// evaluated on the strict part of LT so that reflexive quasi-orders are
// admissible; lqo additionally requires LT to be a quasi-order.
POAProfile poa_check(const BinRel& r, const BinRel& lt);

bool in_lqo(const BinRel& r, const BinRel& candidate);
BinRel lqo_meet(const BinRel& r, const BinRel& a, const BinRel& b);
BinRel lqo_join(const BinRel& r, const BinRel& a, const BinRel& b);
BinRel lqo_top(const BinRel& r);

}  // namespace prax

#endif
