// Relation construction, classification, and derived relations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prax/enumerate.hpp"
#include "prax/relation.hpp"

using namespace prax;

namespace {

// Three-point chain: the reflexive closure of 0->1->2.
BinRel chain3() {
  return build_relation(Universe::numbered(3), {{0, 1}, {1, 2}}, true);
}

}  // namespace

TEST_CASE("construction and basic queries") {
  BinRel r = chain3();
  CHECK(r.n() == 3);
  CHECK(r.has(0, 0));
  CHECK(r.has(0, 1));
  CHECK(r.has(1, 2));
  CHECK_FALSE(r.has(0, 2));
  CHECK_FALSE(r.empty());
  CHECK(r.pairs().size() == 5);

  r.remove(0, 1);
  CHECK_FALSE(r.has(0, 1));
  r.add(0, 1);
  CHECK(r.has(0, 1));
}

TEST_CASE("classification of the chain") {
  RelationProfile p = classify(chain3());
  CHECK(p.reflexive);
  CHECK_FALSE(p.transitive);
  CHECK_FALSE(p.weakly_transitive);
  CHECK(p.proto_tau);
  CHECK(p.antisymmetric);
  CHECK_FALSE(p.equivalence);
  CHECK(is_prax(chain3()));
}

TEST_CASE("tau and the diagonal") {
  BinRel r = chain3();
  CHECK(tau(r) == diagonal(r.universe));

  // A symmetric pair shows up in tau.
  r.add(1, 0);
  BinRel t = tau(r);
  CHECK(t.has(0, 1));
  CHECK(t.has(1, 0));
  CHECK_FALSE(t.has(1, 2));
}

TEST_CASE("relation algebra") {
  BinRel r = chain3();
  BinRel c = converse(r);
  CHECK(c.has(1, 0));
  CHECK(c.has(2, 1));
  CHECK_FALSE(c.has(0, 1));

  BinRel comp = compose(r, r);
  CHECK(comp.has(0, 2));  // through 1

  CHECK(rel_subset(diagonal(r.universe), r));
  CHECK(rel_union(r, c) == rel_union(c, r));
  CHECK(rel_intersect(r, c) == diagonal(r.universe));
  CHECK_FALSE(rel_minus(r, diagonal(r.universe)).has(0, 0));
}

TEST_CASE("weak transitive closure of the chain") {
  BinRel w = weak_transitive_closure(chain3());
  CHECK(w.has(0, 2));
  CHECK(w.has(0, 1));
  CHECK(w.has(1, 2));
  CHECK(classify(w).quasi_order);
  // Closing twice changes nothing.
  CHECK(weak_transitive_closure(w) == w);
}

TEST_CASE("derived relations on the chain") {
  BinRel r = chain3();
  BinRel hd = derived_relation(r, DerivedKind::hash_dot);
  BinRel dh = derived_relation(r, DerivedKind::dot_hash);
  // For an antisymmetric chain both peel the diagonal off the closure.
  CHECK(hd.has(0, 1));
  CHECK(hd.has(1, 2));
  CHECK(hd.has(0, 2));
  CHECK_FALSE(hd.has(0, 0));
  CHECK(dh == hd);
  CHECK(rel_subset(dh, hd));

  // The h-relation vanishes on this relation.
  CHECK(derived_relation(r, DerivedKind::h).empty());

  // ortho_union recovers the closure up to another closure pass.
  BinRel ou = derived_relation(r, DerivedKind::ortho_union);
  CHECK(weak_transitive_closure(ou) == weak_transitive_closure(r));
}

TEST_CASE("quotient by tau on an equivalence") {
  // Two blocks: {0,1} and {2}.
  BinRel e = build_relation(Universe::numbered(3), {{0, 1}, {1, 0}}, true);
  Quotient q = quotient(e);
  REQUIRE(q.classes.size() == 2);
  CHECK(q.classes[0] == Bits(0b011));
  CHECK(q.classes[1] == Bits(0b100));
  CHECK(q.class_of[0] == q.class_of[1]);
  CHECK(q.class_of[0] != q.class_of[2]);
}

TEST_CASE("symmetric center") {
  BinRel r = chain3();
  CHECK(symmetric_center(r) == 0);
  r.add(1, 0);
  CHECK(symmetric_center(r) == Bits(0b011));
}

TEST_CASE("mask round trip") {
  for (std::uint64_t m : {std::uint64_t(0), std::uint64_t(5),
                          std::uint64_t(63)}) {
    BinRel r = relation_from_mask(3, m);
    CHECK(mask_of_relation(r) == m);
    CHECK(r.has(0, 0));  // masks cover off-diagonal bits only
  }
}

TEST_CASE("enumeration counts at tiny sizes") {
  CHECK(enumerate_masks(1, Constraint::all_reflexive).size() == 1);
  CHECK(enumerate_masks(2, Constraint::all_reflexive).size() == 4);
  CHECK(enumerate_masks(2, Constraint::equivalence).size() == 2);
  // Every enumerated prax relation really is one.
  for (std::uint64_t m : enumerate_masks(3, Constraint::prax))
    CHECK(is_prax(relation_from_mask(3, m)));
  // Constraint families nest.
  CHECK(enumerate_masks(3, Constraint::equivalence).size() <=
        enumerate_masks(3, Constraint::quasi_order).size());
  CHECK(enumerate_masks(3, Constraint::quasi_order).size() <=
        enumerate_masks(3, Constraint::prax).size());
  CHECK(enumerate_masks(3, Constraint::prax).size() <=
        enumerate_masks(3, Constraint::all_reflexive).size());
}

TEST_CASE("random generation is deterministic and constrained") {
  for (auto c : {Constraint::all_reflexive, Constraint::prax,
                 Constraint::quasi_order, Constraint::equivalence}) {
    BinRel a = random_relation(5, c, 99);
    BinRel b = random_relation(5, c, 99);
    CHECK(a == b);
    CHECK(satisfies(a, c));
    CHECK(a.has(0, 0));
  }
}

TEST_CASE("restriction relabels an induced subrelation") {
  BinRel r = chain3();
  BinRel s = restrict_relation(r, Bits(0b101));  // keep 0 and 2
  CHECK(s.n() == 2);
  CHECK(s.has(0, 0));
  CHECK(s.has(1, 1));
  CHECK_FALSE(s.has(0, 1));  // the 0->1->2 path needed the dropped point
}
