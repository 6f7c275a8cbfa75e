// Rough equality, the quotient poset, atoms, critical sets, brooms, and
// bruinvals on small fixtures.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prax/rough.hpp"

using namespace prax;

namespace {

BinRel chain3() {
  return build_relation(Universe::numbered(3), {{0, 1}, {1, 2}}, true);
}

// Two blocks {0,1} and {2}.
BinRel twoblock() {
  return build_relation(Universe::numbered(3), {{0, 1}, {1, 0}}, true);
}

}  // namespace

TEST_CASE("rough equality and order on the chain") {
  BinRel r = chain3();
  // Distinct pairs on the chain: every subset is its own class.
  PosetH h = requal_classes(r);
  CHECK(h.size() == 8);
  CHECK(h.zero == h.class_of(0));
  CHECK(h.one == h.class_of(0b111));
  for (Bits a = 0; a <= 7; ++a) {
    CHECK(rough_equal(r, a, a));
    CHECK(rough_leq(r, 0, a));
    CHECK(rough_leq(r, a, 0b111));
  }
  CHECK_FALSE(rough_equal(r, 0b001, 0b010));
}

TEST_CASE("quotient poset of two blocks") {
  BinRel e = twoblock();
  PosetH h = requal_classes(e);
  // (0,0), (0,B1), (B1,B1), (B2,B2), (B2,S), (S,S) with B1={0,1}, B2={2}.
  CHECK(h.size() == 6);
  CHECK(h.class_of(0b001) == h.class_of(0b010));  // both are (0, B1)
  CHECK(h.class_of(0b101) == h.class_of(0b110));
  CHECK(h.class_of(0b011) != h.class_of(0b001));
  CHECK(class_leq(h, h.zero, h.one));
  CHECK(class_leq(h, h.class_of(0b001), h.class_of(0b011)));
  CHECK_FALSE(class_leq(h, h.one, h.zero));
}

TEST_CASE("atoms and atomicity") {
  PosetH h = requal_classes(twoblock());
  std::vector<Atom> at = atoms(h);
  CHECK(at.size() == 2);
  for (const Atom& a : at) {
    CHECK(a.cls != h.zero);
    CHECK(class_leq(h, h.zero, a.cls));
    CHECK(a.type != AtomType::none);
  }
  AtomicityResult ar = is_atomic(h);
  CHECK(ar.atomic);
  for (int c = 0; c < h.size(); ++c) {
    if (c == h.zero) continue;
    CHECK(ar.witness[c] >= 0);
    CHECK(class_leq(h, ar.witness[c], c));
  }
}

TEST_CASE("s-ideals") {
  PosetH h = requal_classes(twoblock());
  CHECK(is_s_ideal(h, {h.zero}));
  // The whole poset is down-closed and upward directed inside itself.
  std::vector<int> all;
  for (int c = 0; c < h.size(); ++c) all.push_back(c);
  CHECK(is_s_ideal(h, all));
  // An up-set missing the bottom is not down-closed.
  CHECK_FALSE(is_s_ideal(h, {h.one}));
}

TEST_CASE("critical predicates enforce side conditions") {
  BinRel r = chain3();
  // x must lie strictly inside z for lower-type criticality; violating the
  // side condition throws.
  CHECK_THROWS_AS(critical(r, 0b011, 0b001, CriticalKind::lower),
                  SideConditionViolated);
  CHECK_THROWS_AS(critical(r, 0b001, 0b011, CriticalKind::upper),
                  SideConditionViolated);
  CriticalSets cs = critical_sets(r);
  CHECK(cs.uc.size() == 7);
  CHECK(cs.lc.size() == 5);
  CHECK(cs.cr.size() == 4);
  // Critical elements are exactly those both upper and lower critical.
  for (Bits b : cs.cr) {
    bool in_uc = false, in_lc = false;
    for (Bits x : cs.uc) in_uc |= (x == b);
    for (Bits x : cs.lc) in_lc |= (x == b);
    CHECK(in_uc);
    CHECK(in_lc);
  }
}

TEST_CASE("brooms share the defining approximation") {
  BinRel r = chain3();
  for (auto dir : {BroomDirection::upper, BroomDirection::lower})
    for (const auto& fam : brooms(r, dir)) {
      REQUIRE_FALSE(fam.empty());
      ApproxKind k =
          dir == BroomDirection::upper ? ApproxKind::u : ApproxKind::l;
      Bits v = approx(r, fam[0], k);
      for (Bits m : fam) CHECK(approx(r, m, k) == v);
      // Members form an antichain under inclusion.
      for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j) {
          CHECK_FALSE(subset_of(fam[i], fam[j]));
          CHECK_FALSE(subset_of(fam[j], fam[i]));
        }
    }
}

TEST_CASE("bruinval point intervals") {
  BinRel r = chain3();
  Bruinval b;
  b.kind = BruinvalKind::b0_closed;
  b.x = 0b001;
  b.y = 0b011;
  std::vector<Bits> mem = bruinval_members(r, b);
  // [x, y] under rough order.
  for (Bits m : mem) {
    CHECK(rough_leq(r, b.x, m));
    CHECK(rough_leq(r, m, b.y));
  }
  bool has_x = false, has_y = false;
  for (Bits m : mem) {
    has_x |= (m == b.x);
    has_y |= (m == b.y);
  }
  CHECK(has_x);
  CHECK(has_y);

  b.kind = BruinvalKind::b0_open;
  std::vector<Bits> open = bruinval_members(r, b);
  for (Bits m : open) {
    CHECK(m != b.x);
    CHECK(m != b.y);
    CHECK(open.size() < mem.size());
  }
}

TEST_CASE("full requal families") {
  BinRel e = twoblock();
  // {0} and {1} share the pair (0, {0,1}); together they are the full class.
  CHECK(is_requal_family(e, {0b001, 0b010}));
  CHECK(is_full_requal(e, {0b001, 0b010}));
  CHECK_FALSE(is_full_requal(e, {0b001}));
  CHECK_FALSE(is_requal_family(e, {0b001, 0b100}));
}
