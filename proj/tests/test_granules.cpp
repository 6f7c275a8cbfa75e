// Neighborhood granules on the nine-point worked example and small chains.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prax/granules.hpp"

using namespace prax;

namespace {

// Nine-point example: a sixteen-pair relation whose reflexive closure is a
// proto-transitive reflexive relation.
BinRel nine_point() {
  Universe u({"a", "b", "c", "e", "f", "g", "h", "l", "n"});
  auto i = [&](const char* s) { return u.index_of(s); };
  std::vector<std::pair<int, int>> pairs = {
      {i("a"), i("a")}, {i("l"), i("l")}, {i("n"), i("n")},
      {i("n"), i("h")}, {i("h"), i("n")}, {i("l"), i("n")},
      {i("g"), i("c")}, {i("c"), i("g")}, {i("g"), i("l")},
      {i("b"), i("g")}, {i("g"), i("b")}, {i("h"), i("g")},
      {i("a"), i("b")}, {i("b"), i("c")}, {i("h"), i("a")},
      {i("a"), i("c")}};
  return build_relation(u, pairs, true);
}

Bits set_of(const Universe& u, std::initializer_list<const char*> names) {
  Bits b = 0;
  for (const char* s : names) b |= Bits(1) << u.index_of(s);
  return b;
}

}  // namespace

TEST_CASE("successor neighborhoods of the nine-point example") {
  BinRel p = nine_point();
  const Universe& u = p.universe;
  auto succ = [&](const char* s) {
    return nbhd(p, u.index_of(s), GranuleKind::succ);
  };
  CHECK(succ("a") == set_of(u, {"a", "h"}));
  CHECK(succ("b") == set_of(u, {"a", "b", "g"}));
  CHECK(succ("c") == set_of(u, {"a", "b", "c", "g"}));
  CHECK(succ("g") == set_of(u, {"b", "c", "g", "h"}));
  CHECK(succ("e") == set_of(u, {"e"}));
  CHECK(succ("f") == set_of(u, {"f"}));
  CHECK(succ("h") == set_of(u, {"h", "n"}));
  CHECK(succ("l") == set_of(u, {"l", "g"}));
  CHECK(succ("n") == set_of(u, {"h", "l", "n"}));
}

TEST_CASE("symmetric neighborhoods of the nine-point example") {
  BinRel p = nine_point();
  const Universe& u = p.universe;
  auto sym = [&](const char* s) {
    return nbhd(p, u.index_of(s), GranuleKind::sym);
  };
  CHECK(sym("a") == set_of(u, {"a"}));
  CHECK(sym("b") == set_of(u, {"b", "g"}));
  CHECK(sym("c") == set_of(u, {"c", "g"}));
  CHECK(sym("e") == set_of(u, {"e"}));
  CHECK(sym("f") == set_of(u, {"f"}));
  CHECK(sym("h") == set_of(u, {"h", "n"}));
  CHECK(sym("l") == set_of(u, {"l"}));
  CHECK(sym("n") == set_of(u, {"n", "h"}));
}

TEST_CASE("granule kinds agree with the defining formulas") {
  BinRel r = build_relation(Universe::numbered(3), {{0, 1}, {1, 2}}, true);
  // succ collects inbound arrows, pred outbound ones.
  CHECK(nbhd(r, 0, GranuleKind::succ) == Bits(0b001));
  CHECK(nbhd(r, 1, GranuleKind::succ) == Bits(0b011));
  CHECK(nbhd(r, 2, GranuleKind::succ) == Bits(0b110));
  CHECK(nbhd(r, 0, GranuleKind::pred) == Bits(0b011));
  CHECK(nbhd(r, 1, GranuleKind::pred) == Bits(0b110));
  CHECK(nbhd(r, 2, GranuleKind::pred) == Bits(0b100));
  for (int x = 0; x < 3; ++x)
    CHECK(nbhd(r, x, GranuleKind::sym) ==
          (nbhd(r, x, GranuleKind::succ) & nbhd(r, x, GranuleKind::pred)));
}

TEST_CASE("ortho-completion granules use the peeled closure") {
  // 0->1->2 closes to 0->2; removing the diagonal leaves the strict order.
  BinRel r = build_relation(Universe::numbered(3), {{0, 1}, {1, 2}}, true);
  CHECK(nbhd(r, 2, GranuleKind::ot) == Bits(0b011));
  CHECK(nbhd(r, 0, GranuleKind::ot) == Bits(0b000));
  CHECK(nbhd(r, 0, GranuleKind::ot_i) == Bits(0b110));
  for (int x = 0; x < 3; ++x)
    CHECK(nbhd(r, x, GranuleKind::ot_o) ==
          (nbhd(r, x, GranuleKind::ot) & nbhd(r, x, GranuleKind::ot_i)));
}

TEST_CASE("granulation is indexed by points") {
  // Both points of a two-point clique generate the same granule.
  BinRel e = build_relation(Universe::numbered(2), {{0, 1}, {1, 0}}, true);
  std::vector<Bits> g = granulation(e, GranuleKind::succ);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == Bits(0b11));
  CHECK(g[1] == Bits(0b11));
}
