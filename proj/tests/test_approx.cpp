// Approximation operators: worked-example values, operator laws on small
// fixtures, definite families, images, and skeletons.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prax/approx.hpp"

using namespace prax;

namespace {

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

BinRel chain3() {
  return build_relation(Universe::numbered(3), {{0, 1}, {1, 2}}, true);
}

}  // namespace

TEST_CASE("nine-point example approximations") {
  BinRel p = nine_point();
  const Universe& u = p.universe;
  Bits a = set_of(u, {"a", "h", "f"});
  CHECK(approx(p, a, ApproxKind::l) == a);
  CHECK(approx(p, a, ApproxKind::lo) == set_of(u, {"a", "f"}));
  // The two lower approximations are incomparable in general: here one
  // inclusion, for {l} the other.
  Bits f = set_of(u, {"l"});
  CHECK(approx(p, f, ApproxKind::l) == 0);
  CHECK(approx(p, f, ApproxKind::lo) == f);
}

TEST_CASE("chain approximations by hand") {
  BinRel r = chain3();
  ApproxTable t(r);
  // Granules: [0]={0}, [1]={0,1}, [2]={1,2}.
  CHECK(t.get(0b011, ApproxKind::l) == 0b011);
  CHECK(t.get(0b011, ApproxKind::u) == 0b111);
  CHECK(t.get(0b100, ApproxKind::l) == 0b000);
  CHECK(t.get(0b100, ApproxKind::u) == 0b110);
  CHECK(t.get(0b010, ApproxKind::u) == 0b111);
  // Pointwise variants on {0,1}.
  CHECK(t.get(0b011, ApproxKind::lplus) == 0b011);
  CHECK(t.get(0b011, ApproxKind::uplus) == 0b111);
  // Symmetric granules are singletons here, so lo/uo are the identity.
  for (Bits x = 0; x <= 7; ++x) {
    CHECK(t.get(x, ApproxKind::lo) == x);
    CHECK(t.get(x, ApproxKind::uo) == x);
  }
}

TEST_CASE("table agrees with the free function on every kind") {
  BinRel r = chain3();
  ApproxTable t(r);
  for (ApproxKind k :
       {ApproxKind::l, ApproxKind::u, ApproxKind::lo, ApproxKind::uo,
        ApproxKind::lplus, ApproxKind::uplus, ApproxKind::li, ApproxKind::ui,
        ApproxKind::tri_up, ApproxKind::tri_down, ApproxKind::lx,
        ApproxKind::ux, ApproxKind::lstar, ApproxKind::ustar,
        ApproxKind::l_sharp, ApproxKind::u_sharp, ApproxKind::l_hat,
        ApproxKind::u_hat})
    for (Bits x = 0; x <= 7; ++x) CHECK(t.get(x, k) == approx(r, x, k));
}

TEST_CASE("kind names round trip") {
  for (ApproxKind k : {ApproxKind::l, ApproxKind::u, ApproxKind::uo,
                       ApproxKind::tri_down, ApproxKind::u_hat}) {
    ApproxKind back;
    REQUIRE(parse_approx_kind(approx_kind_name(k), back));
    CHECK(back == k);
  }
  ApproxKind ignored;
  CHECK_FALSE(parse_approx_kind("nonsense", ignored));
}

TEST_CASE("basic order laws hold on the chain") {
  BinRel r = chain3();
  ApproxTable t(r);
  for (Bits x = 0; x <= 7; ++x) {
    CHECK(subset_of(t.get(x, ApproxKind::l), x));
    CHECK(subset_of(x, t.get(x, ApproxKind::u)));
    Bits l = t.get(x, ApproxKind::l);
    CHECK(t.get(l, ApproxKind::l) == l);  // idempotent lower
    CHECK(subset_of(t.get(x, ApproxKind::l_sharp), t.get(x, ApproxKind::l)));
    CHECK(subset_of(t.get(x, ApproxKind::u), t.get(x, ApproxKind::u_sharp)));
  }
}

TEST_CASE("definite families and images") {
  BinRel r = chain3();
  for (Bits a : definites(r, ApproxKind::l))
    CHECK(approx(r, a, ApproxKind::l) == a);
  for (Bits a : definites(r, ApproxKind::l, ApproxKind::u)) {
    CHECK(approx(r, a, ApproxKind::l) == a);
    CHECK(approx(r, a, ApproxKind::u) == a);
  }
  std::vector<Bits> im = images(r, ApproxKind::u);
  // Deduplicated and ascending.
  for (std::size_t i = 1; i < im.size(); ++i) CHECK(im[i - 1] < im[i]);
  // Only definable uppers appear: recompute independently.
  std::vector<bool> seen(8, false);
  for (Bits a = 0; a <= 7; ++a) seen[approx(r, a, ApproxKind::u)] = true;
  for (Bits b : im) CHECK(seen[b]);
}

TEST_CASE("skeletons of a chain subset") {
  BinRel r = chain3();
  // {0,1}^l = {0,1}; [1] alone covers it, [0] is redundant.
  Skeletons sk = skeletons(r, 0b011);
  REQUIRE(sk.minimal.size() == 1);
  CHECK(sk.minimal[0] == 0b010);
  CHECK(sk.all.size() == 2);
}

TEST_CASE("granular positive region") {
  BinRel r = chain3();
  std::vector<Bits> pos = gpos(r, r);
  REQUIRE_FALSE(pos.empty());
  for (Bits b : pos) CHECK(subset_of(approx(r, b, ApproxKind::l), b));
}
