#include "prax/granules.hpp"

namespace prax {

Bits nbhd(const BinRel& r, int x, GranuleKind kind) {
  if (x < 0 || x >= r.n()) throw UnknownElement("nbhd: element out of range");
  switch (kind) {
    case GranuleKind::succ:
      return r.in[x];
    case GranuleKind::pred:
      return r.out[x];
    case GranuleKind::sym:
      return r.in[x] & r.out[x];
    case GranuleKind::ot:
    case GranuleKind::ot_i:
    case GranuleKind::ot_o: {
      BinRel hd = derived_relation(r, DerivedKind::hash_dot);
      if (kind == GranuleKind::ot) return hd.in[x];
      if (kind == GranuleKind::ot_i) return hd.out[x];
      return hd.in[x] & hd.out[x];
    }
  }
  throw PraxError("unreachable granule kind");
}

std::vector<Bits> granulation(const BinRel& r, GranuleKind kind) {
  std::vector<Bits> g(r.n());
  if (kind == GranuleKind::ot || kind == GranuleKind::ot_i ||
      kind == GranuleKind::ot_o) {
    BinRel hd = derived_relation(r, DerivedKind::hash_dot);
    for (int x = 0; x < r.n(); ++x) {
      if (kind == GranuleKind::ot) g[x] = hd.in[x];
      else if (kind == GranuleKind::ot_i) g[x] = hd.out[x];
      else g[x] = hd.in[x] & hd.out[x];
    }
    return g;
  }
  for (int x = 0; x < r.n(); ++x) g[x] = nbhd(r, x, kind);
  return g;
}

}  // namespace prax
