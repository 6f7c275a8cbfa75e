#include "prax/approx.hpp"

#include <algorithm>
#include <string>

namespace prax {

const char* approx_kind_name(ApproxKind k) {
  switch (k) {
    case ApproxKind::l: return "l";
    case ApproxKind::u: return "u";
    case ApproxKind::lo: return "lo";
    case ApproxKind::uo: return "uo";
    case ApproxKind::lplus: return "lplus";
    case ApproxKind::uplus: return "uplus";
    case ApproxKind::li: return "li";
    case ApproxKind::ui: return "ui";
    case ApproxKind::tri_up: return "tri_up";
    case ApproxKind::tri_down: return "tri_down";
    case ApproxKind::lx: return "lx";
    case ApproxKind::ux: return "ux";
    case ApproxKind::lstar: return "lstar";
    case ApproxKind::ustar: return "ustar";
    case ApproxKind::l_sharp: return "l_sharp";
    case ApproxKind::u_sharp: return "u_sharp";
    case ApproxKind::l_hat: return "l_hat";
    case ApproxKind::u_hat: return "u_hat";
  }
  return "?";
}

bool parse_approx_kind(const std::string& name, ApproxKind& out) {
  static const ApproxKind kinds[] = {
      ApproxKind::l,      ApproxKind::u,      ApproxKind::lo,
      ApproxKind::uo,     ApproxKind::lplus,  ApproxKind::uplus,
      ApproxKind::li,     ApproxKind::ui,     ApproxKind::tri_up,
      ApproxKind::tri_down, ApproxKind::lx,   ApproxKind::ux,
      ApproxKind::lstar,  ApproxKind::ustar,  ApproxKind::l_sharp,
      ApproxKind::u_sharp, ApproxKind::l_hat, ApproxKind::u_hat};
  for (ApproxKind k : kinds)
    if (name == approx_kind_name(k)) {
      out = k;
      return true;
    }
  return false;
}

struct ApproxCtx {
  BinRel r;
  std::vector<Bits> succ, pred, sym, sharp_succ;
  // sigma[x] has bit y set when the tau-neighborhood of x is R-related to
  // the tau-neighborhood of y.
  std::vector<Bits> sigma;

  explicit ApproxCtx(const BinRel& rel) : r(rel) {
    const int n = r.n();
    succ.resize(n);
    pred.resize(n);
    sym.resize(n);
    for (int x = 0; x < n; ++x) {
      succ[x] = r.in[x];
      pred[x] = r.out[x];
      sym[x] = r.in[x] & r.out[x];
    }
    BinRel sharp = weak_transitive_closure(r);
    sharp_succ.resize(n);
    for (int x = 0; x < n; ++x) sharp_succ[x] = sharp.in[x];
    BinRel t = tau(r);
    sigma.assign(n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int b : bit_range(t.out[x]))
          if (r.out[b] & t.out[y]) {
            sigma[x] |= Bits(1) << y;
            break;
          }
  }

  Bits gran_lower(const std::vector<Bits>& g, Bits a) const {
    Bits res = 0;
    for (int x = 0; x < r.n(); ++x)
      if (subset_of(g[x], a)) res |= g[x];
    return res;
  }
  Bits gran_upper(const std::vector<Bits>& g, Bits a) const {
    Bits res = 0;
    for (int x = 0; x < r.n(); ++x)
      if (g[x] & a) res |= g[x];
    return res;
  }

  Bits get(Bits a, ApproxKind kind) const {
    const int n = r.n();
    switch (kind) {
      case ApproxKind::l: return gran_lower(succ, a);
      case ApproxKind::u: return gran_upper(succ, a);
      case ApproxKind::lo: return gran_lower(sym, a);
      case ApproxKind::uo: return gran_upper(sym, a);
      case ApproxKind::li: return gran_lower(pred, a);
      case ApproxKind::ui: return gran_upper(pred, a);
      case ApproxKind::l_sharp: return gran_lower(sharp_succ, a);
      case ApproxKind::u_sharp: return gran_upper(sharp_succ, a);
      case ApproxKind::lplus: {
        Bits res = 0;
        for (int x = 0; x < n; ++x)
          if (subset_of(succ[x], a)) res |= Bits(1) << x;
        return res;
      }
      case ApproxKind::uplus: {
        Bits res = 0;
        for (int x = 0; x < n; ++x)
          if (succ[x] & a) res |= Bits(1) << x;
        return res;
      }
      case ApproxKind::tri_down: {
        Bits res = 0;
        for (int x = 0; x < n; ++x)
          if (subset_of(pred[x], a)) res |= Bits(1) << x;
        return res;
      }
      case ApproxKind::tri_up: {
        Bits res = 0;
        for (int x = 0; x < n; ++x)
          if (pred[x] & a) res |= Bits(1) << x;
        return res;
      }
      case ApproxKind::lx: {
        Bits res = 0;
        for (int x = 0; x < n; ++x)
          if (subset_of(sym[x], a)) res |= succ[x];
        return res;
      }
      case ApproxKind::ux: {
        Bits res = 0;
        for (int x = 0; x < n; ++x)
          if (sym[x] & a) res |= succ[x];
        return res;
      }
      case ApproxKind::lstar: {
        Bits res = 0;
        for (int x = 0; x < n; ++x) {
          if (!subset_of(succ[x], a)) continue;
          for (int y : bit_range(sigma[x])) {
            if (y == x) continue;
            if (subset_of(succ[y], a)) {
              res |= succ[x];
              break;
            }
          }
        }
        return res;
      }
      case ApproxKind::ustar: {
        Bits res = 0;
        for (int x = 0; x < n; ++x) {
          if (!(succ[x] & a)) continue;
          for (int y : bit_range(sigma[x] & r.out[x])) {
            if (y == x) continue;
            if (subset_of(succ[y], a)) {
              res |= succ[x];
              break;
            }
          }
        }
        return res;
      }
      case ApproxKind::l_hat: {
        Bits diff = get(a, ApproxKind::l) & ~get(a, ApproxKind::l_sharp);
        return gran_lower(succ, diff);
      }
      case ApproxKind::u_hat: {
        Bits diff = get(a, ApproxKind::u_sharp) & ~get(a, ApproxKind::u);
        return gran_upper(sharp_succ, diff);
      }
    }
    throw PraxError("unreachable approx kind");
  }
};

ApproxTable::ApproxTable(const BinRel& r)
    : ctx_(std::make_shared<const ApproxCtx>(r)) {}

Bits ApproxTable::get(Bits a, ApproxKind kind) const {
  return ctx_->get(a, kind);
}

const std::vector<Bits>& ApproxTable::succ_granules() const {
  return ctx_->succ;
}

Bits approx(const BinRel& r, Bits a, ApproxKind kind) {
  if (a & ~r.universe.all())
    throw UniverseMismatch("approx: subset not over the relation's universe");
  ApproxCtx ctx(r);
  return ctx.get(a, kind);
}

std::vector<Bits> definites(const BinRel& r, ApproxKind kind) {
  if (r.n() > 12)
    throw UniverseTooLarge("definite-family enumeration limited to n <= 12");
  ApproxCtx ctx(r);
  std::vector<Bits> fam;
  Bits top = r.universe.all();
  for (Bits a = 0;; ++a) {
    if (ctx.get(a, kind) == a) fam.push_back(a);
    if (a == top) break;
  }
  return fam;
}

std::vector<Bits> definites(const BinRel& r, ApproxKind k1, ApproxKind k2) {
  if (r.n() > 12)
    throw UniverseTooLarge("definite-family enumeration limited to n <= 12");
  ApproxCtx ctx(r);
  std::vector<Bits> fam;
  Bits top = r.universe.all();
  for (Bits a = 0;; ++a) {
    if (ctx.get(a, k1) == a && ctx.get(a, k2) == a) fam.push_back(a);
    if (a == top) break;
  }
  return fam;
}

std::vector<Bits> images(const BinRel& r, ApproxKind kind) {
  if (r.n() > 12)
    throw UniverseTooLarge("image-family enumeration limited to n <= 12");
  ApproxCtx ctx(r);
  std::vector<Bits> fam;
  Bits top = r.universe.all();
  for (Bits a = 0;; ++a) {
    fam.push_back(ctx.get(a, kind));
    if (a == top) break;
  }
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}

Skeletons skeletons(const BinRel& r, Bits a) {
  ApproxCtx ctx(r);
  Bits base = ctx.get(a, ApproxKind::lplus);
  Bits target = ctx.get(a, ApproxKind::l);
  std::vector<int> members;
  for (int i : bit_range(base)) members.push_back(i);
  Skeletons sk;
  const int m = static_cast<int>(members.size());
  for (Bits mask = 0; mask < (Bits(1) << m); ++mask) {
    Bits cover = 0;
    Bits b = 0;
    for (int j = 0; j < m; ++j)
      if (has_bit(mask, j)) {
        cover |= ctx.succ[members[j]];
        b |= Bits(1) << members[j];
      }
    if (cover == target) sk.all.push_back(b);
  }
  for (Bits b : sk.all) {
    bool minimal = true;
    for (Bits c : sk.all)
      if (c != b && subset_of(c, b)) {
        minimal = false;
        break;
      }
    if (minimal) sk.minimal.push_back(b);
  }
  return sk;
}

Bits associated(const BinRel& r, Bits x, AssociatedKind kind) {
  const int n = r.n();
  Bits comp = r.universe.all() & ~x;
  switch (kind) {
    case AssociatedKind::F0: {
      Bits res = 0;
      for (int y : bit_range(x))
        if (r.out[y] & comp) res |= Bits(1) << y;
      return res;
    }
    case AssociatedKind::F0_alt: {
      // Prose variant: elements outside x whose successor neighborhood
      // intersects x.
      Bits res = 0;
      for (int y : bit_range(comp))
        if (r.in[y] & x) res |= Bits(1) << y;
      return res;
    }
    case AssociatedKind::F1: {
      Bits res = 0;
      for (int y = 0; y < n; ++y)
        if ((r.out[y] & comp) && (r.in[y] & x)) res |= Bits(1) << y;
      return res;
    }
    case AssociatedKind::pi0: {
      Bits res = 0;
      for (int y : bit_range(x))
        if (r.in[y] & comp) res |= Bits(1) << y;
      return res;
    }
    case AssociatedKind::St: {
      Bits f0 = associated(r, x, AssociatedKind::F0);
      Bits res = 0;
      for (int y = 0; y < n; ++y)
        if (subset_of(r.in[y], x) && !has_bit(f0, y)) res |= Bits(1) << y;
      return res;
    }
    case AssociatedKind::Sym: {
      Bits res = 0;
      for (int y : bit_range(x)) {
        bool ok = true;
        for (int z : bit_range(x))
          if (r.has(y, z) != r.has(z, y)) {
            ok = false;
            break;
          }
        if (ok) res |= Bits(1) << y;
      }
      return res;
    }
  }
  throw PraxError("unreachable associated kind");
}

std::vector<Bits> gpos(const BinRel& r, const BinRel& q) {
  if (!rel_subset(q, r)) throw NotSubrelation("gpos: Q is not a subrelation of R");
  ApproxCtx ctx(r);
  std::vector<Bits> res;
  for (int x = 0; x < r.n(); ++x)
    res.push_back(ctx.gran_lower(ctx.succ, q.in[x]));
  return res;
}

}  // namespace prax
