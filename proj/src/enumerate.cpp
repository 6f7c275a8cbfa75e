#include "prax/enumerate.hpp"

#include <map>
#include <mutex>
#include <random>

namespace prax {

const char* constraint_name(Constraint c) {
  switch (c) {
    case Constraint::all_reflexive: return "all_reflexive";
    case Constraint::prax: return "prax";
    case Constraint::quasi_order: return "quasi_order";
    case Constraint::equivalence: return "equivalence";
  }
  return "?";
}

bool parse_constraint(const std::string& name, Constraint& out) {
  for (Constraint c : {Constraint::all_reflexive, Constraint::prax,
                       Constraint::quasi_order, Constraint::equivalence})
    if (name == constraint_name(c)) {
      out = c;
      return true;
    }
  return false;
}

bool satisfies(const BinRel& r, Constraint c) {
  RelationProfile p = classify(r);
  switch (c) {
    case Constraint::all_reflexive: return p.reflexive;
    case Constraint::prax: return is_prax(p);
    case Constraint::quasi_order: return p.quasi_order;
    case Constraint::equivalence: return p.equivalence;
  }
  return false;
}

int offdiag_bits(int n) { return n * (n - 1); }

BinRel relation_from_mask(int n, std::uint64_t mask) {
  BinRel r(Universe::numbered(n));
  for (int x = 0; x < n; ++x) r.add(x, x);
  int k = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if ((mask >> k) & 1u) r.add(x, y);
      ++k;
    }
  return r;
}

std::uint64_t mask_of_relation(const BinRel& r) {
  std::uint64_t mask = 0;
  int k = 0;
  for (int x = 0; x < r.n(); ++x)
    for (int y = 0; y < r.n(); ++y) {
      if (x == y) continue;
      if (r.has(x, y)) mask |= std::uint64_t(1) << k;
      ++k;
    }
  return mask;
}

const std::vector<std::uint64_t>& enumerate_masks(int n, Constraint c) {
  if (n < 1 || n > 5)
    throw UniverseTooLarge("exhaustive enumeration supports 1 <= n <= 5");
  static std::map<std::pair<int, int>, std::vector<std::uint64_t>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, static_cast<int>(c));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::uint64_t> out;
  const std::uint64_t count = std::uint64_t(1) << offdiag_bits(n);
  for (std::uint64_t mask = 0; mask < count; ++mask)
    if (satisfies(relation_from_mask(n, mask), c)) out.push_back(mask);
  return cache.emplace(key, std::move(out)).first->second;
}

std::vector<BinRel> enumerate_relations(int n, Constraint c) {
  std::vector<BinRel> out;
  for (std::uint64_t mask : enumerate_masks(n, c))
    out.push_back(relation_from_mask(n, mask));
  return out;
}

namespace {

// Close the relation just enough to satisfy the constraint.
BinRel repair(BinRel r, Constraint c) {
  switch (c) {
    case Constraint::all_reflexive:
      return r;
    case Constraint::prax:
      // Grow R by the equivalence generated by tau(R) until tau settles.
      for (;;) {
        BinRel t = weak_transitive_closure(tau(r));
        BinRel grown = rel_union(r, t);
        if (grown == r) return r;
        r = grown;
      }
    case Constraint::quasi_order:
      return weak_transitive_closure(r);
    case Constraint::equivalence:
      return weak_transitive_closure(rel_union(r, converse(r)));
  }
  return r;
}

}  // namespace

BinRel random_relation(int n, Constraint c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int bits = offdiag_bits(n);
  const std::uint64_t lim = bits >= 64 ? ~std::uint64_t(0)
                                       : (std::uint64_t(1) << bits) - 1;
  BinRel last;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    last = relation_from_mask(n, rng() & lim);
    if (satisfies(last, c)) return last;
  }
  BinRel fixed = repair(last, c);
  if (!satisfies(fixed, c))
    throw PraxError("random_relation repair failed to meet constraint");
  return fixed;
}

BinRel restrict_relation(const BinRel& r, Bits keep) {
  std::vector<int> idx;
  std::vector<std::string> names;
  for (int i : bit_range(keep)) {
    idx.push_back(i);
    names.push_back(r.universe.names[i]);
  }
  BinRel out{Universe{names}};
  for (int a = 0; a < static_cast<int>(idx.size()); ++a)
    for (int b = 0; b < static_cast<int>(idx.size()); ++b)
      if (r.has(idx[a], idx[b])) out.add(a, b);
  return out;
}

}  // namespace prax
