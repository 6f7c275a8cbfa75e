// Rough equality and inclusion, the quotient poset of rough objects, atoms,
// brooms, bruinvals, and critical elements.
#ifndef PRAX_ROUGH_HPP
#define PRAX_ROUGH_HPP

#include <optional>
#include <vector>

#include "prax/approx.hpp"

namespace prax {

struct RoughPair {
  Bits lower = 0;
  Bits upper = 0;
  bool operator==(const RoughPair&) const = default;
  bool operator<(const RoughPair& o) const {
    return lower != o.lower ? lower < o.lower : upper < o.upper;
  }
};

struct RoughClass {
  RoughPair rep;
  std::vector<Bits> members;
};

struct PosetH {
  BinRel rel;
  std::vector<RoughClass> classes;
  int zero = -1;  // index of the class of the empty set
  int one = -1;   // index of the class of S

  int size() const { return static_cast<int>(classes.size()); }
  int class_of(Bits a) const;  // by (lower, upper) key
};

// A ⪯ B iff A^l ⊆ B^l and A^u ⊆ B^u.
bool rough_leq(const BinRel& r, Bits a, Bits b);
bool rough_equal(const BinRel& r, Bits a, Bits b);

// Materializes the quotient powerset(S)/≈ with its order. Requires n <= 12.
PosetH requal_classes(const BinRel& r);

bool class_leq(const PosetH& h, int x, int y);

// s-ideal: down-closed and any two members have an upper bound inside.
bool is_s_ideal(const PosetH& h, const std::vector<int>& k);

enum class AtomType { none, type0, type1, type2 };

struct Atom {
  int cls;
  AtomType type;
};

std::vector<Atom> atoms(const PosetH& h);

struct AtomicityResult {
  bool atomic;
  // witness[c] = an atom class index below class c (or c itself when c is an
  // atom); -1 for the zero class or when no atom exists below c.
  std::vector<int> witness;
};

AtomicityResult is_atomic(const PosetH& h);

enum class CriticalKind {
  weak_upper,
  upper,
  bi,
  weak_lower,
  lower,
  lower_abs,
  critical
};

// Predicates over powerset(S); z is the relative element (ignored by
// lower_abs). Side conditions (z strictly inside or outside x) are enforced.
bool critical(const BinRel& r, Bits x, Bits z, CriticalKind kind);

struct CriticalSets {
  std::vector<Bits> uc, lc, cr;
};

CriticalSets critical_sets(const BinRel& r);

enum class BroomDirection { upper, lower };

// Families of subsets per the broom conditions; each broom is returned as a
// list of subsets.
std::vector<std::vector<Bits>> brooms(const BinRel& r, BroomDirection dir);

enum class BruinvalKind {
  b0_open,      // (x, y)
  b0_half_lo,   // [x, y)
  b0_half_hi,   // (x, y]
  b0_closed,    // [x, y]
  open_lo,      // [x, alpha)
  open_hi,      // (x, alpha]
  open_both,    // (x, alpha)
  closed,       // [x, alpha]
  closed_set,   // [alpha, beta]
  open_set,     // (alpha, beta)
  semi_closed   // [[alpha, beta]]
};

struct Bruinval {
  BruinvalKind kind;
  Bits x = 0, y = 0;                  // endpoints for point forms
  std::vector<Bits> alpha, beta;      // endpoint families for set forms
  // For semi_closed: alpha = alpha1, beta = beta1, alpha2/beta2 below.
  std::vector<Bits> alpha2, beta2;
};

std::vector<Bits> bruinval_members(const BinRel& r, const Bruinval& b);

// True when the member family is a nonempty roughly-equal family that no
// strictly larger roughly-equal family contains.
bool is_full_requal(const BinRel& r, const std::vector<Bits>& members);
bool is_requal_family(const BinRel& r, const std::vector<Bits>& members);

}  // namespace prax

#endif
