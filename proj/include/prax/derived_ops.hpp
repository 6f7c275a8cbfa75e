// Choice-dependent operators (almost upper approximation, limiters), their
// non-monotonic-consequence law suite, closure-system classification,
// cautious closure operators, and safe maps over explicit posets.
#ifndef PRAX_DERIVED_OPS_HPP
#define PRAX_DERIVED_OPS_HPP

#include <functional>
#include <string>
#include <vector>

#include "prax/approx.hpp"

namespace prax {

// Deterministic selector from a nonempty subset family to one member.
// The default picks the numerically least bit pattern.
using ChoiceFn = std::function<Bits(const std::vector<Bits>&)>;

ChoiceFn default_choice();

struct HeartParts {
  std::vector<Bits> pre_family;  // {y : x ⊆ y, x^l = y^l, y^u ⊆ x^{uu}}
  std::vector<Bits> maximal;     // maximal members of pre_family
  Bits chosen;                   // chi(maximal)
  Bits result;                   // chosen^u
};

HeartParts heart_parts(const ApproxTable& t, Bits x, const ChoiceFn& chi);
Bits heart(const BinRel& r, Bits x, const ChoiceFn& chi);
Bits heart(const ApproxTable& t, Bits x, const ChoiceFn& chi);

Bits diamond(const ApproxTable& t, Bits x, const ChoiceFn& chi);
Bits flat(const ApproxTable& t, Bits x, const ChoiceFn& xi);
Bits curlyvee(const ApproxTable& t, Bits x, const ChoiceFn& chi);

// chi is regular when x ⊆ y with x^l = y^l forces the same chosen member.
bool choice_regular(const BinRel& r, const ChoiceFn& chi);

struct LawResult {
  std::string name;
  bool negative = false;    // law expects a counterexample
  bool holds = false;       // universal validity (positive reading)
  bool witness_found = false;  // counterexample found (negative reading)
  std::string detail;
};

// Evaluates the almost-upper-approximation law suite exhaustively over
// powerset tuples of the given relation.
std::vector<LawResult> nmr_suite(const BinRel& r, const ChoiceFn& chi);

struct ClosureSystemKind {
  bool closure = false;
  bool u_closure = false;
  bool l_closure = false;
  bool lu_closure = false;
  bool bounded = false;
};

// Flags computed over all achievable subfamily intersections (the empty
// subfamily contributes the whole carrier S).
ClosureSystemKind closure_kind(const std::vector<Bits>& family, const BinRel& r);

// Inclusion + Idempotence + Cautious Monotony over all subset pairs.
bool is_cco(int n, const std::function<Bits(Bits)>& op);

// An explicit finite poset: leq[i] is the bitset of j with i <= j.
struct Poset {
  int n = 0;
  std::vector<Bits> leq;

  bool le(int i, int j) const { return has_bit(leq[i], j); }
};

std::vector<Bits> order_ideals(const Poset& p);

// Relevance of an ideal collection for a target subset, and the safe map
// built from it. Members of a relevant collection must contain the target
// set; see the notes in the implementation for the reading used.
bool relevant(const Poset& p, const std::vector<Bits>& k, Bits b);
Bits safe_map(const Poset& p, Bits z);

}  // namespace prax

#endif
