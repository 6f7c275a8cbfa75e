// Lower/upper approximation operators, definite-element families,
// skeletons, associated sets, and the granular positive region.
#ifndef PRAX_APPROX_HPP
#define PRAX_APPROX_HPP

#include <memory>
#include <string>
#include <vector>

#include "prax/granules.hpp"
#include "prax/relation.hpp"

namespace prax {

enum class ApproxKind {
  l, u,               // granular over [x]
  lo, uo,             // granular over [x]_o
  lplus, uplus,       // pointwise over [x]
  li, ui,             // granular over [x]_i
  tri_up, tri_down,   // pointwise over [x]_i (up: intersects, down: contained)
  lx, ux,             // [x]_o condition, [x] contribution
  lstar, ustar,       // sigma(R)-conditioned granular
  l_sharp, u_sharp,   // granular over [x] of R^#
  l_hat, u_hat        // scedastic composites of base and sharp operators
};

const char* approx_kind_name(ApproxKind k);
bool parse_approx_kind(const std::string& name, ApproxKind& out);

Bits approx(const BinRel& r, Bits a, ApproxKind kind);

// Precomputed per-relation state (granules, sigma matrix) so that repeated
// approximation queries in law suites avoid rebuilding it.
struct ApproxCtx;

struct ApproxTable {
  explicit ApproxTable(const BinRel& r);
  Bits get(Bits a, ApproxKind kind) const;
  const std::vector<Bits>& succ_granules() const;

 private:
  std::shared_ptr<const ApproxCtx> ctx_;
};

// delta_X(S) = {A : A^X = A}; for two kinds the intersection of the families.
std::vector<Bits> definites(const BinRel& r, ApproxKind kind);
std::vector<Bits> definites(const BinRel& r, ApproxKind k1, ApproxKind k2);

// {A^X : A in powerset(S)}, deduplicated, ascending as bit patterns.
std::vector<Bits> images(const BinRel& r, ApproxKind kind);

struct Skeletons {
  std::vector<Bits> all;      // every B ⊆ A^{l+} with ∪_{x∈B}[x] = A^l
  std::vector<Bits> minimal;  // minimal members of `all` under inclusion
};

Skeletons skeletons(const BinRel& r, Bits a);

enum class AssociatedKind { F0, F1, pi0, St, Sym, F0_alt };

Bits associated(const BinRel& r, Bits x, AssociatedKind kind);

// gPOS_R(Q) = {([x]_Q)^{l_R} : x in S}; requires Q ⊆ R.
std::vector<Bits> gpos(const BinRel& r, const BinRel& q);

}  // namespace prax

#endif
