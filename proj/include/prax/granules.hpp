// Element-generated neighborhood granules and granulations.
#ifndef PRAX_GRANULES_HPP
#define PRAX_GRANULES_HPP

#include <vector>

#include "prax/relation.hpp"

namespace prax {

// succ:  [x]   = {y : Ryx}
// pred:  [x]_i = {y : Rxy}
// sym:   [x]_o = {y : Ryx & Rxy}
// ot / ot_i / ot_o: the same shapes over the trans ortho-completion R^{#.}
enum class GranuleKind { succ, pred, sym, ot, ot_i, ot_o };

Bits nbhd(const BinRel& r, int x, GranuleKind kind);
std::vector<Bits> granulation(const BinRel& r, GranuleKind kind);

}  // namespace prax

#endif
