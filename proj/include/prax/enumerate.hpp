// Deterministic enumeration and seeded random generation of reflexive
// relations under structural constraints.
#ifndef PRAX_ENUMERATE_HPP
#define PRAX_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "prax/relation.hpp"

namespace prax {

enum class Constraint { all_reflexive, prax, quasi_order, equivalence };

const char* constraint_name(Constraint c);
bool parse_constraint(const std::string& name, Constraint& out);
bool satisfies(const BinRel& r, Constraint c);

// Number of off-diagonal positions: n*(n-1). Bit k of a mask corresponds to
// the k-th pair (x,y), x != y, in row-major order.
int offdiag_bits(int n);
BinRel relation_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of_relation(const BinRel& r);

// Every reflexive relation on n points meeting the constraint, exactly once,
// in ascending mask order. Throws UniverseTooLarge when n > 5.
std::vector<BinRel> enumerate_relations(int n, Constraint c);

// Masks only (cheaper to hold); same order as enumerate_relations.
const std::vector<std::uint64_t>& enumerate_masks(int n, Constraint c);

// Deterministic for (n, constraint, seed). Rejection sampling with a repair
// fallback after 1000 rejections; the result always satisfies the
// constraint.
BinRel random_relation(int n, Constraint c, std::uint64_t seed);

// Induced subrelation on the kept points, relabeled to a fresh numbered
// universe in ascending order of the original indices.
BinRel restrict_relation(const BinRel& r, Bits keep);

}  // namespace prax

#endif
