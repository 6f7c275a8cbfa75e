// JSON serialization for universes, relations, and subsets.
#ifndef PRAX_IO_HPP
#define PRAX_IO_HPP

#include <string>

#include "prax/relation.hpp"

namespace prax {

// Format: {"universe":[labels],"pairs":[[x,y],...],"reflexive_closure":bool}
// where pairs refer to labels.
BinRel relation_from_json(const std::string& text);
BinRel relation_from_file(const std::string& path);
std::string relation_to_json(const BinRel& r);

// Comma-separated labels -> subset bits.
Bits parse_subset(const Universe& u, const std::string& csv);

}  // namespace prax

#endif
