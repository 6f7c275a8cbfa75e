#include "prax/core.hpp"

#include <set>

namespace prax {

Universe::Universe(std::vector<std::string> labels) : names(std::move(labels)) {
  if (names.empty()) throw PraxError("universe must have at least one element");
  if (static_cast<int>(names.size()) > kMaxUniverse)
    throw UniverseTooLarge("universe size " + std::to_string(names.size()) +
                           " exceeds limit " + std::to_string(kMaxUniverse));
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size())
    throw PraxError("universe labels must be pairwise distinct");
}

Universe Universe::numbered(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Universe(std::move(labels));
}

int Universe::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == label) return i;
  throw UnknownElement("unknown element label: " + label);
}

std::string subset_to_string(const Universe& u, Bits s) {
  std::string out = "{";
  bool first = true;
  for (int i : bit_range(s)) {
    if (!first) out += ",";
    out += u.names[i];
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace prax
