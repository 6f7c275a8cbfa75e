#include "prax/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace prax {

using nlohmann::json;

BinRel relation_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<std::string> labels = j.at("universe").get<std::vector<std::string>>();
  Universe u{labels};
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2)
      throw PraxError("relation JSON: each pair must be a two-element array");
    pairs.emplace_back(u.index_of(p[0].get<std::string>()),
                       u.index_of(p[1].get<std::string>()));
  }
  bool closure = j.value("reflexive_closure", false);
  return build_relation(u, pairs, closure);
}

BinRel relation_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PraxError("cannot open relation file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return relation_from_json(ss.str());
}

std::string relation_to_json(const BinRel& r) {
  json j;
  j["universe"] = r.universe.names;
  json pairs = json::array();
  for (auto [x, y] : r.pairs())
    pairs.push_back({r.universe.names[x], r.universe.names[y]});
  j["pairs"] = std::move(pairs);
  j["reflexive_closure"] = false;
  return j.dump(2);
}

Bits parse_subset(const Universe& u, const std::string& csv) {
  Bits b = 0;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    b |= Bits(1) << u.index_of(item);
  }
  return b;
}

}  // namespace prax
