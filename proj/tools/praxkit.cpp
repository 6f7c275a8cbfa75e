// praxkit: command-line front end for the library. Classifies relations,
// prints approximations and rough-object summaries, computes dependence
// degrees, generates constrained random relations, and runs the claim
// verification suite.
#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "prax/claims.hpp"
#include "prax/dependence.hpp"
#include "prax/io.hpp"

namespace {

using nlohmann::json;

json profile_json(const prax::RelationProfile& p) {
  return json{{"reflexive", p.reflexive},
              {"symmetric", p.symmetric},
              {"antisymmetric", p.antisymmetric},
              {"transitive", p.transitive},
              {"weakly_transitive", p.weakly_transitive},
              {"proto_transitive", p.proto_tau},
              {"semi_transitive", p.semi_transitive},
              {"quasi_order", p.quasi_order},
              {"partial_order", p.partial_order},
              {"equivalence", p.equivalence},
              {"tolerance", p.tolerance},
              {"prax", prax::is_prax(p)}};
}

json subset_json(const prax::Universe& u, prax::Bits s) {
  json out = json::array();
  for (int i : prax::bit_range(s)) out.push_back(u.names[i]);
  return out;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_classify(const std::string& path) {
  prax::BinRel r = prax::relation_from_file(path);
  std::cout << profile_json(prax::classify(r)).dump(2) << "\n";
  return 0;
}

int cmd_approx(const std::string& path, const std::string& set_csv,
               const std::string& ops_csv) {
  prax::BinRel r = prax::relation_from_file(path);
  prax::Bits a = prax::parse_subset(r.universe, set_csv);
  prax::ApproxTable t(r);
  json out;
  out["set"] = subset_json(r.universe, a);
  json vals;
  for (const std::string& name : split_csv(ops_csv)) {
    prax::ApproxKind k;
    if (!prax::parse_approx_kind(name, k))
      throw prax::PraxError("unknown approximation operator: " + name);
    vals[name] = subset_json(r.universe, t.get(a, k));
  }
  out["approx"] = std::move(vals);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_objects(const std::string& path, bool with_atoms) {
  prax::BinRel r = prax::relation_from_file(path);
  prax::PosetH h = prax::requal_classes(r);
  json out;
  out["classes"] = h.size();
  prax::AtomicityResult ar = prax::is_atomic(h);
  out["atomic"] = ar.atomic;
  std::vector<prax::Atom> at = prax::atoms(h);
  out["atom_count"] = at.size();
  if (with_atoms) {
    json arr = json::array();
    for (const prax::Atom& a : at) {
      const prax::RoughClass& c = h.classes[a.cls];
      json e;
      e["lower"] = subset_json(r.universe, c.rep.lower);
      e["upper"] = subset_json(r.universe, c.rep.upper);
      e["type"] = a.type == prax::AtomType::type0   ? "type0"
                  : a.type == prax::AtomType::type1 ? "type1"
                  : a.type == prax::AtomType::type2 ? "type2"
                                                    : "none";
      arr.push_back(std::move(e));
    }
    out["atoms"] = std::move(arr);
    out["atomicity_witness"] = ar.witness;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_deps(const std::string& path, const std::string& x_csv,
             const std::string& y_csv, const std::string& nu_name,
             const std::string& w_path) {
  prax::BinRel r = prax::relation_from_file(path);
  prax::Bits x = prax::parse_subset(r.universe, x_csv);
  prax::Bits y = prax::parse_subset(r.universe, y_csv);
  prax::NuKind k;
  if (nu_name == "delta_l")
    k = prax::NuKind::delta_l;
  else if (nu_name == "delta_u")
    k = prax::NuKind::delta_u;
  else if (nu_name == "delta_lw")
    k = prax::NuKind::delta_lw;
  else if (nu_name == "gamma_u")
    k = prax::NuKind::gamma_u;
  else if (nu_name == "gamma_uw")
    k = prax::NuKind::gamma_uw;
  else
    throw prax::PraxError("unknown nu family: " + nu_name);
  std::vector<prax::Bits> gran = prax::granulation_of(r);
  std::vector<prax::Bits> nu;
  if (k == prax::NuKind::delta_lw || k == prax::NuKind::gamma_uw)
    nu = prax::nu_family(r, prax::weak_transitive_closure(r), k);
  else
    nu = prax::nu_family(r, k);
  json out;
  out["x"] = subset_json(r.universe, x);
  out["y"] = subset_json(r.universe, y);
  out["nu"] = nu_name;
  out["beta_inf"] = subset_json(r.universe, prax::beta_inf(gran, nu, x, y));
  auto sup = prax::beta_sup(gran, nu, x, y);
  out["beta_sup"] = sup ? subset_json(r.universe, *sup) : json(nullptr);
  out["pn_dependent"] = prax::pn_dependent(r, x, y);
  if (!w_path.empty()) {
    prax::BinRel w = prax::relation_from_file(w_path);
    prax::DepSemantics ds(r, w);
    prax::ApproxTable t(r);
    prax::RoughPair a{t.get(x, prax::ApproxKind::l),
                      t.get(x, prax::ApproxKind::u)};
    prax::RoughPair b{t.get(y, prax::ApproxKind::l),
                      t.get(y, prax::ApproxKind::u)};
    prax::RoughPair bp = ds.beta_plus(a, b);
    out["beta_plus"] = {{"lower", subset_json(r.universe, bp.lower)},
                        {"upper", subset_json(r.universe, bp.upper)}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_gen(int n, const std::string& constraint_name, std::uint64_t seed,
            int count) {
  prax::Constraint c;
  if (!prax::parse_constraint(constraint_name, c))
    throw prax::PraxError("unknown constraint: " + constraint_name);
  for (int i = 0; i < count; ++i) {
    prax::BinRel r = prax::random_relation(n, c, seed + std::uint64_t(i));
    std::cout << prax::relation_to_json(r) << "\n";
  }
  return 0;
}

int cmd_verify(const prax::SuiteOptions& opt, const std::string& format) {
  std::vector<prax::ClaimReport> reports = prax::run_suite(opt);
  if (format == "json")
    std::cout << prax::suite_report_json(reports) << "\n";
  else
    std::cout << prax::suite_report_text(reports);
  return prax::suite_ok(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"praxkit: proto-transitive rough set toolkit"};
  app.require_subcommand(1);

  std::string rel_path, set_csv, ops_csv = "l,u", x_csv, y_csv;
  std::string nu_name = "delta_l", w_path, constraint_name = "prax";
  std::string format = "text";
  bool with_atoms = false;
  int gen_n = 5, gen_count = 10;
  std::uint64_t gen_seed = 42;
  prax::SuiteOptions opt;

  CLI::App* classify = app.add_subcommand("classify", "classify a relation");
  classify->add_option("rel", rel_path, "relation JSON file")->required();

  CLI::App* approx = app.add_subcommand("approx", "approximate a subset");
  approx->add_option("rel", rel_path, "relation JSON file")->required();
  approx->add_option("--set", set_csv, "subset as comma-separated labels")
      ->required();
  approx->add_option("--ops", ops_csv, "operators (default l,u)");

  CLI::App* objects =
      app.add_subcommand("objects", "summarize the rough-object poset");
  objects->add_option("rel", rel_path, "relation JSON file")->required();
  objects->add_flag("--atoms", with_atoms, "list the atoms");

  CLI::App* deps = app.add_subcommand("deps", "dependence degrees");
  deps->add_option("rel", rel_path, "relation JSON file")->required();
  deps->add_option("--x", x_csv, "first subset")->required();
  deps->add_option("--y", y_csv, "second subset")->required();
  deps->add_option("--nu", nu_name, "definite family (default delta_l)");
  deps->add_option("--w", w_path,
                   "transitive super-relation JSON for paired degrees");

  CLI::App* gen = app.add_subcommand("gen", "generate random relations");
  gen->add_option("--n", gen_n, "universe size");
  gen->add_option("--constraint", constraint_name, "relation constraint");
  gen->add_option("--seed", gen_seed, "base seed");
  gen->add_option("--count", gen_count, "number of relations");

  CLI::App* verify = app.add_subcommand("verify", "run the claim suite");
  verify->add_option("--suite", opt.suite, "claim id glob filter");
  verify->add_option("--n-max", opt.n_max, "global exhaustive size cap");
  verify->add_option("--samples", opt.samples, "sampled instances per claim");
  verify->add_option("--seed", opt.seed, "base seed");
  verify->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(rel_path);
    if (approx->parsed()) return cmd_approx(rel_path, set_csv, ops_csv);
    if (objects->parsed()) return cmd_objects(rel_path, with_atoms);
    if (deps->parsed())
      return cmd_deps(rel_path, x_csv, y_csv, nu_name, w_path);
    if (gen->parsed())
      return cmd_gen(gen_n, constraint_name, gen_seed, gen_count);
    if (verify->parsed()) return cmd_verify(opt, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
