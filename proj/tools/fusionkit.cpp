// fusionkit command-line front end.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fusionkit/fusionkit.hpp"

namespace {

using namespace fusionkit;
using fusion::FusionSystem;
using group::GroupTable;

struct Options {
  std::string catalog_name;
  std::string file;
  int p = 0;
  bool strict_sparse = false;
  std::optional<std::size_t> max_order;
  std::string out;
  std::string format;  // empty: the command's default
  std::string property;
  bool all = false;
};

struct Source {
  FusionSystem system;
  std::string id;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Bounds bounds_for(const Options& o) {
  Bounds b = Bounds::from_environment();
  if (o.max_order) b.max_closure_order = *o.max_order;
  return b;
}

Source load_source(const Options& o, const Bounds& bounds) {
  if (o.catalog_name.empty() == o.file.empty()) throw UsageError("give exactly one of --catalog and --file");
  if (!o.catalog_name.empty()) {
    if (o.p == 0) throw UsageError("--catalog needs -p");
    GroupTable g = group::catalog_group(o.catalog_name, bounds);
    return {fusion::from_group(g, o.p, bounds), o.catalog_name + "/p" + std::to_string(o.p)};
  }
  nlohmann::json j = group::read_json_file(o.file);
  if (j.is_object() && j.contains("format")) {
    FusionSystem f = fusion::from_json(j, bounds);
    if (o.p != 0 && o.p != f.p()) throw UsageError("-p disagrees with the dump's prime");
    return {std::move(f), o.file};
  }
  if (o.p == 0) throw UsageError("a group file needs -p");
  GroupTable g = group::group_from_json(j).build(bounds);
  return {fusion::from_group(g, o.p, bounds), o.file + "/p" + std::to_string(o.p)};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw ParseError("cannot write " + o.out);
  file << text;
}

std::string flag(bool b) { return b ? "true" : "false"; }

int run_build(const Options& o) {
  const Bounds bounds = bounds_for(o);
  Source s = load_source(o, bounds);
  emit(o, fusion::to_json(s.system).dump(2) + "\n");
  return 0;
}

int run_check(const Options& o) {
  const Bounds bounds = bounds_for(o);
  Source s = load_source(o, bounds);
  const FusionSystem& f = s.system;
  nlohmann::ordered_json j{{"system", s.id}, {"property", o.property}};
  std::string text;
  if (o.property == "saturated") {
    fusion::SaturationReport rep = fusion::check_saturation(f);
    j["value"] = rep.saturated;
    auto violations = nlohmann::ordered_json::array();
    for (const auto& v : rep.violations) {
      violations.push_back({{"axiom", v.axiom}, {"domain", v.domain}, {"detail", v.detail}});
      std::cerr << "violation: " << v.axiom << ": " << v.detail << "\n";
    }
    j["violations"] = std::move(violations);
    text = flag(rep.saturated);
  } else if (o.property == "sparse" || o.property == "extremely-sparse") {
    classify::Sparseness sp = o.strict_sparse ? classify::sparseness_strict(f) : classify::sparseness(f, bounds);
    const bool value = o.property == "sparse" ? sp.sparse : sp.extremely_sparse;
    j["mode"] = o.strict_sparse ? "strict" : "saturated";
    j["value"] = value;
    if (!value && sp.witness_subgroup) {
      j["witness_subgroup"] = f.lattice().subgroup(*sp.witness_subgroup).members();
    }
    text = flag(value);
  } else if (o.property == "constrained") {
    classify::Constrained c = classify::is_constrained(f);
    j["value"] = c.constrained;
    if (c.witness) j["witness_subgroup"] = f.lattice().subgroup(*c.witness).members();
    text = flag(c.constrained);
  } else if (o.property == "slim") {
    const bool slim = group::is_slim(f.lattice().table(), f.base_group(), f.p(), bounds);
    j["value"] = slim;
    text = flag(slim);
  } else if (o.property == "essential-rank") {
    const int rank = fusion::essential_rank(f, bounds);
    j["value"] = rank;
    text = std::to_string(rank);
  } else {
    throw UsageError("unknown property " + o.property);
  }
  emit(o, o.format == "json" ? j.dump(2) + "\n" : text + "\n");
  return 0;
}

int run_verify(const Options& o) {
  const Bounds bounds = bounds_for(o);
  std::vector<classify::TheoremReport> reports;
  if (o.all) {
    if (!o.catalog_name.empty() || !o.file.empty()) throw UsageError("--all takes no source");
    reports = classify::run_catalog_suite(classify::default_catalog(), bounds);
  } else {
    Source s = load_source(o, bounds);
    reports.push_back(classify::run_theorem_suite(s.system, s.id, bounds));
  }
  bool failed = false;
  for (const auto& r : reports) failed = failed || r.has_failures();
  nlohmann::ordered_json j = o.all ? classify::to_json(reports) : classify::to_json(reports.front());
  emit(o, j.dump(2) + "\n");
  return failed ? 1 : 0;
}

int run_catalog(const Options& o) {
  nlohmann::ordered_json j;
  j["groups"] = group::catalog_names();
  auto suite = nlohmann::ordered_json::array();
  for (const auto& e : classify::default_catalog()) suite.push_back({{"group", e.group}, {"p", e.p}});
  j["default_suite"] = std::move(suite);
  if (o.format == "json") {
    emit(o, j.dump(2) + "\n");
    return 0;
  }
  std::string text;
  for (const auto& name : group::catalog_names()) text += name + "\n";
  emit(o, text);
  return 0;
}

int run_graph(const Options& o) {
  const Bounds bounds = bounds_for(o);
  Source s = load_source(o, bounds);
  if (o.format == "json") {
    emit(o, fusion::to_json(s.system).dump(2) + "\n");
  } else {
    emit(o, to_dot(s.system, s.id));
  }
  return 0;
}

void add_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--catalog", o.catalog_name, "catalog group name, e.g. s4 or cp_wr_cp(3)");
  cmd->add_option("--file", o.file, "group file or fusion-system dump (JSON)");
  cmd->add_option("-p,--prime", o.p, "the prime p");
  cmd->add_option("--max-order", o.max_order, "group closure order bound");
  cmd->add_option("--out", o.out, "write output to this path");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"fusionkit: saturated fusion systems on finite p-groups"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "write the fusion-system dump");
  add_source(build, o);

  auto* check = app.add_subcommand("check", "print one verdict");
  check->add_option("property", o.property, "saturated|sparse|extremely-sparse|constrained|slim|essential-rank")
      ->required()
      ->check(CLI::IsMember({"saturated", "sparse", "extremely-sparse", "constrained", "slim", "essential-rank"}));
  add_source(check, o);
  check->add_flag("--strict-sparse", o.strict_sparse, "quantify over all closed subsystems");
  check->add_option("--format", o.format, "text|json")
      ->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "run the theorem suite");
  add_source(verify, o);
  verify->add_flag("--all", o.all, "run the default catalog");

  auto* catalog = app.add_subcommand("catalog", "list catalog groups");
  catalog->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  catalog->add_option("--out", o.out, "write output to this path");

  auto* graph = app.add_subcommand("graph", "DOT rendering of the subgroup lattice with fusion edges");
  add_source(graph, o);
  graph->add_option("--format", o.format, "dot|json")->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (o.format.empty()) o.format = graph->parsed() ? "dot" : "text";

  try {
    if (build->parsed()) return run_build(o);
    if (check->parsed()) return run_check(o);
    if (verify->parsed()) return run_verify(o);
    if (catalog->parsed()) return run_catalog(o);
    if (graph->parsed()) return run_graph(o);
  } catch (const Error& e) {
    std::cerr << "fusionkit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "fusionkit: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
