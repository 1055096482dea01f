#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "comax/builders.hpp"
#include "comax/invariants.hpp"
#include "comax/ring.hpp"
#include "comax/spec_parser.hpp"
#include "comax/theorems.hpp"

namespace {

using namespace comax;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kGuard = 3, kInternal = 4 };

struct Options {
  bool no_header = false;
  bool verbose = false;
  std::string spec;
  std::string graph = "gamma";
  std::string format = "dot";
  std::string out;
  std::vector<std::string> checks;
  bool json_out = false;
  std::string zn, products, explicit_specs;
  std::size_t jobs = 1;
  bool mod_radical = false;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string member_list(const Ring& r, const std::vector<Element>& elements) {
  std::vector<std::string> names;
  for (Element e : elements) names.push_back(r.element_name(e));
  return "{" + join(names, ",") + "}";
}

void print_info(const Ring& r, const Options& o, std::ostream& out) {
  out << "ring: " << (r.spec() ? to_string(*r.spec()) : r.name()) << "\n";
  out << "size: " << r.size() << "\n";
  out << "local: " << (r.is_local() ? "yes" : "no") << "\n";
  out << "units: " << r.units().size() << "\n";
  out << "radical: " << r.radical().size() << "\n";
  out << "maximal_ideals: " << r.maximal_ideals().size() << "\n";
  out << "ideals: " << r.ideals().size() << "\n";
  if (!o.verbose) return;
  out << "U = " << member_list(r, r.units()) << "\n";
  out << "J = " << member_list(r, r.radical().members) << "\n";
  for (std::size_t i = 0; i < r.maximal_ideals().size(); ++i)
    out << "m" << i + 1 << " = " << member_list(r, r.maximal_ideals()[i].members) << "\n";
}

Graph select_graph(const Ring& r, const std::string& which) {
  if (which == "omega") return build_omega(r);
  if (which == "gamma") return build_gamma(r);
  return build_gamma_r(r);
}

std::string length_text(const Length& l) { return l.to_string(); }

json invariants_json(const Graph& g) {
  json j;
  j["vertices"] = g.size();
  j["edges"] = g.edge_count();
  j["connected"] = is_connected(g);
  j["diameter"] = length_text(diameter(g));
  j["girth"] = length_text(girth(g));
  try {
    j["clique_number"] = clique_number(g);
    j["chromatic_number"] = chromatic_number(g);
  } catch (const GuardExceeded& e) {
    j["clique_number"] = nullptr;
    j["chromatic_number"] = nullptr;
    j["solver_guard"] = e.what();
  }
  const BipartiteClass b = bipartite_class(g);
  j["bipartite"] = b.kind == BipartiteKind::not_bipartite       ? "no"
                   : b.kind == BipartiteKind::complete_bipartite ? "complete(" + std::to_string(b.larger_part) + "," +
                                                                      std::to_string(b.smaller_part) + ")"
                                                                : "yes";
  const auto split = split_analysis(g);
  j["split"] = split ? "yes(K=" + std::to_string(split->clique.size()) + ",D=" + std::to_string(split->independent.size()) + ")"
                     : "no";
  const StarClass s = star_class(g);
  j["star"] = s.kind == StarKind::star                 ? "star(" + std::to_string(s.leaves) + ")"
              : s.kind == StarKind::refinement_of_star ? "refinement"
                                                       : "no";
  const CoreReport core = core_and_ends(g);
  j["core_vertices"] = core.core.size();
  j["end_vertices"] = core.end_vertices.size();
  j["uncovered_vertices"] = core.uncovered_vertices.size();
  j["uncovered_edges"] = core.uncovered_edges.size();
  return j;
}

void print_header(const Options& o, const std::string& command, std::ostream& out, const char* comment = "#") {
  if (o.no_header) return;
  out << comment << " comax " << command;
  if (!o.spec.empty()) out << " " << o.spec;
  out << "\n";
}

int write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(o.out);
  if (!file) {
    std::cerr << "error: cannot open " << o.out << " for writing\n";
    return kUsage;
  }
  file << text;
  return kOk;
}

int cmd_info(const Options& o) {
  const Ring r = make_ring(parse_ring_spec(o.spec));
  print_header(o, "info", std::cout);
  print_info(r, o, std::cout);
  return kOk;
}

int cmd_build(const Options& o, const Ring& r, const std::string& label) {
  const Graph g = select_graph(r, o.graph);
  std::ostringstream out;
  if (o.format == "dot") print_header(o, label, out, "//");
  out << export_graph(g, o.format == "dot" ? GraphFormat::dot : GraphFormat::json);
  return write_output(o, out.str());
}

int cmd_invariants(const Options& o) {
  const Ring r = make_ring(parse_ring_spec(o.spec));
  const json j = invariants_json(select_graph(r, o.graph));
  if (o.json_out) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  print_header(o, "invariants --graph " + o.graph, std::cout);
  for (const auto& [key, value] : j.items())
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  const Ring r = make_ring(parse_ring_spec(o.spec));
  for (const auto& id : o.checks) {
    const auto& reg = check_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const CheckInfo& c) { return c.id == id; }))
      throw UnknownCheck("unknown check id: " + id);
  }
  Analysis analysis(r);
  std::vector<Verdict> verdicts;
  if (o.checks.empty()) {
    verdicts = run_all(analysis);
  } else {
    for (const auto& id : o.checks) verdicts.push_back(run_check(id, analysis));
  }
  bool failed = false;
  for (const auto& v : verdicts) failed = failed || v.status == Status::fail;
  if (o.json_out) {
    json arr = json::array();
    for (const auto& v : verdicts) arr.push_back(to_json(v));
    std::cout << arr.dump(2) << "\n";
  } else {
    print_header(o, "verify", std::cout);
    for (const auto& v : verdicts) {
      std::cout << v.check_id << " " << to_string(v.status);
      if (v.status == Status::skipped) std::cout << " (" << v.reason << ")";
      if (v.status == Status::fail) std::cout << " " << v.counterexample.dump();
      std::cout << "\n";
    }
  }
  return failed ? kFailed : kOk;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

FamilySpec family_of(const Options& o) {
  const int given = !o.zn.empty() + !o.products.empty() + !o.explicit_specs.empty();
  if (given != 1) throw CLI::ValidationError("survey", "exactly one of --zn, --products, --explicit is required");
  if (!o.zn.empty()) {
    const auto dots = o.zn.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--zn", "expected LO..HI");
    try {
      return ZnRange{static_cast<std::uint32_t>(std::stoul(o.zn.substr(0, dots))),
                     static_cast<std::uint32_t>(std::stoul(o.zn.substr(dots + 2)))};
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--zn", "expected LO..HI");
    }
  }
  if (!o.products.empty()) {
    const auto colon = o.products.rfind(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--products", "expected BASES:MAXFACTORS");
    Products p;
    for (const auto& b : split_list(o.products.substr(0, colon), ',')) p.bases.push_back(parse_base_spec(b));
    try {
      p.max_factors = std::stoul(o.products.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--products", "expected BASES:MAXFACTORS");
    }
    return p;
  }
  Explicit e;
  for (const auto& s : split_list(o.explicit_specs, ',')) e.specs.push_back(parse_ring_spec(s));
  return e;
}

int cmd_survey(const Options& o) {
  const SurveyReport report = survey(family_of(o), o.jobs);
  for (const auto& e : report.errors) std::cerr << "skipped " << e.spec << ": " << e.message << "\n";
  for (const auto& row : report.rows)
    if (row.checks_failed) std::cerr << "FAIL " << row.spec << ": " << join(row.failed_ids, " ") << "\n";
  if (o.format == "json") {
    std::cout << survey_json(report).dump(2) << "\n";
  } else {
    print_header(o, "survey", std::cout);
    std::cout << survey_csv(report);
  }
  return report.total_failed() ? kFailed : kOk;
}

int cmd_quotient(const Options& o, bool graph_given) {
  const Ring r = make_ring(parse_ring_spec(o.spec));
  const Ring q = quotient_ring(r, r.radical());
  if (graph_given) return cmd_build(o, q, "quotient --mod-radical");
  print_header(o, "quotient --mod-radical", std::cout);
  print_info(q, o, std::cout);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Co-maximal graphs of finite commutative rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--no-header", o.no_header, "Omit the metadata header line");

  const std::vector<std::string> graphs{"omega", "gamma", "gamma-r"};
  auto spec_arg = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec, "Ring spec, e.g. \"Z2 x GF(4)\"")->required();
  };

  auto* info = app.add_subcommand("info", "Units, radical and maximal ideals");
  spec_arg(info);
  info->add_flag("-v,--verbose", o.verbose, "List members");

  auto* build = app.add_subcommand("build", "Export a graph");
  spec_arg(build);
  build->add_option("--graph", o.graph)->check(CLI::IsMember(graphs))->required();
  build->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));
  build->add_option("--out", o.out, "Output file");

  auto* inv = app.add_subcommand("invariants", "Graph invariant vector");
  spec_arg(inv);
  inv->add_option("--graph", o.graph)->check(CLI::IsMember(graphs));
  inv->add_flag("--json", o.json_out);

  auto* verify = app.add_subcommand("verify", "Run theorem checks");
  spec_arg(verify);
  verify->add_option("--check", o.checks, "Check id (repeatable)");
  verify->add_flag("--json", o.json_out);

  auto* surv = app.add_subcommand("survey", "Invariants and checks over a ring family");
  surv->add_option("--zn", o.zn, "LO..HI");
  surv->add_option("--products", o.products, "BASES:MAXFACTORS, e.g. Z2,Z3,GF(4):3");
  surv->add_option("--explicit", o.explicit_specs, "SPEC,SPEC,...");
  surv->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}))->default_val("csv");
  surv->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  auto* quot = app.add_subcommand("quotient", "Work in R/J(R)");
  spec_arg(quot);
  quot->add_flag("--mod-radical", o.mod_radical)->required();
  quot->add_flag("-v,--verbose", o.verbose, "List members");
  auto* quot_graph = quot->add_option("--graph", o.graph)->check(CLI::IsMember(graphs));
  quot->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));
  quot->add_option("--out", o.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return cmd_info(o);
    if (*build) return cmd_build(o, make_ring(parse_ring_spec(o.spec)), "build --graph " + o.graph);
    if (*inv) return cmd_invariants(o);
    if (*verify) return cmd_verify(o);
    if (*surv) return cmd_survey(o);
    if (*quot) return cmd_quotient(o, quot_graph->count() > 0);
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const UnknownCheck& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
