#include <atomic>
#include <sstream>
#include <thread>

#include "comax/theorems.hpp"

namespace comax {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t base_size(const BaseSpec& b) {
  if (const auto* z = std::get_if<Zn>(&b)) return z->n;
  const auto& gf = std::get<GF>(b);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < gf.k; ++i) q *= gf.p;
  return q;
}

void multisets(const Products& p, std::size_t start, std::size_t remaining, std::uint64_t size, RingSpec& current,
               std::vector<RingSpec>& out) {
  if (!current.factors.empty()) out.push_back(current);
  if (remaining == 0) return;
  for (std::size_t i = start; i < p.bases.size(); ++i) {
    const std::uint64_t next = size * base_size(p.bases[i]);
    if (next > p.size_cap) continue;
    current.factors.push_back(p.bases[i]);
    multisets(p, i, remaining - 1, next, current, out);
    current.factors.pop_back();
  }
}

std::string cell(const Length& l) { return l.to_string(); }
std::string cell(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }
std::string cell(bool b) { return b ? "true" : "false"; }
std::string cell(std::size_t v) { return std::to_string(v); }

json value(const Length& l) {
  if (l.is_infinite()) return "inf";
  return l.value();
}

json value(const std::optional<std::size_t>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace

std::vector<RingSpec> expand_family(const FamilySpec& family) {
  std::vector<RingSpec> out;
  if (const auto* z = std::get_if<ZnRange>(&family)) {
    if (z->lo < 2 || z->lo > z->hi) throw RingError("Zn range must satisfy 2 <= lo <= hi");
    for (std::uint32_t n = z->lo; n <= z->hi; ++n) out.push_back(RingSpec{{Zn{n}}});
  } else if (const auto* p = std::get_if<Products>(&family)) {
    RingSpec current;
    multisets(*p, 0, p->max_factors, 1, current, out);
  } else {
    out = std::get<Explicit>(family).specs;
  }
  return out;
}

std::size_t SurveyReport::total_failed() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.checks_failed;
  return n;
}

SurveyRow survey_row(Analysis& a) {
  const Ring& r = a.ring();
  SurveyRow row;
  row.spec = a.name();
  row.size = r.size();
  row.n_units = r.units().size();
  row.n_radical = r.radical().size();
  row.n_max_ideals = r.maximal_ideals().size();
  row.gamma_vertices = a.gamma().size();
  row.gamma_edges = a.gamma().edge_count();
  row.gamma_diam = diameter(a.gamma());
  row.gamma_girth = girth(a.gamma());
  row.gammar_diam = diameter(a.gamma_r());
  row.gammar_girth = girth(a.gamma_r());
  row.omega_clique = a.clique_gamma().value;
  row.chi = a.chromatic_gamma().value;
  row.is_split_omega = a.split_omega().has_value();
  row.is_bipartite_gamma = !a.gamma().empty() && bipartite_class(a.gamma()).kind != BipartiteKind::not_bipartite;
  row.is_star_gamma = star_class(a.gamma()).kind == StarKind::star;
  for (const Verdict& v : run_all(a)) {
    switch (v.status) {
      case Status::pass:
        ++row.checks_passed;
        break;
      case Status::fail:
        ++row.checks_failed;
        row.failed_ids.push_back(v.check_id);
        break;
      case Status::skipped:
        ++row.checks_skipped;
        break;
    }
  }
  return row;
}

SurveyReport survey(const FamilySpec& family, std::size_t jobs, const RingLimits& limits, const SolverLimits& solver) {
  const std::vector<RingSpec> specs = expand_family(family);
  std::vector<std::optional<SurveyRow>> rows(specs.size());
  std::vector<std::optional<SurveyError>> errors(specs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        Analysis a(make_ring(specs[i], limits), solver);
        rows[i] = survey_row(a);
      } catch (const GuardExceeded& e) {
        errors[i] = SurveyError{to_string(specs[i]), e.what()};
      } catch (const std::exception& e) {
        errors[i] = SurveyError{to_string(specs[i]), e.what()};
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, specs.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SurveyReport report;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (rows[i]) report.rows.push_back(std::move(*rows[i]));
    if (errors[i]) report.errors.push_back(std::move(*errors[i]));
  }
  return report;
}

const std::vector<std::string> kSurveyColumns{
    "spec",         "size",         "n_units",     "n_radical",     "n_max_ideals",   "gamma_vertices",
    "gamma_edges",  "gamma_diam",   "gamma_girth", "gammar_diam",   "gammar_girth",   "omega_clique",
    "chi",          "is_split_omega", "is_bipartite_gamma", "is_star_gamma", "checks_failed"};

std::string survey_csv(const SurveyReport& report, bool header) {
  std::ostringstream out;
  if (header) {
    for (std::size_t i = 0; i < kSurveyColumns.size(); ++i) out << (i ? "," : "") << kSurveyColumns[i];
    out << "\n";
  }
  for (const auto& r : report.rows) {
    out << r.spec << ',' << cell(r.size) << ',' << cell(r.n_units) << ',' << cell(r.n_radical) << ','
        << cell(r.n_max_ideals) << ',' << cell(r.gamma_vertices) << ',' << cell(r.gamma_edges) << ','
        << cell(r.gamma_diam) << ',' << cell(r.gamma_girth) << ',' << cell(r.gammar_diam) << ','
        << cell(r.gammar_girth) << ',' << cell(r.omega_clique) << ',' << cell(r.chi) << ','
        << cell(r.is_split_omega) << ',' << cell(r.is_bipartite_gamma) << ',' << cell(r.is_star_gamma) << ','
        << cell(r.checks_failed) << "\n";
  }
  return out.str();
}

json survey_json(const SurveyReport& report) {
  json rows = json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : report.rows) {
    json j;
    j["spec"] = r.spec;
    j["size"] = r.size;
    j["n_units"] = r.n_units;
    j["n_radical"] = r.n_radical;
    j["n_max_ideals"] = r.n_max_ideals;
    j["gamma_vertices"] = r.gamma_vertices;
    j["gamma_edges"] = r.gamma_edges;
    j["gamma_diam"] = value(r.gamma_diam);
    j["gamma_girth"] = value(r.gamma_girth);
    j["gammar_diam"] = value(r.gammar_diam);
    j["gammar_girth"] = value(r.gammar_girth);
    j["omega_clique"] = value(r.omega_clique);
    j["chi"] = value(r.chi);
    j["is_split_omega"] = r.is_split_omega;
    j["is_bipartite_gamma"] = r.is_bipartite_gamma;
    j["is_star_gamma"] = r.is_star_gamma;
    j["checks_failed"] = r.checks_failed;
    if (!r.failed_ids.empty()) j["failed_checks"] = r.failed_ids;
    rows.push_back(std::move(j));
    passed += r.checks_passed;
    failed += r.checks_failed;
    skipped += r.checks_skipped;
  }
  json errors = json::array();
  for (const auto& e : report.errors) errors.push_back({{"spec", e.spec}, {"error", e.message}});
  json out;
  out["rows"] = std::move(rows);
  out["summary"] = {{"rings", report.rows.size()}, {"pass", passed}, {"fail", failed}, {"skipped", skipped}};
  out["errors"] = std::move(errors);
  return out;
}

}  // namespace comax
