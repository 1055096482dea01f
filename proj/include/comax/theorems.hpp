#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "comax/builders.hpp"
#include "comax/invariants.hpp"
#include "comax/ring.hpp"

namespace comax {

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct Verdict {
  std::string check_id;
  std::string ring;
  Status status = Status::pass;
  std::string reason;  // skipped only
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  nlohmann::ordered_json counterexample;  // null unless fail
};

nlohmann::ordered_json to_json(const Verdict& v);

// A solver result that may have hit a guard.
struct Solved {
  std::optional<std::size_t> value;
  std::string guard;  // message when value is empty
};

// Everything the checks need about one ring, computed once. Solver results
// are cached on first use; not thread-safe.
class Analysis {
 public:
  explicit Analysis(Ring ring, SolverLimits limits = {});

  const Ring& ring() const { return ring_; }
  const std::string& name() const { return name_; }
  const RingForm& form() const { return form_; }
  const SolverLimits& limits() const { return limits_; }
  const Graph& omega() const { return omega_; }
  const Graph& gamma() const { return gamma_; }
  const Graph& gamma_r() const { return gamma_r_; }

  const Solved& clique_gamma();
  const Solved& chromatic_gamma();
  const Solved& clique_gamma_r();
  const Solved& chromatic_gamma_r();
  const Solved& chromatic_omega();
  const std::optional<SplitPartition>& split_omega();
  const std::optional<SplitPartition>& split_gamma();

 private:
  Ring ring_;
  std::string name_;
  RingForm form_;
  SolverLimits limits_;
  Graph omega_, gamma_, gamma_r_;
  std::optional<Solved> clique_gamma_, chromatic_gamma_, clique_gamma_r_, chromatic_gamma_r_, chromatic_omega_;
  std::optional<std::optional<SplitPartition>> split_omega_, split_gamma_;
};

struct CheckInfo {
  std::string id;
  std::string summary;
};

// Registry order; run_all follows it.
const std::vector<CheckInfo>& check_registry();

// Throws UnknownCheck for an id not in the registry.
Verdict run_check(const std::string& check_id, Analysis& analysis);
Verdict run_check(const std::string& check_id, const Ring& r);
std::vector<Verdict> run_all(Analysis& analysis);
std::vector<Verdict> run_all(const Ring& r);

// ---- survey ----

struct ZnRange {
  std::uint32_t lo = 2;
  std::uint32_t hi = 2;
};

// Every multiset of 1..max_factors bases, in base-list order.
struct Products {
  std::vector<BaseSpec> bases;
  std::size_t max_factors = 1;
  std::size_t size_cap = 4096;
};

struct Explicit {
  std::vector<RingSpec> specs;
};

using FamilySpec = std::variant<ZnRange, Products, Explicit>;

std::vector<RingSpec> expand_family(const FamilySpec& family);

struct SurveyRow {
  std::string spec;
  std::size_t size = 0;
  std::size_t n_units = 0;
  std::size_t n_radical = 0;
  std::size_t n_max_ideals = 0;
  std::size_t gamma_vertices = 0;
  std::size_t gamma_edges = 0;
  Length gamma_diam = Length::finite(0);
  Length gamma_girth = Length::infinite();
  Length gammar_diam = Length::finite(0);
  Length gammar_girth = Length::infinite();
  std::optional<std::size_t> omega_clique;  // ω(Γ), empty past the guard
  std::optional<std::size_t> chi;           // χ(Γ)
  bool is_split_omega = false;
  bool is_bipartite_gamma = false;
  bool is_star_gamma = false;
  std::size_t checks_passed = 0;
  std::size_t checks_failed = 0;
  std::size_t checks_skipped = 0;
  std::vector<std::string> failed_ids;
};

struct SurveyError {
  std::string spec;
  std::string message;
};

struct SurveyReport {
  std::vector<SurveyRow> rows;  // family order
  std::vector<SurveyError> errors;
  std::size_t total_failed() const;
};

SurveyRow survey_row(Analysis& analysis);
SurveyReport survey(const FamilySpec& family, std::size_t jobs = 1, const RingLimits& limits = {},
                    const SolverLimits& solver = {});

extern const std::vector<std::string> kSurveyColumns;
std::string survey_csv(const SurveyReport& report, bool header = true);
nlohmann::ordered_json survey_json(const SurveyReport& report);

}  // namespace comax
