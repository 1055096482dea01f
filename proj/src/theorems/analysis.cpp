#include "comax/theorems.hpp"

namespace comax {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "unknown";
}

nlohmann::ordered_json to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["check_id"] = v.check_id;
  j["ring"] = v.ring;
  j["status"] = to_string(v.status);
  if (v.status == Status::skipped) j["reason"] = v.reason;
  j["witness"] = v.witness;
  if (v.status == Status::fail) j["counterexample"] = v.counterexample;
  return j;
}

namespace {

Graph gamma_from_omega(const Ring& r, const Graph& omega) {
  std::vector<std::size_t> vertices;
  for (Element e : gamma_elements(r)) vertices.push_back(index_of(e));
  return omega.induced(std::span<const std::size_t>(vertices));
}

template <typename F>
const Solved& solve_once(std::optional<Solved>& slot, F&& f) {
  if (!slot) {
    Solved s;
    try {
      s.value = f();
    } catch (const GuardExceeded& e) {
      s.guard = e.what();
    }
    slot = std::move(s);
  }
  return *slot;
}

}  // namespace

Analysis::Analysis(Ring ring, SolverLimits limits)
    : ring_(std::move(ring)),
      name_(ring_.spec() ? to_string(*ring_.spec()) : ring_.name()),
      form_(classify(ring_)),
      limits_(limits),
      omega_(build_omega(ring_)),
      gamma_(gamma_from_omega(ring_, omega_)),
      gamma_r_(build_gamma_r(ring_)) {}

const Solved& Analysis::clique_gamma() {
  return solve_once(clique_gamma_, [&] { return clique_number(gamma_, limits_); });
}

const Solved& Analysis::chromatic_gamma() {
  return solve_once(chromatic_gamma_, [&] { return chromatic_number(gamma_, limits_); });
}

const Solved& Analysis::clique_gamma_r() {
  return solve_once(clique_gamma_r_, [&] { return clique_number(gamma_r_, limits_); });
}

const Solved& Analysis::chromatic_gamma_r() {
  return solve_once(chromatic_gamma_r_, [&] { return chromatic_number(gamma_r_, limits_); });
}

const Solved& Analysis::chromatic_omega() {
  return solve_once(chromatic_omega_, [&] { return chromatic_number(omega_, limits_); });
}

const std::optional<SplitPartition>& Analysis::split_omega() {
  if (!split_omega_) split_omega_ = split_analysis(omega_);
  return *split_omega_;
}

const std::optional<SplitPartition>& Analysis::split_gamma() {
  if (!split_gamma_) split_gamma_ = split_analysis(gamma_);
  return *split_gamma_;
}

}  // namespace comax
