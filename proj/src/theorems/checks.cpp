#include <algorithm>
#include <set>

#include "comax/theorems.hpp"

namespace comax {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kLocalReason = "local ring: Γ is empty";

Verdict begin(const char* id, const Analysis& a) {
  Verdict v;
  v.check_id = id;
  v.ring = a.name();
  return v;
}

Verdict skip(Verdict v, std::string reason) {
  v.status = Status::skipped;
  v.reason = std::move(reason);
  return v;
}

void fail(Verdict& v, json counterexample) {
  v.status = Status::fail;
  v.counterexample = std::move(counterexample);
}

json vertex_names(const Graph& g, const std::vector<std::size_t>& vs) {
  json out = json::array();
  for (std::size_t v : vs) out.push_back(g.label(v).text);
  return out;
}

json length_json(const Length& l) {
  if (l.is_infinite()) return "inf";
  return l.value();
}

// Ring element behind a vertex of Ω or Γ.
Element element_of(const Graph& g, std::size_t v) { return element(g.label(v).key.front()); }

bool z2(const Analysis& a) { return a.form().field && a.ring().size() == 2; }

json form_json(const RingForm& f) {
  json j;
  j["max_ideals"] = f.max_ideals;
  j["local"] = f.local;
  j["field"] = f.field;
  j["field_times_field"] = f.field_times_field;
  j["z2_times_field"] = f.z2_times_field;
  j["z2_cubed"] = f.z2_cubed;
  j["field_times_local"] = f.field_times_local;
  j["local_times_local"] = f.local_times_local;
  return j;
}

Verdict check_l21(Analysis& a) {
  Verdict v = begin("L2.1", a);
  const auto& split = a.split_omega();
  if (!split) return skip(std::move(v), "hypothesis not met: Ω is not split");
  if (!split->independent_maximal) {
    fail(v, {{"reason", "split partition with maximal D not found"}});
    return v;
  }
  const Ring& r = a.ring();
  const Graph& omega = a.omega();
  Bitset k(r.size());
  for (std::size_t u : split->clique) k.set(index_of(element_of(omega, u)));
  v.witness["K"] = vertex_names(omega, split->clique);
  v.witness["D"] = vertex_names(omega, split->independent);

  for (const Ideal& ideal : r.ideals()) {
    if (ideal.size() == r.size()) continue;
    if (ideal.mask.intersection_count(k) > 1) {
      json members = json::array();
      (ideal.mask & k).for_each([&](std::size_t x) { members.push_back(r.element_name(element(x))); });
      fail(v, {{"item", 1}, {"ideal_generator", r.element_name(ideal.generators.front())}, {"ideal_meets_K", members}});
      return v;
    }
  }
  const auto& maximal = r.maximal_ideals();
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      Bitset meet = maximal[i].mask & maximal[j].mask & k;
      meet.reset(0);
      if (meet.any()) {
        fail(v, {{"item", 2},
                 {"maximal_ideals", {i, j}},
                 {"element", r.element_name(element(meet.find_first()))}});
        return v;
      }
    }
  }
  const std::size_t ks = split->clique.size(), m = maximal.size();
  const bool small = z2(a) || a.form().z2_times_z2;
  v.witness["K_size"] = ks;
  v.witness["max_ideals"] = m;
  if (small ? ks != m : ks < m + 1) fail(v, {{"item", 3}, {"K_size", ks}, {"max_ideals", m}, {"exceptional", small}});
  return v;
}

bool omega_split_form(const RingForm& f) { return f.local || f.z2_cubed || f.z2_times_field; }

Verdict check_t23(Analysis& a) {
  Verdict v = begin("T2.3", a);
  const bool split = a.split_omega().has_value();
  const bool form = omega_split_form(a.form());
  v.witness["omega_split"] = split;
  v.witness["form"] = form_json(a.form());
  if (split != form) fail(v, {{"omega_split", split}, {"matches_form", form}});
  return v;
}

Verdict check_c24(Analysis& a) {
  Verdict v = begin("C2.4", a);
  if (a.form().local) return skip(std::move(v), "local ring");
  if (!a.split_omega()) return skip(std::move(v), "hypothesis not met: Ω is not split");
  const Graph& omega = a.omega();
  const std::size_t n = omega.size();
  if (n % 2 == 0 && prime_power(n / 2)) {
    const std::size_t q = n / 2;
    const std::vector<Graph> parts{complete_graph(1), complete_graph(q - 1), star_graph(q - 1)};
    if (isomorphic(omega, sequential_sum(parts), a.limits())) {
      v.witness["shape"] = "K1+K" + std::to_string(q - 1) + "+K1," + std::to_string(q - 1);
      return v;
    }
  }
  if (n == 8) {
    const std::vector<Graph> parts{complete_graph(1), complete_graph(1), triangle_with_pendants()};
    if (isomorphic(omega, sequential_sum(parts), a.limits())) {
      v.witness["shape"] = "K1+K1+H";
      return v;
    }
  }
  fail(v, {{"vertices", n}, {"edges", omega.edge_count()}, {"reason", "matches neither shape"}});
  return v;
}

Verdict check_local(Analysis& a) {
  Verdict v = begin("LOCAL", a);
  if (!a.form().local) return skip(std::move(v), "non-local ring");
  const Ring& r = a.ring();
  const Graph& omega = a.omega();
  const std::size_t u = r.units().size(), m = r.radical().size();
  v.witness["units"] = u;
  v.witness["maximal_ideal"] = m;
  v.witness["field"] = a.form().field;
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = x + 1; y < r.size(); ++y) {
      const bool expected = r.is_unit(element(x)) || r.is_unit(element(y));
      if (omega.adjacent(x, y) != expected) {
        fail(v, {{"pair", {r.element_name(element(x)), r.element_name(element(y))}}, {"adjacent", !expected}});
        return v;
      }
    }
  }
  const std::vector<Graph> parts{complete_graph(u), discrete_graph(m)};
  if (!isomorphic(omega, sequential_sum(parts), a.limits()))
    fail(v, {{"reason", "Ω not isomorphic to K_U + D_m"}});
  return v;
}

Verdict check_t31(Analysis& a) {
  Verdict v = begin("T3.1", a);
  if (a.form().local) return skip(std::move(v), kLocalReason);
  const Ring& r = a.ring();
  const Graph& gamma = a.gamma();
  const Length d = diameter(gamma);
  v.witness["connected"] = is_connected(gamma);
  v.witness["diameter"] = length_json(d);
  if (!(d <= Length::finite(3))) {
    fail(v, {{"diameter", length_json(d)}});
    return v;
  }

  const auto& principal = r.principal_ideals();
  const std::size_t k = principal.size();
  std::vector<char> sum_is_ring(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      sum_is_ring[i * k + j] = sum_is_ring[j * k + i] = sum_contains_one(r, principal[i], principal[j]);

  std::size_t pairs = 0;
  for (std::size_t x = 0; x < r.size(); ++x) {
    const Element ex = element(x);
    const SSignature sx = r.signature(ex);
    for (std::size_t y = x + 1; y < r.size(); ++y) {
      const Element ey = element(y);
      const SSignature sy = r.signature(ey);
      ++pairs;
      const bool product_in_j = r.in_radical(r.mul(ex, ey));
      if (product_in_j != (sx | sy).full()) {
        fail(v, {{"claim", 1}, {"a", r.element_name(ex)}, {"b", r.element_name(ey)}, {"ab_in_J", product_in_j}});
        return v;
      }
      const bool comax = sum_is_ring[r.principal_id(ex) * k + r.principal_id(ey)];
      if (comax != sx.disjoint(sy)) {
        fail(v, {{"claim", 2}, {"a", r.element_name(ex)}, {"b", r.element_name(ey)}, {"comaximal", comax}});
        return v;
      }
    }
  }
  v.witness["pairs_checked"] = pairs;
  return v;
}

Verdict check_t32(Analysis& a) {
  Verdict v = begin("T3.2", a);
  if (a.form().local) return skip(std::move(v), kLocalReason);
  const Ring& r = a.ring();
  const BipartiteClass b = bipartite_class(a.gamma());
  const bool bip = b.kind != BipartiteKind::not_bipartite;
  const bool complete = b.kind == BipartiteKind::complete_bipartite;
  const bool two_max = a.form().max_ideals == 2;
  const bool residue_ff = classify(quotient_ring(r, r.radical())).field_times_field;
  v.witness = {{"bipartite", bip}, {"complete_bipartite", complete}, {"two_maximal_ideals", two_max},
               {"residue_field_times_field", residue_ff}};
  if (complete) v.witness["parts"] = {b.larger_part, b.smaller_part};
  if (!(bip == complete && complete == two_max && two_max == residue_ff)) fail(v, v.witness);
  return v;
}

Verdict check_c33(Analysis& a) {
  Verdict v = begin("C3.3", a);
  if (a.form().local) return skip(std::move(v), kLocalReason);
  const BipartiteClass b = bipartite_class(a.gamma());
  const bool bip = b.kind != BipartiteKind::not_bipartite;
  const bool complete = b.kind == BipartiteKind::complete_bipartite;
  const bool form = a.form().local_times_local;
  v.witness = {{"bipartite", bip}, {"complete_bipartite", complete}, {"local_times_local", form}};
  if (!(bip == complete && complete == form)) fail(v, v.witness);
  return v;
}

Verdict check_o3(Analysis& a) {
  Verdict v = begin("O3", a);
  const Graph& gamma = a.gamma();
  const bool empty = gamma.empty();
  const bool no_edges = gamma.edge_count() == 0;
  v.witness = {{"vertices", gamma.size()}, {"edges", gamma.edge_count()}, {"local", a.form().local}};
  if (!(empty == no_edges && empty == a.form().local)) fail(v, v.witness);
  return v;
}

Verdict check_t34(Analysis& a) {
  Verdict v = begin("T3.4", a);
  const Graph& gamma = a.gamma();
  const StarClass s = star_class(gamma);
  const bool refinement = s.kind != StarKind::not_star;
  const bool star = s.kind == StarKind::star;
  const bool tree = is_tree(gamma);
  const bool form = a.form().z2_times_field;
  v.witness = {{"refinement_of_star", refinement}, {"tree", tree}, {"star", star}, {"z2_times_field", form}};
  if (star) v.witness["leaves"] = s.leaves;
  if (!(refinement == tree && tree == star && star == form)) fail(v, v.witness);
  return v;
}

Verdict check_t36(Analysis& a) {
  Verdict v = begin("T3.6", a);
  const bool omega_split = a.split_omega().has_value();
  const bool gamma_ok = a.gamma().empty() || a.split_gamma().has_value();
  const bool form = omega_split_form(a.form());
  v.witness = {{"omega_split", omega_split}, {"gamma_empty_or_split", gamma_ok}, {"matches_form", form}};
  if (!(omega_split == gamma_ok && gamma_ok == form)) fail(v, v.witness);
  return v;
}

Verdict check_remark36(Analysis& a) {
  Verdict v = begin("REMARK36", a);
  const Graph& gamma = a.gamma();
  if (gamma.empty()) return skip(std::move(v), kLocalReason);
  if (!a.split_gamma()) return skip(std::move(v), "hypothesis not met: Γ is not split");
  const StarClass s = star_class(gamma);
  if (s.kind == StarKind::star && prime_power(s.leaves + 1)) {
    v.witness["shape"] = "K1," + std::to_string(s.leaves);
    return v;
  }
  if (isomorphic(gamma, triangle_with_pendants(), a.limits())) {
    v.witness["shape"] = "H";
    return v;
  }
  fail(v, {{"vertices", gamma.size()}, {"edges", gamma.edge_count()}, {"reason", "split Γ of unlisted shape"}});
  return v;
}

Verdict check_l37(Analysis& a) {
  Verdict v = begin("L3.7", a);
  if (a.form().local) return skip(std::move(v), kLocalReason);
  const Ring& r = a.ring();
  const Graph& g = a.gamma();
  const auto pos = element_positions(g, r.size());
  std::size_t paths = 0, applicable = 0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    const std::vector<std::size_t> nb = g.neighbors(x).indices();
    const Element ex = element_of(g, x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        ++paths;
        const std::size_t pa = nb[i], pb = nb[j];
        const Element c = r.add(r.mul(element_of(g, pa), element_of(g, pb)), ex);
        if (r.is_unit(c)) continue;
        ++applicable;
        const std::ptrdiff_t pc = pos[index_of(c)];
        const bool ok = pc >= 0 && static_cast<std::size_t>(pc) != x && static_cast<std::size_t>(pc) != pa &&
                        static_cast<std::size_t>(pc) != pb && g.adjacent(pc, pa) && g.adjacent(pc, pb) &&
                        g.adjacent(pc, x);
        if (!ok) {
          fail(v, {{"path", {g.label(pa).text, g.label(x).text, g.label(pb).text}},
                   {"ab_plus_x", r.element_name(c)}});
          return v;
        }
      }
    }
  }
  v.witness = {{"paths", paths}, {"paths_with_nonunit_ab_plus_x", applicable}};
  return v;
}

Verdict check_l38(Analysis& a) {
  Verdict v = begin("L3.8", a);
  if (a.form().local) return skip(std::move(v), kLocalReason);
  const Graph& g = a.gamma();
  std::size_t five_only_checked = 0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (on_three_or_four_cycle(g, x)) continue;
    ++five_only_checked;
    if (on_five_cycle(g, x)) {
      fail(v, {{"vertex", g.label(x).text}, {"reason", "on a 5-cycle but on no 3- or 4-cycle"}});
      return v;
    }
  }
  v.witness["vertices_off_short_cycles"] = five_only_checked;
  return v;
}

Verdict check_l39(Analysis& a) {
  Verdict v = begin("L3.9", a);
  if (a.form().local) return skip(std::move(v), kLocalReason);
  const Graph& g = a.gamma();
  const CoreReport report = core_and_ends(g);
  if (!report.has_cycle()) return skip(std::move(v), "hypothesis not met: Γ is acyclic");
  Bitset core(g.size());
  for (std::size_t x : report.core) core.set(x);
  std::size_t middles = 0;
  for (std::size_t x : report.core) {
    if (g.neighbors(x).intersection_count(core) < 2) continue;
    ++middles;
    if (!on_three_or_four_cycle(g, x) && !on_five_cycle(g, x)) {
      fail(v, {{"vertex", g.label(x).text}, {"reason", "middle of a core path on no cycle of length 3 to 5"}});
      return v;
    }
  }
  v.witness["middle_vertices"] = middles;
  return v;
}

Verdict check_t310(Analysis& a) {
  Verdict v = begin("T3.10", a);
  if (a.form().local) return skip(std::move(v), kLocalReason);
  const Graph& g = a.gamma();
  const CoreReport report = core_and_ends(g);
  if (!report.has_cycle()) return skip(std::move(v), "hypothesis not met: Γ is acyclic");
  json uncovered_edges = json::array();
  for (const auto& [x, y] : report.uncovered_edges) uncovered_edges.push_back({g.label(x).text, g.label(y).text});
  v.witness = {{"core_vertices", report.core.size()},
               {"end_vertices", report.end_vertices.size()},
               {"core_edges", report.core_edge_count},
               {"uncovered_edges", uncovered_edges}};
  if (!report.unclassified.empty() || !report.uncovered_vertices.empty())
    fail(v, {{"unclassified", vertex_names(g, report.unclassified)},
             {"uncovered_vertices", vertex_names(g, report.uncovered_vertices)}});
  return v;
}

Verdict check_p42(Analysis& a) {
  Verdict v = begin("P4.2", a);
  const Ring& r = a.ring();
  const Graph& gamma = a.gamma();
  const Graph& gamma_r = a.gamma_r();
  json items = json::object();
  json failures = json::object();
  auto record = [&](const char* item, bool ok, json detail) {
    items[item] = ok ? "pass" : "fail";
    if (!ok) failures[item] = std::move(detail);
  };

  const RetractCheck r1 = retraction_gamma_to_gamma_r(r, gamma, gamma_r);
  record("1", r1.holds(),
         {{"homomorphism", r1.homomorphism},
          {"induced_isomorphic", r1.induced_isomorphic},
          {"identity_on_representatives", r1.identity_on_representatives}});

  std::size_t quotients = 0;
  bool all_retract = true;
  json bad;
  for (const Ideal& ideal : r.ideals()) {
    if (!ideal.is_subset_of(r.radical())) continue;
    ++quotients;
    if (!quotient_retract_check(r, ideal, gamma).holds() && all_retract) {
      all_retract = false;
      bad = {{"ideal_generator", r.element_name(ideal.generators.front())}, {"ideal_size", ideal.size()}};
    }
  }
  record("2", all_retract, bad);
  v.witness["quotients_checked"] = quotients;

  const Length g1 = girth(gamma), g2 = girth(gamma_r);
  record("3", !(g1 == 3) || g2 == 3, {{"girth_gamma", length_json(g1)}, {"girth_gamma_r", length_json(g2)}});

  if (a.form().local) {
    items["4"] = "skipped";
  } else {
    const Length d = diameter(gamma_r);
    record("4", is_connected(gamma_r) && d <= Length::finite(3), {{"diameter_gamma_r", length_json(d)}});
  }

  const Solved &w1 = a.clique_gamma(), &w2 = a.clique_gamma_r(), &c1 = a.chromatic_gamma(), &c2 = a.chromatic_gamma_r();
  if (w1.value && w2.value && c1.value && c2.value) {
    record("5", *w1.value == *w2.value && *c1.value == *c2.value,
           {{"omega", {*w1.value, *w2.value}}, {"chi", {*c1.value, *c2.value}}});
  } else {
    items["5"] = "skipped";
    v.witness["guard_5"] = (w1.value ? (c1.value ? (w2.value ? c2.guard : w2.guard) : c1.guard) : w1.guard);
  }

  if (a.form().local) {
    items["6"] = "skipped";
  } else {
    try {
      const Graph h1 = graph_core_up_to_iso(gamma, a.limits(), RetractOrder::ascending);
      const Graph h2 = graph_core_up_to_iso(gamma, a.limits(), RetractOrder::descending);
      const Graph h3 = graph_core_up_to_iso(gamma_r, a.limits(), RetractOrder::ascending);
      const Graph h4 = graph_core_up_to_iso(gamma_r, a.limits(), RetractOrder::descending);
      const bool same = isomorphic(h1, h2, a.limits()) && isomorphic(h1, h3, a.limits()) &&
                        isomorphic(h1, h4, a.limits());
      v.witness["core_graph"] = {{"vertices", h1.size()}, {"edges", h1.edge_count()}};
      record("6", same, {{"core_sizes", {h1.size(), h2.size(), h3.size(), h4.size()}}});
    } catch (const GuardExceeded& e) {
      items["6"] = "skipped";
      v.witness["guard_6"] = e.what();
    }
  }
  v.witness["items"] = items;
  if (!failures.empty()) fail(v, failures);
  return v;
}

Verdict check_c43(Analysis& a) {
  Verdict v = begin("C4.3", a);
  if (a.form().local) return skip(std::move(v), kLocalReason);
  const std::size_t m = a.form().max_ideals;
  const BipartiteClass b = bipartite_class(a.gamma_r());
  const bool bip = b.kind != BipartiteKind::not_bipartite;
  const bool complete = b.kind == BipartiteKind::complete_bipartite;
  v.witness = {{"bipartite", bip}, {"complete_bipartite", complete}, {"max_ideals", m}};
  const Solved& chi = a.chromatic_gamma_r();
  if (!chi.value) return skip(std::move(v), "guard exceeded: " + chi.guard);
  v.witness["chi_gamma_r"] = *chi.value;
  if (*chi.value < m || !(complete == (m == 2) && bip == complete)) fail(v, v.witness);
  return v;
}

Verdict check_t45(Analysis& a) {
  Verdict v = begin("T4.5", a);
  if (a.form().local) return skip(std::move(v), kLocalReason);
  const Solved* solved[] = {&a.chromatic_gamma(), &a.clique_gamma(), &a.chromatic_gamma_r(), &a.clique_gamma_r()};
  for (const Solved* s : solved)
    if (!s->value) return skip(std::move(v), "guard exceeded: " + s->guard);
  const std::size_t m = a.form().max_ideals;
  v.witness = {{"chi_gamma", *solved[0]->value},
               {"omega_gamma", *solved[1]->value},
               {"max_ideals", m},
               {"chi_gamma_r", *solved[2]->value},
               {"omega_gamma_r", *solved[3]->value}};
  bool ok = true;
  for (const Solved* s : solved) ok = ok && *s->value == m;
  const Solved& chi_omega = a.chromatic_omega();
  const std::size_t expected = m + a.ring().units().size();
  if (chi_omega.value) {
    v.witness["chi_omega"] = *chi_omega.value;
    v.witness["max_plus_units"] = expected;
    ok = ok && *chi_omega.value == expected;
  } else {
    v.witness["chi_omega"] = nullptr;
    v.witness["chi_omega_guard"] = chi_omega.guard;
  }
  if (!ok) fail(v, v.witness);
  return v;
}

Verdict check_p46(Analysis& a) {
  Verdict v = begin("P4.6", a);
  const Ring& r = a.ring();
  const StarClass s = star_class(a.gamma_r());
  const bool refinement = s.kind != StarKind::not_star;
  const bool star = s.kind == StarKind::star;
  const bool form = a.form().field_times_local;
  v.witness = {{"refinement_of_star", refinement}, {"star", star}, {"field_times_local", form}};
  if (!(refinement == star && star == form)) {
    fail(v, v.witness);
    return v;
  }
  if (!form) return v;
  const auto factors = local_factors(r);
  const std::size_t t = factors[0].is_field() ? 1 : 0;
  const Element e = factors[t].idempotent;
  std::set<std::size_t> ideals;
  for (std::size_t y = 0; y < r.size(); ++y) {
    const Element x = r.mul(e, element(y));
    if (r.in_radical(x)) ideals.insert(r.principal_id(x));
  }
  v.witness["leaves"] = s.leaves;
  v.witness["r"] = ideals.size();
  if (s.leaves != ideals.size()) fail(v, {{"leaves", s.leaves}, {"r", ideals.size()}});
  return v;
}

Verdict check_c47(Analysis& a) {
  Verdict v = begin("C4.7", a);
  const Length d = diameter(a.gamma_r());
  const bool one = d == 1;
  v.witness = {{"diameter_gamma_r", length_json(d)}, {"field_times_field", a.form().field_times_field}};
  if (one != a.form().field_times_field) fail(v, v.witness);
  return v;
}

Verdict check_p48(Analysis& a) {
  Verdict v = begin("P4.8", a);
  if (a.form().local) return skip(std::move(v), kLocalReason);
  const Length d = diameter(a.gamma_r());
  const RingForm& f = a.form();
  const bool predicted = f.radical_prime || (f.max_ideals == 2 && !f.field_times_field);
  v.witness = {{"diameter_gamma_r", length_json(d)},
               {"radical_prime", f.radical_prime},
               {"max_ideals", f.max_ideals},
               {"field_times_field", f.field_times_field}};
  if ((d == 2) != predicted) fail(v, v.witness);
  return v;
}

Verdict check_c49(Analysis& a) {
  Verdict v = begin("C4.9", a);
  if (a.form().local) return skip(std::move(v), kLocalReason);
  const Length d1 = diameter(a.gamma()), d2 = diameter(a.gamma_r());
  const bool predicted = !a.form().field_times_field || a.form().z2_times_z2;
  v.witness = {{"diameter_gamma", length_json(d1)},
               {"diameter_gamma_r", length_json(d2)},
               {"field_times_field", a.form().field_times_field},
               {"z2_times_z2", a.form().z2_times_z2}};
  if ((d1 == d2) != predicted) fail(v, v.witness);
  return v;
}

Verdict check_sr1(Analysis& a) {
  Verdict v = begin("SR1", a);
  const StableRange sr = stable_range_one(a.ring());
  if (!sr.holds && sr.violation) {
    fail(v, {{"x", a.ring().element_name(sr.violation->first)}, {"y", a.ring().element_name(sr.violation->second)}});
  } else if (!sr.holds) {
    fail(v, {{"reason", "stable range one fails"}});
  }
  return v;
}

Verdict check_o1(Analysis& a) {
  Verdict v = begin("O1", a);
  v.witness = {{"radical", a.ring().radical().size()}, {"units", a.ring().units().size()}, {"gamma", a.gamma().size()}};
  if (!decompose_omega(a.ring(), a.omega(), a.gamma())) fail(v, {{"reason", "Ω differs from J + U + Γ"}});
  return v;
}

struct Entry {
  CheckInfo info;
  Verdict (*run)(Analysis&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {{"L2.1", "split Ω: proper ideals meet K at most once, |K| bound"}, check_l21},
      {{"T2.3", "Ω split iff local, Z2^3 or Z2 x field"}, check_t23},
      {{"C2.4", "non-local split Ω has one of two shapes"}, check_c24},
      {{"LOCAL", "local non-field: Ω = K_U + D_m"}, check_local},
      {{"T3.1", "Γ connected, diameter <= 3; S-set claims on all pairs"}, check_t31},
      {{"T3.2", "Γ bipartite iff complete bipartite iff |Max| = 2 iff R/J field x field"}, check_t32},
      {{"C3.3", "Γ bipartite iff R is local x local"}, check_c33},
      {{"O3", "Γ edgeless iff empty iff local"}, check_o3},
      {{"T3.4", "Γ star-like iff tree iff star iff Z2 x field"}, check_t34},
      {{"T3.6", "Ω split iff Γ empty or split iff listed forms"}, check_t36},
      {{"REMARK36", "split Γ is a prime-power star or H"}, check_remark36},
      {{"L3.7", "paths a-x-b extend by ab+x"}, check_l37},
      {{"L3.8", "5-cycle vertices lie on 3- or 4-cycles"}, check_l38},
      {{"L3.9", "core path middles lie on 3- to 5-cycles"}, check_l39},
      {{"T3.10", "core is triangles and rectangles; every vertex end or core"}, check_t310},
      {{"P4.2", "Γ_r and Γ(R/I) are retracts; transfers"}, check_p42},
      {{"C4.3", "χ(Γ_r) >= |Max|; Γ_r bipartite iff |Max| = 2"}, check_c43},
      {{"T4.5", "χ = ω = |Max| on Γ and Γ_r; χ(Ω) = |Max| + |U|"}, check_t45},
      {{"P4.6", "Γ_r star-like iff star iff field x local"}, check_p46},
      {{"C4.7", "diam Γ_r = 1 iff field x field"}, check_c47},
      {{"P4.8", "diam Γ_r = 2 classification"}, check_p48},
      {{"C4.9", "diam Γ = diam Γ_r classification"}, check_c49},
      {{"SR1", "stable range one"}, check_sr1},
      {{"O1", "Ω = J + U + Γ"}, check_o1},
  };
  return list;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

namespace {

const Entry& find_entry(const std::string& check_id) {
  for (const auto& e : entries())
    if (e.info.id == check_id) return e;
  throw UnknownCheck("unknown check id: " + check_id);
}

Verdict guarded_run(const Entry& e, Analysis& analysis) {
  try {
    return e.run(analysis);
  } catch (const GuardExceeded& ex) {
    return skip(begin(e.info.id.c_str(), analysis), std::string("guard exceeded: ") + ex.what());
  }
}

}  // namespace

Verdict run_check(const std::string& check_id, Analysis& analysis) {
  return guarded_run(find_entry(check_id), analysis);
}

Verdict run_check(const std::string& check_id, const Ring& r) {
  find_entry(check_id);
  Analysis analysis(r);
  return run_check(check_id, analysis);
}

std::vector<Verdict> run_all(Analysis& analysis) {
  std::vector<Verdict> out;
  for (const auto& e : entries()) out.push_back(guarded_run(e, analysis));
  return out;
}

std::vector<Verdict> run_all(const Ring& r) {
  Analysis analysis(r);
  return run_all(analysis);
}

}  // namespace comax
