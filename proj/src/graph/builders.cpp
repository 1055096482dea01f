#include "comax/builders.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace comax {

namespace {

std::string ideal_text(const Ring& r, const Ideal& ideal) {
  std::string out = "{";
  for (std::size_t i = 0; i < ideal.members.size(); ++i) {
    if (i) out += ",";
    out += r.element_name(ideal.members[i]);
  }
  return out + "}";
}

std::vector<std::uint32_t> member_key(const Ideal& ideal) {
  std::vector<std::uint32_t> key;
  key.reserve(ideal.members.size());
  for (Element e : ideal.members) key.push_back(index_of(e));
  return key;
}

// comax[a * k + b]: P_a + P_b = R over the distinct principal ideals, checked
// against signature disjointness.
std::vector<char> principal_comaximality(const Ring& r) {
  const auto& principal = r.principal_ideals();
  const std::size_t k = principal.size();
  std::vector<SSignature> sig(k);
  for (std::size_t a = 0; a < k; ++a) sig[a] = r.signature(principal[a].generators.front());
  for (std::size_t x = 0; x < r.size(); ++x)
    if (r.signature(element(x)) != sig[r.principal_id(element(x))])
      throw InternalError("elements generating the same principal ideal have different signatures");
  std::vector<char> comax(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      const bool by_sum = sum_contains_one(r, principal[a], principal[b]);
      if (by_sum != sig[a].disjoint(sig[b]))
        throw InternalError("co-maximality criteria disagree in " + r.name());
      comax[a * k + b] = comax[b * k + a] = by_sum;
    }
  }
  return comax;
}

}  // namespace

Graph build_omega(const Ring& r) {
  const std::size_t n = r.size();
  const std::size_t k = r.principal_ideals().size();
  const auto comax = principal_comaximality(r);

  std::vector<Bitset> class_members(k, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) class_members[r.principal_id(element(x))].set(x);
  std::vector<Bitset> class_row(k, Bitset(n));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (comax[a * k + b]) class_row[a] |= class_members[b];

  std::vector<VertexLabel> labels;
  labels.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    labels.push_back(VertexLabel::ring_element(static_cast<std::uint32_t>(x), r.element_name(element(x))));
  Graph g(std::move(labels));
  for (std::size_t x = 0; x < n; ++x) {
    const Bitset& row = class_row[r.principal_id(element(x))];
    for (std::size_t y = row.find_next(x + 1); y < n; y = row.find_next(y + 1)) g.add_edge(x, y);
  }
  return g;
}

std::vector<Element> gamma_elements(const Ring& r) {
  std::vector<Element> out;
  for (std::size_t x = 0; x < r.size(); ++x)
    if (!r.is_unit(element(x)) && !r.in_radical(element(x))) out.push_back(element(x));
  return out;
}

Graph build_gamma(const Ring& r) {
  const Graph omega = build_omega(r);
  std::vector<std::size_t> vertices;
  for (Element e : gamma_elements(r)) vertices.push_back(index_of(e));
  return omega.induced(std::span<const std::size_t>(vertices));
}

Graph build_gamma_r(const Ring& r) {
  const auto& principal = r.principal_ideals();
  const std::size_t k = principal.size();
  const auto comax = principal_comaximality(r);

  std::vector<std::size_t> classes;
  for (Element x : gamma_elements(r)) classes.push_back(r.principal_id(x));
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  std::vector<VertexLabel> labels;
  for (std::size_t c : classes) labels.push_back(VertexLabel::ideal(member_key(principal[c]), ideal_text(r, principal[c])));
  Graph g(std::move(labels));
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (comax[classes[i] * k + classes[j]]) g.add_edge(i, j);
  return g;
}

std::vector<std::ptrdiff_t> element_positions(const Graph& g, std::size_t ring_size) {
  std::vector<std::ptrdiff_t> pos(ring_size, -1);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.label(v).kind == VertexLabel::Kind::ring_element) pos[g.label(v).key.front()] = static_cast<std::ptrdiff_t>(v);
  return pos;
}

std::vector<SSignature> vertex_signatures(const Ring& r, const Graph& g) {
  const auto& maximal = r.maximal_ideals();
  std::vector<SSignature> out;
  out.reserve(g.size());
  for (const auto& label : g.labels()) {
    if (label.kind == VertexLabel::Kind::ring_element) {
      out.push_back(r.signature(element(label.key.front())));
    } else if (label.kind == VertexLabel::Kind::ideal) {
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < maximal.size(); ++i) {
        const bool inside = std::all_of(label.key.begin(), label.key.end(),
                                        [&](std::uint32_t m) { return maximal[i].mask.test(m); });
        if (inside) bits |= std::uint64_t{1} << i;
      }
      out.emplace_back(bits, maximal.size());
    } else {
      throw RingError("vertex_signatures: abstract vertex has no signature");
    }
  }
  return out;
}

bool decompose_omega(const Ring& r) { return decompose_omega(r, build_omega(r), build_gamma(r)); }

bool decompose_omega(const Ring& r, const Graph& omega, const Graph& gamma) {
  std::vector<VertexLabel> radical_labels, unit_labels;
  for (Element e : r.radical().members) radical_labels.push_back(VertexLabel::ring_element(index_of(e), r.element_name(e)));
  for (Element e : r.units()) unit_labels.push_back(VertexLabel::ring_element(index_of(e), r.element_name(e)));
  Graph units(std::move(unit_labels));
  for (std::size_t u = 0; u < units.size(); ++u)
    for (std::size_t v = u + 1; v < units.size(); ++v) units.add_edge(u, v);
  const std::vector<Graph> parts{Graph(std::move(radical_labels)), std::move(units), gamma};
  return same_labeled_graph(omega, sequential_sum(parts));
}

namespace {

TwinCollapse collapse_by_classes(const Graph& g, std::vector<std::size_t> class_of, std::size_t classes) {
  TwinCollapse out;
  out.class_of = std::move(class_of);
  out.class_size.assign(classes, 0);
  out.representative.assign(classes, g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    const std::size_t c = out.class_of[v];
    ++out.class_size[c];
    out.representative[c] = std::min(out.representative[c], v);
  }
  out.graph = g.induced(std::span<const std::size_t>(out.representative));
  return out;
}

}  // namespace

TwinCollapse collapse_false_twins(const Graph& g, std::span<const SSignature> signatures) {
  if (signatures.size() != g.size()) throw InternalError("collapse_false_twins: signature count mismatch");
  // Classes ordered by least member.
  std::vector<std::size_t> class_of(g.size());
  std::map<std::uint64_t, std::size_t> index;
  std::vector<SSignature> class_sig;
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto [it, inserted] = index.emplace(signatures[v].bits(), class_sig.size());
    if (inserted) class_sig.push_back(signatures[v]);
    class_of[v] = it->second;
  }
  const std::size_t k = class_sig.size();
  std::vector<Bitset> members(k, Bitset(g.size()));
  for (std::size_t v = 0; v < g.size(); ++v) members[class_of[v]].set(v);
  for (std::size_t c = 0; c < k; ++c) {
    Bitset expected(g.size());
    for (std::size_t d = 0; d < k; ++d)
      if (d != c && class_sig[c].disjoint(class_sig[d])) expected |= members[d];
    const bool self_disjoint = class_sig[c].disjoint(class_sig[c]);
    if (self_disjoint && members[c].count() > 1)
      throw InternalError("collapse_false_twins: vertices with an empty signature are not false twins");
    members[c].for_each([&](std::size_t v) {
      if (g.neighbors(v) != expected) throw InternalError("collapse_false_twins: adjacency is not signature-determined");
    });
  }
  return collapse_by_classes(g, std::move(class_of), k);
}

TwinCollapse collapse_false_twins(const Graph& g) {
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  std::vector<std::size_t> class_of(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto [it, inserted] = index.emplace(g.neighbors(v), index.size());
    class_of[v] = it->second;
  }
  return collapse_by_classes(g, std::move(class_of), index.size());
}

namespace {

void finish_retract_check(const Graph& source, const Graph& target, RetractCheck& check) {
  const std::size_t n = source.size();
  check.homomorphism = is_homomorphism(source, target, check.to_target);

  std::vector<std::size_t> rep(target.size(), n);
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t t = check.to_target[u];
    if (t < target.size() && rep[t] == n) rep[t] = u;
  }
  const bool surjective = std::none_of(rep.begin(), rep.end(), [&](std::size_t v) { return v == n; });
  check.induced_isomorphic = surjective;
  for (std::size_t i = 0; check.induced_isomorphic && i < rep.size(); ++i)
    for (std::size_t j = i + 1; j < rep.size(); ++j)
      if (source.adjacent(rep[i], rep[j]) != target.adjacent(i, j)) {
        check.induced_isomorphic = false;
        break;
      }
  if (!surjective || !check.homomorphism) return;

  check.retraction.representatives = rep;
  std::sort(check.retraction.representatives.begin(), check.retraction.representatives.end());
  check.retraction.target.resize(n);
  for (std::size_t u = 0; u < n; ++u) check.retraction.target[u] = rep[check.to_target[u]];
  check.identity_on_representatives = is_retraction(source, check.retraction);
}

}  // namespace

RetractCheck retraction_gamma_to_gamma_r(const Ring& r) {
  return retraction_gamma_to_gamma_r(r, build_gamma(r), build_gamma_r(r));
}

RetractCheck retraction_gamma_to_gamma_r(const Ring& r, const Graph& gamma, const Graph& gamma_r) {
  std::map<std::vector<std::uint32_t>, std::size_t> position;
  for (std::size_t v = 0; v < gamma_r.size(); ++v) position[gamma_r.label(v).key] = v;
  RetractCheck check;
  check.to_target.resize(gamma.size(), gamma_r.size());
  for (std::size_t u = 0; u < gamma.size(); ++u) {
    const Element x = element(gamma.label(u).key.front());
    auto it = position.find(member_key(r.principal_ideals()[r.principal_id(x)]));
    if (it != position.end()) check.to_target[u] = it->second;
  }
  finish_retract_check(gamma, gamma_r, check);
  return check;
}

RetractCheck quotient_retract_check(const Ring& r, const Ideal& ideal) {
  return quotient_retract_check(r, ideal, build_gamma(r));
}

RetractCheck quotient_retract_check(const Ring& r, const Ideal& ideal, const Graph& gamma) {
  const Ring q = quotient_ring(r, ideal);
  const Graph gamma_q = build_gamma(q);
  const auto q_pos = element_positions(gamma_q, q.size());
  RetractCheck check;
  check.to_target.resize(gamma.size(), gamma_q.size());
  for (std::size_t u = 0; u < gamma.size(); ++u) {
    const std::ptrdiff_t t = q_pos[index_of(q.coset_of(element(gamma.label(u).key.front())))];
    if (t >= 0) check.to_target[u] = static_cast<std::size_t>(t);
  }
  finish_retract_check(gamma, gamma_q, check);
  if (check.holds()) {
    // Representatives must be the least member of each coset.
    const auto pos = element_positions(gamma, r.size());
    for (std::size_t j = 0; j < gamma_q.size(); ++j) {
      const Element least = q.representative(element(gamma_q.label(j).key.front()));
      const std::ptrdiff_t p = pos[index_of(least)];
      if (p < 0 || check.retraction.target[static_cast<std::size_t>(p)] != static_cast<std::size_t>(p))
        check.identity_on_representatives = false;
    }
  }
  return check;
}

}  // namespace comax
