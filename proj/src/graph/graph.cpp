#include "comax/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace comax {

VertexLabel VertexLabel::ring_element(std::uint32_t index, std::string text) {
  return {Kind::ring_element, {index}, std::move(text)};
}

VertexLabel VertexLabel::ideal(std::vector<std::uint32_t> members, std::string text) {
  return {Kind::ideal, std::move(members), std::move(text)};
}

VertexLabel VertexLabel::abstract(std::size_t id) {
  return {Kind::abstract, {static_cast<std::uint32_t>(id)}, "v" + std::to_string(id)};
}

Graph::Graph(std::vector<VertexLabel> labels) : labels_(std::move(labels)) {
  rows_.assign(labels_.size(), Bitset(labels_.size()));
}

Graph Graph::with_vertices(std::size_t n) {
  std::vector<VertexLabel> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(VertexLabel::abstract(i));
  return Graph(std::move(labels));
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
  rows_[u].set(v);
  rows_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.count();
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = rows_[u].find_next(u + 1); v < size(); v = rows_[u].find_next(v + 1)) out.emplace_back(u, v);
  return out;
}

std::optional<std::size_t> Graph::find(const VertexLabel& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  std::vector<VertexLabel> labels;
  labels.reserve(vertices.size());
  for (std::size_t v : vertices) labels.push_back(labels_[v]);
  Graph out(std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

Graph Graph::induced(const Bitset& vertices) const {
  const auto list = vertices.indices();
  return induced(std::span<const std::size_t>(list));
}

Bitset Graph::all_vertices() const {
  Bitset all(size());
  all.set_all();
  return all;
}

bool same_labeled_graph(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> to_b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto j = b.find(a.label(i));
    if (!j) return false;
    to_b[i] = *j;
  }
  for (auto [u, v] : a.edges())
    if (!b.adjacent(to_b[u], to_b[v])) return false;
  return true;
}

Graph complete_graph(std::size_t n) {
  Graph g = Graph::with_vertices(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph discrete_graph(std::size_t n) { return Graph::with_vertices(n); }

Graph complete_bipartite(std::size_t m, std::size_t n) {
  Graph g = Graph::with_vertices(m + n);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = m; v < m + n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

Graph cycle_graph(std::size_t n) {
  Graph g = Graph::with_vertices(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g = Graph::with_vertices(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph triangle_with_pendants() {
  Graph g = Graph::with_vertices(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  return g;
}

Graph sequential_sum(std::span<const Graph> parts) {
  if (parts.empty()) throw std::invalid_argument("sequential_sum: no parts");
  std::vector<VertexLabel> labels;
  std::vector<std::size_t> offset;
  for (const auto& part : parts) {
    offset.push_back(labels.size());
    labels.insert(labels.end(), part.labels().begin(), part.labels().end());
  }
  const std::size_t n = labels.size();
  const bool unique = std::set<VertexLabel>(labels.begin(), labels.end()).size() == n;

  // position[i]: index of concatenated vertex i in the output.
  std::vector<std::size_t> position(n);
  std::iota(position.begin(), position.end(), 0);
  std::vector<VertexLabel> out_labels(n);
  if (unique) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    for (std::size_t k = 0; k < n; ++k) {
      position[order[k]] = k;
      out_labels[k] = labels[order[k]];
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) out_labels[i] = VertexLabel::abstract(i);
  }

  Graph out(std::move(out_labels));
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (auto [u, v] : parts[p].edges()) out.add_edge(position[offset[p] + u], position[offset[p] + v]);
    if (p + 1 == parts.size()) continue;
    for (std::size_t u = 0; u < parts[p].size(); ++u)
      for (std::size_t v = 0; v < parts[p + 1].size(); ++v)
        out.add_edge(position[offset[p] + u], position[offset[p + 1] + v]);
  }
  return out;
}

bool is_homomorphism(const Graph& g, const Graph& h, std::span<const std::size_t> map) {
  if (map.size() != g.size()) return false;
  for (std::size_t m : map)
    if (m >= h.size()) return false;
  for (auto [u, v] : g.edges()) {
    if (map[u] == map[v] || !h.adjacent(map[u], map[v])) return false;
  }
  return true;
}

bool is_retraction(const Graph& g, const Retraction& r) {
  if (!is_homomorphism(g, g, r.target)) return false;
  std::vector<char> is_rep(g.size(), 0);
  for (std::size_t v : r.representatives) is_rep[v] = 1;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!is_rep[r.target[v]]) return false;
    if (is_rep[v] && r.target[v] != v) return false;
  }
  return true;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::json) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::json::array();
    for (const auto& l : g.labels()) doc["vertices"].push_back(l.text);
    doc["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  out << "graph {\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.degree(v) == 0) out << "  " << quoted(g.label(v).text) << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << quoted(g.label(u).text) << " -- " << quoted(g.label(v).text) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace comax
