#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "comax/bitset.hpp"

namespace comax {

struct VertexLabel {
  enum class Kind { ring_element, ideal, abstract };

  Kind kind = Kind::abstract;
  // Identity of the vertex: element index, sorted ideal member indices, or id.
  std::vector<std::uint32_t> key;
  std::string text;

  static VertexLabel ring_element(std::uint32_t index, std::string text);
  static VertexLabel ideal(std::vector<std::uint32_t> members, std::string text);
  static VertexLabel abstract(std::size_t id);

  friend bool operator==(const VertexLabel& a, const VertexLabel& b) { return a.kind == b.kind && a.key == b.key; }
  friend std::strong_ordering operator<=>(const VertexLabel& a, const VertexLabel& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.key <=> b.key;
  }
};

// Simple undirected graph with bit-set adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<VertexLabel> labels);
  // n vertices labelled abstract(0..n-1), no edges.
  static Graph with_vertices(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const Bitset& neighbors(std::size_t u) const { return rows_[u]; }
  std::size_t degree(std::size_t u) const { return rows_[u].count(); }
  std::size_t edge_count() const;
  // Edges (i, j), i < j, in increasing order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  const VertexLabel& label(std::size_t u) const { return labels_[u]; }
  const std::vector<VertexLabel>& labels() const { return labels_; }
  std::optional<std::size_t> find(const VertexLabel& label) const;

  // Induced subgraph on `vertices`, in the given order.
  Graph induced(std::span<const std::size_t> vertices) const;
  Graph induced(const Bitset& vertices) const;

  Bitset all_vertices() const;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<Bitset> rows_;
};

// Same label set and same edges between equal labels.
bool same_labeled_graph(const Graph& a, const Graph& b);

Graph complete_graph(std::size_t n);
Graph discrete_graph(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);
Graph star_graph(std::size_t leaves);  // K_{1,leaves}
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
// Triangle with one pendant vertex on each corner.
Graph triangle_with_pendants();

// Disjoint union plus every edge between consecutive parts. Labels are kept
// (and the result sorted by label) when they are unique across parts;
// otherwise vertices are relabelled abstract(0..) in part order.
Graph sequential_sum(std::span<const Graph> parts);

// Map from a vertex v of G to a vertex of G. A retraction when idempotent
// and a homomorphism; `representatives` is its image.
struct Retraction {
  std::vector<std::size_t> target;
  std::vector<std::size_t> representatives;
};

// Adjacent vertices map to adjacent (hence distinct) vertices.
bool is_homomorphism(const Graph& g, const Graph& h, std::span<const std::size_t> map);
bool is_retraction(const Graph& g, const Retraction& r);

enum class GraphFormat { dot, json };

// DOT: isolated vertices first, then edges in index order.
// JSON: {"vertices": [...], "edges": [[i, j], ...]} with i < j, sorted.
std::string export_graph(const Graph& g, GraphFormat format);

}  // namespace comax
