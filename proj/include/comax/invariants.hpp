#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comax/graph.hpp"

namespace comax {

// A path or cycle length that may be infinite.
class Length {
 public:
  static Length finite(std::size_t n) { return Length(n); }
  static Length infinite() { return Length(); }

  bool is_infinite() const { return !value_; }
  std::size_t value() const { return *value_; }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const Length&, const Length&) = default;
  friend bool operator==(const Length& a, std::size_t b) { return a.value_ && *a.value_ == b; }
  // Infinity compares above every finite value.
  friend bool operator<(const Length& a, const Length& b) {
    if (!a.value_) return false;
    if (!b.value_) return true;
    return *a.value_ < *b.value_;
  }
  friend bool operator<=(const Length& a, const Length& b) { return !(b < a); }

 private:
  Length() = default;
  explicit Length(std::size_t n) : value_(n) {}
  std::optional<std::size_t> value_;
};

struct SolverLimits {
  std::size_t clique_chromatic = 64;  // vertices after false-twin collapse
  std::size_t retract = 12;           // core-graph and retract searches
  std::size_t isomorphism = 16;       // generic isomorphism, after twin reduction
};

// ---- distances ----

// Unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t source);
bool is_connected(const Graph& g);
// 0 for graphs with fewer than two vertices, infinite if disconnected.
Length diameter(const Graph& g);
// Shortest cycle length, infinite for forests.
Length girth(const Graph& g);

// ---- cliques and colourings ----

// Exact maximum clique; false twins are collapsed first and the solver guard
// applies to the collapsed graph.
std::vector<std::size_t> maximum_clique(const Graph& g, const SolverLimits& limits = {});
std::size_t clique_number(const Graph& g, const SolverLimits& limits = {});

struct Coloring {
  std::size_t colors = 0;
  std::vector<std::size_t> color;  // per vertex
};

// Exact minimum colouring by DSATUR branch and bound on the collapsed graph.
Coloring optimal_coloring(const Graph& g, const SolverLimits& limits = {});
std::size_t chromatic_number(const Graph& g, const SolverLimits& limits = {});

// ---- structure recognition ----

enum class BipartiteKind { not_bipartite, bipartite, complete_bipartite };

struct BipartiteClass {
  BipartiteKind kind = BipartiteKind::not_bipartite;
  std::size_t larger_part = 0;
  std::size_t smaller_part = 0;
};

BipartiteClass bipartite_class(const Graph& g);

struct SplitPartition {
  std::vector<std::size_t> clique;
  std::vector<std::size_t> independent;
  bool independent_maximal = false;
};

// Degree-sequence split recognition, verified on the partition it yields,
// with D then enlarged to a maximal independent set.
std::optional<SplitPartition> split_analysis(const Graph& g);

struct CoreReport {
  std::vector<std::size_t> core;  // vertices lying on some cycle
  std::vector<std::size_t> end_vertices;
  std::vector<std::size_t> uncovered_vertices;  // core vertices on no 3- or 4-cycle
  std::vector<std::pair<std::size_t, std::size_t>> uncovered_edges;  // core-subgraph edges on no 3- or 4-cycle
  std::vector<std::size_t> unclassified;  // neither end vertex nor core vertex
  std::size_t core_edge_count = 0;
  bool has_cycle() const { return !core.empty(); }
};

CoreReport core_and_ends(const Graph& g);

bool on_triangle(const Graph& g, std::size_t v);
bool on_three_or_four_cycle(const Graph& g, std::size_t v);
bool edge_on_three_or_four_cycle(const Graph& g, std::size_t u, std::size_t v);
// Exact test for a cycle of length five through v.
bool on_five_cycle(const Graph& g, std::size_t v);

enum class StarKind { not_star, refinement_of_star, star };

struct StarClass {
  StarKind kind = StarKind::not_star;
  std::size_t leaves = 0;  // set for star
  std::optional<std::size_t> center;
};

StarClass star_class(const Graph& g);
// Nonempty, connected and acyclic.
bool is_tree(const Graph& g);

// ---- homomorphisms, retracts, core graphs ----

// A homomorphism g -> h whose image lies in `allowed` (vertices of h).
std::optional<std::vector<std::size_t>> find_homomorphism(const Graph& g, const Graph& h, const Bitset& allowed);
std::optional<std::vector<std::size_t>> find_homomorphism(const Graph& g, const Graph& h);

// A retraction of g onto a proper induced subgraph, if one exists.
std::optional<Retraction> find_proper_retraction(const Graph& g, const SolverLimits& limits = {});
bool is_core_graph(const Graph& g, const SolverLimits& limits = {});

struct GeneralizedSplit {
  std::vector<std::size_t> core_part;  // induces a core graph
  std::vector<std::size_t> independent;
};

std::optional<GeneralizedSplit> is_generalized_split(const Graph& g, const SolverLimits& limits = {});

enum class RetractOrder { ascending, descending };

// The core graph g is homomorphically equivalent to, found by deleting
// vertices v while g -> g - v exists. The guard applies after false-twin
// collapse.
Graph graph_core_up_to_iso(const Graph& g, const SolverLimits& limits = {},
                           RetractOrder order = RetractOrder::ascending);

bool isomorphic(const Graph& a, const Graph& b, const SolverLimits& limits = {});

}  // namespace comax
