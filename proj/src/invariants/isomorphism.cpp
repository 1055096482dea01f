#include <algorithm>
#include <map>
#include <tuple>

#include "comax/invariants.hpp"
#include "comax/ring.hpp"

namespace comax {

namespace {

// Canonical partition into false-twin classes (size >= 2), true-twin classes
// and singletons. Isomorphisms map classes onto classes of the same kind and
// size, so the quotient with those labels determines the graph.
struct TwinQuotient {
  Graph graph;
  std::vector<std::pair<int, std::size_t>> kind;  // (0 false, 1 true, 2 single; size)
};

TwinQuotient twin_quotient(const Graph& g) {
  const std::size_t n = g.size();
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> open, closed;
  for (std::size_t v = 0; v < n; ++v) open[g.neighbors(v).words()].push_back(v);

  std::vector<std::vector<std::size_t>> classes;
  TwinQuotient q;
  std::vector<std::size_t> rest;
  for (auto& [key, members] : open) {
    if (members.size() >= 2) {
      classes.push_back(members);
      q.kind.emplace_back(0, members.size());
    } else {
      rest.push_back(members.front());
    }
  }
  for (std::size_t v : rest) {
    Bitset nb = g.neighbors(v);
    nb.set(v);
    closed[nb.words()].push_back(v);
  }
  for (auto& [key, members] : closed) {
    classes.push_back(members);
    q.kind.emplace_back(members.size() >= 2 ? 1 : 2, members.size());
  }
  q.graph = Graph::with_vertices(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (g.adjacent(classes[i].front(), classes[j].front())) q.graph.add_edge(i, j);
  return q;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

class IsoSearch {
 public:
  IsoSearch(const TwinQuotient& a, const TwinQuotient& b)
      : a_(a), b_(b), map_(a.graph.size(), kNone), used_(b.graph.size(), 0) {}

  bool run() { return extend(0); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool compatible(std::size_t u, std::size_t c) const {
    if (used_[c] || a_.kind[u] != b_.kind[c] || a_.graph.degree(u) != b_.graph.degree(c)) return false;
    for (std::size_t w = 0; w < a_.graph.size(); ++w)
      if (map_[w] != kNone && a_.graph.adjacent(u, w) != b_.graph.adjacent(c, map_[w])) return false;
    return true;
  }

  bool extend(std::size_t u) {
    if (u == a_.graph.size()) return true;
    for (std::size_t c = 0; c < b_.graph.size(); ++c) {
      if (!compatible(u, c)) continue;
      map_[u] = c;
      used_[c] = 1;
      if (extend(u + 1)) return true;
      map_[u] = kNone;
      used_[c] = 0;
    }
    return false;
  }

  const TwinQuotient& a_;
  const TwinQuotient& b_;
  std::vector<std::size_t> map_;
  std::vector<char> used_;
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b, const SolverLimits& limits) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  const TwinQuotient qa = twin_quotient(a), qb = twin_quotient(b);
  if (qa.graph.size() != qb.graph.size()) return false;
  auto sorted_kinds = [](std::vector<std::pair<int, std::size_t>> k) {
    std::sort(k.begin(), k.end());
    return k;
  };
  if (sorted_kinds(qa.kind) != sorted_kinds(qb.kind)) return false;
  if (qa.graph.size() > limits.isomorphism)
    throw GuardExceeded("isomorphism guard: " + std::to_string(qa.graph.size()) + " twin classes exceed " +
                        std::to_string(limits.isomorphism));
  return IsoSearch(qa, qb).run();
}

}  // namespace comax
