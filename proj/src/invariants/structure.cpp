#include <algorithm>
#include <deque>
#include <numeric>

#include "comax/invariants.hpp"
#include "comax/ring.hpp"

namespace comax {

BipartiteClass bipartite_class(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> side(n, -1);
  std::size_t part[2] = {0, 0};
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    ++part[0];
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : g.neighbors(u).indices()) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          ++part[side[w]];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return {};
        }
      }
    }
  }
  BipartiteClass out;
  out.kind = BipartiteKind::bipartite;
  out.larger_part = std::max(part[0], part[1]);
  out.smaller_part = std::min(part[0], part[1]);
  if (out.smaller_part > 0 && g.edge_count() == part[0] * part[1]) out.kind = BipartiteKind::complete_bipartite;
  return out;
}

std::optional<SplitPartition> split_analysis(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });

  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (g.degree(order[i]) + 1 >= i + 1) m = i + 1;
  std::size_t head = 0, tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
  if (head != m * (m == 0 ? 0 : m - 1) + tail) return std::nullopt;

  Bitset clique(n), independent(n);
  for (std::size_t i = 0; i < n; ++i) (i < m ? clique : independent).set(order[i]);
  bool valid = true;
  clique.for_each([&](std::size_t v) {
    Bitset others = clique;
    others.reset(v);
    if (!others.is_subset_of(g.neighbors(v))) valid = false;
  });
  independent.for_each([&](std::size_t v) {
    if (g.neighbors(v).intersects(independent)) valid = false;
  });
  if (!valid) throw InternalError("split degree criterion accepted a partition that is not split");

  for (std::size_t v = clique.find_first(); v < n; v = clique.find_next(v + 1)) {
    if (!g.neighbors(v).intersects(independent)) {
      clique.reset(v);
      independent.set(v);
      break;
    }
  }
  SplitPartition out;
  out.clique = clique.indices();
  out.independent = independent.indices();
  out.independent_maximal = true;
  for (std::size_t v : out.clique)
    if (!g.neighbors(v).intersects(independent)) out.independent_maximal = false;
  return out;
}

bool on_triangle(const Graph& g, std::size_t v) {
  const Bitset& nv = g.neighbors(v);
  for (std::size_t u = nv.find_first(); u < g.size(); u = nv.find_next(u + 1))
    if (g.neighbors(u).intersects(nv)) return true;
  return false;
}

bool on_three_or_four_cycle(const Graph& g, std::size_t v) {
  if (on_triangle(g, v)) return true;
  for (std::size_t w = 0; w < g.size(); ++w)
    if (w != v && g.neighbors(v).intersection_count(g.neighbors(w)) >= 2) return true;
  return false;
}

bool edge_on_three_or_four_cycle(const Graph& g, std::size_t u, std::size_t v) {
  if (g.neighbors(u).intersects(g.neighbors(v))) return true;
  bool found = false;
  g.neighbors(v).for_each([&](std::size_t a) {
    if (found || a == u) return;
    Bitset b = g.neighbors(a) & g.neighbors(u);
    b.reset(v);
    if (b.any()) found = true;
  });
  return found;
}

bool on_five_cycle(const Graph& g, std::size_t v) {
  const std::vector<std::size_t> nv = g.neighbors(v).indices();
  for (std::size_t i = 0; i < nv.size(); ++i) {
    for (std::size_t j = i + 1; j < nv.size(); ++j) {
      const std::size_t a = nv[i], d = nv[j];
      Bitset bs = g.neighbors(a), cs = g.neighbors(d);
      bs.reset(v);
      bs.reset(d);
      cs.reset(v);
      cs.reset(a);
      for (std::size_t b = bs.find_first(); b < g.size(); b = bs.find_next(b + 1))
        if (g.neighbors(b).intersects(cs)) return true;
    }
  }
  return false;
}

namespace {

// Vertices incident to an edge that is not a bridge, by iterative Tarjan.
Bitset cycle_vertices(const Graph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t v = 0; v < n; ++v) adj[v] = g.neighbors(v).indices();
  std::vector<std::size_t> disc(n, kNone), low(n, 0), parent(n, kNone), next(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> bridges;
  std::size_t timer = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (disc[s] != kNone) continue;
    std::vector<std::size_t> stack{s};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      if (next[u] < adj[u].size()) {
        const std::size_t w = adj[u][next[u]++];
        if (disc[w] == kNone) {
          parent[w] = u;
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (w != parent[u]) {
          low[u] = std::min(low[u], disc[w]);
        }
      } else {
        stack.pop_back();
        if (parent[u] != kNone) {
          const std::size_t p = parent[u];
          low[p] = std::min(low[p], low[u]);
          if (low[u] > disc[p]) bridges.emplace_back(std::min(p, u), std::max(p, u));
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  Bitset out(n);
  for (const auto& e : g.edges())
    if (!std::binary_search(bridges.begin(), bridges.end(), e)) {
      out.set(e.first);
      out.set(e.second);
    }
  return out;
}

}  // namespace

CoreReport core_and_ends(const Graph& g) {
  CoreReport report;
  const Bitset core = cycle_vertices(g);
  report.core = core.indices();
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) == 1) report.end_vertices.push_back(v);
    else if (!core.test(v)) report.unclassified.push_back(v);
  }
  const Graph sub = g.induced(report.core);
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (!on_three_or_four_cycle(sub, i)) report.uncovered_vertices.push_back(report.core[i]);
  for (const auto& [i, j] : sub.edges()) {
    ++report.core_edge_count;
    if (!edge_on_three_or_four_cycle(sub, i, j)) report.uncovered_edges.emplace_back(report.core[i], report.core[j]);
  }
  return report;
}

StarClass star_class(const Graph& g) {
  const std::size_t n = g.size();
  if (n < 2) return {};
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) != n - 1) continue;
    StarClass out;
    out.center = v;
    if (g.edge_count() == n - 1) {
      out.kind = StarKind::star;
      out.leaves = n - 1;
    } else {
      out.kind = StarKind::refinement_of_star;
    }
    return out;
  }
  return {};
}

bool is_tree(const Graph& g) { return !g.empty() && g.edge_count() + 1 == g.size() && is_connected(g); }

}  // namespace comax
