#include <algorithm>
#include <deque>
#include <limits>

#include "comax/invariants.hpp"

namespace comax {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Eccentricity of `source` by frontier expansion, or nullopt if some vertex
// is unreachable.
std::optional<std::size_t> eccentricity(const Graph& g, std::size_t source) {
  Bitset visited(g.size());
  visited.set(source);
  Bitset frontier = visited;
  std::size_t depth = 0;
  while (true) {
    Bitset next(g.size());
    frontier.for_each([&](std::size_t u) { next |= g.neighbors(u); });
    next.subtract(visited);
    if (next.none()) break;
    ++depth;
    visited |= next;
    frontier = std::move(next);
  }
  if (visited.count() != g.size()) return std::nullopt;
  return depth;
}

}  // namespace

std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.size(), kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](std::size_t w) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  return eccentricity(g, 0).has_value();
}

Length diameter(const Graph& g) {
  if (g.size() < 2) return Length::finite(0);
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    auto e = eccentricity(g, s);
    if (!e) return Length::infinite();
    best = std::max(best, *e);
  }
  return Length::finite(best);
}

Length girth(const Graph& g) {
  const std::size_t n = g.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = g.neighbors(u).find_next(u + 1); v < n; v = g.neighbors(u).find_next(v + 1))
      if (g.neighbors(u).intersects(g.neighbors(v))) return Length::finite(3);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = u + 1; w < n; ++w)
      if (g.neighbors(u).intersection_count(g.neighbors(w)) >= 2) return Length::finite(4);

  // No triangles or 4-cycles: BFS from every root; a non-tree edge closes a
  // cycle of length dist[u] + dist[w] + 1, and the minimum over roots is exact.
  std::size_t best = kUnreached;
  std::vector<std::size_t> dist(n), parent(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[root] = 0;
    parent[root] = kUnreached;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      g.neighbors(u).for_each([&](std::size_t w) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  return best == kUnreached ? Length::infinite() : Length::finite(best);
}

}  // namespace comax
