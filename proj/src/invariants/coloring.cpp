#include <algorithm>
#include <numeric>

#include "comax/builders.hpp"
#include "comax/invariants.hpp"

namespace comax {

namespace {

TwinCollapse guarded_collapse(const Graph& g, const SolverLimits& limits) {
  TwinCollapse c = collapse_false_twins(g);
  if (c.graph.size() > limits.clique_chromatic)
    throw GuardExceeded("solver guard: " + std::to_string(c.graph.size()) + " collapsed vertices exceed " +
                        std::to_string(limits.clique_chromatic));
  return c;
}

// Branch and bound with greedy-colouring bounds (MCQ style).
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> current;
    expand(current, g_.all_vertices());
    return best_;
  }

 private:
  void expand(std::vector<std::size_t>& current, Bitset candidates) {
    std::vector<std::size_t> order, bound;
    color_sort(candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      Bitset next = candidates & g_.neighbors(v);
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  void color_sort(const Bitset& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    Bitset uncolored = candidates;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset available = uncolored;
      for (std::size_t v = available.find_first(); v < available.size(); v = available.find_next(v + 1)) {
        available.subtract(g_.neighbors(v));
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  const Graph& g_;
  std::vector<std::size_t> best_;
};

// DSATUR branch and bound. The clique is precoloured to fix symmetry.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, std::vector<std::size_t> clique) : g_(g), clique_(std::move(clique)) {}

  Coloring run() {
    const std::size_t n = g_.size();
    if (n == 0) return {};
    best_ = greedy();
    if (best_.colors == clique_.size()) return best_;
    color_.assign(n, kNone);
    for (std::size_t i = 0; i < clique_.size(); ++i) color_[clique_[i]] = i;
    search(clique_.size(), clique_.size());
    return best_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Uncoloured vertex with the most distinct neighbour colours; ties go to
  // higher uncoloured degree, then lower index.
  std::size_t pick(std::vector<std::size_t>& used_colors) const {
    std::size_t best = kNone, best_sat = 0, best_deg = 0;
    for (std::size_t v = 0; v < g_.size(); ++v) {
      if (color_[v] != kNone) continue;
      std::vector<char> seen(g_.size(), 0);
      std::size_t sat = 0, deg = 0;
      g_.neighbors(v).for_each([&](std::size_t w) {
        if (color_[w] == kNone) {
          ++deg;
        } else if (!seen[color_[w]]) {
          seen[color_[w]] = 1;
          ++sat;
        }
      });
      if (best == kNone || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
        used_colors.assign(seen.begin(), seen.end());
      }
    }
    return best;
  }

  void search(std::size_t colored, std::size_t used) {
    if (used >= best_.colors) return;
    if (colored == g_.size()) {
      best_.colors = used;
      best_.color = color_;
      return;
    }
    std::vector<std::size_t> blocked;
    const std::size_t v = pick(blocked);
    for (std::size_t c = 0; c <= used && c + 1 < best_.colors; ++c) {
      if (c < blocked.size() && blocked[c]) continue;
      color_[v] = c;
      search(colored + 1, std::max(used, c + 1));
      color_[v] = kNone;
      if (best_.colors == clique_.size()) return;
    }
  }

  Coloring greedy() {
    color_.assign(g_.size(), kNone);
    Coloring out;
    for (std::size_t step = 0; step < g_.size(); ++step) {
      std::vector<std::size_t> blocked;
      const std::size_t v = pick(blocked);
      std::size_t c = 0;
      while (c < blocked.size() && blocked[c]) ++c;
      color_[v] = c;
      out.colors = std::max(out.colors, c + 1);
    }
    out.color = color_;
    return out;
  }

  const Graph& g_;
  std::vector<std::size_t> clique_;
  std::vector<std::size_t> color_;
  Coloring best_;
};

}  // namespace

std::vector<std::size_t> maximum_clique(const Graph& g, const SolverLimits& limits) {
  if (g.empty()) return {};
  const TwinCollapse c = guarded_collapse(g, limits);
  std::vector<std::size_t> clique = CliqueSearch(c.graph).run();
  for (auto& v : clique) v = c.representative[v];
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::size_t clique_number(const Graph& g, const SolverLimits& limits) { return maximum_clique(g, limits).size(); }

Coloring optimal_coloring(const Graph& g, const SolverLimits& limits) {
  if (g.empty()) return {};
  const TwinCollapse c = guarded_collapse(g, limits);
  const Coloring collapsed = ColoringSearch(c.graph, CliqueSearch(c.graph).run()).run();
  Coloring out;
  out.colors = collapsed.colors;
  out.color.resize(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) out.color[v] = collapsed.color[c.class_of[v]];
  return out;
}

std::size_t chromatic_number(const Graph& g, const SolverLimits& limits) { return optimal_coloring(g, limits).colors; }

}  // namespace comax
