#include <algorithm>
#include <numeric>

#include "comax/builders.hpp"
#include "comax/invariants.hpp"

namespace comax {

namespace {

constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

void check_guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit)
    throw GuardExceeded(std::string(what) + " guard: " + std::to_string(n) + " vertices exceed " +
                        std::to_string(limit));
}

// Source order in which each vertex has as many already-placed neighbours as
// possible, so candidate sets shrink early.
std::vector<std::size_t> search_order(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> order;
  std::vector<std::size_t> placed_neighbors(n, 0);
  std::vector<char> placed(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = kUnmapped;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == kUnmapped || placed_neighbors[v] > placed_neighbors[best] ||
          (placed_neighbors[v] == placed_neighbors[best] && g.degree(v) > g.degree(best)))
        best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    g.neighbors(best).for_each([&](std::size_t w) { ++placed_neighbors[w]; });
  }
  return order;
}

class HomSearch {
 public:
  HomSearch(const Graph& g, const Graph& h, const Bitset& allowed)
      : g_(g), h_(h), allowed_(allowed), order_(search_order(g)), map_(g.size(), kUnmapped) {}

  std::optional<std::vector<std::size_t>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    Bitset candidates = allowed_;
    g_.neighbors(v).for_each([&](std::size_t u) {
      if (map_[u] != kUnmapped) candidates &= h_.neighbors(map_[u]);
    });
    for (std::size_t c = candidates.find_first(); c < h_.size(); c = candidates.find_next(c + 1)) {
      map_[v] = c;
      if (extend(depth + 1)) return true;
    }
    map_[v] = kUnmapped;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  const Bitset& allowed_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
};

std::vector<std::size_t> compose(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
  std::vector<std::size_t> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) out[v] = f[g[v]];
  return out;
}

// Some vertex v with g -> g - v, as a map into g.
std::optional<std::vector<std::size_t>> shrinking_endomorphism(const Graph& g) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    Bitset allowed = g.all_vertices();
    allowed.reset(v);
    if (auto f = find_homomorphism(g, g, allowed)) return f;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_homomorphism(const Graph& g, const Graph& h, const Bitset& allowed) {
  if (g.empty()) return std::vector<std::size_t>{};
  return HomSearch(g, h, allowed).run();
}

std::optional<std::vector<std::size_t>> find_homomorphism(const Graph& g, const Graph& h) {
  return find_homomorphism(g, h, h.all_vertices());
}

std::optional<Retraction> find_proper_retraction(const Graph& g, const SolverLimits& limits) {
  check_guard(g.size(), limits.retract, "retract");
  auto f = shrinking_endomorphism(g);
  if (!f) return std::nullopt;
  // Some power of a finite self-map is idempotent.
  std::vector<std::size_t> power = *f;
  while (compose(power, power) != power) power = compose(*f, power);
  Retraction r;
  r.target = power;
  r.representatives = power;
  std::sort(r.representatives.begin(), r.representatives.end());
  r.representatives.erase(std::unique(r.representatives.begin(), r.representatives.end()), r.representatives.end());
  return r;
}

bool is_core_graph(const Graph& g, const SolverLimits& limits) {
  // Folding a false twin onto its partner is a proper retraction.
  if (collapse_false_twins(g).graph.size() != g.size()) return false;
  check_guard(g.size(), limits.retract, "core graph");
  return !shrinking_endomorphism(g).has_value();
}

std::optional<GeneralizedSplit> is_generalized_split(const Graph& g, const SolverLimits& limits) {
  const std::size_t n = g.size();
  if (n == 0) return GeneralizedSplit{};
  check_guard(n, limits.retract, "generalized split");
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    Bitset d(n);
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1U) d.set(v);
    bool independent = true;
    d.for_each([&](std::size_t v) {
      if (g.neighbors(v).intersects(d)) independent = false;
    });
    if (!independent) continue;
    const Bitset k = d.complement();
    if (is_core_graph(g.induced(k), limits)) return GeneralizedSplit{k.indices(), d.indices()};
  }
  return std::nullopt;
}

Graph graph_core_up_to_iso(const Graph& g, const SolverLimits& limits, RetractOrder order) {
  if (g.empty()) return g;
  const TwinCollapse c = collapse_false_twins(g);
  check_guard(c.graph.size(), limits.retract, "graph core");
  const Graph& h = c.graph;
  std::vector<std::size_t> sequence(h.size());
  std::iota(sequence.begin(), sequence.end(), 0);
  if (order == RetractOrder::descending) std::reverse(sequence.begin(), sequence.end());

  Bitset alive = h.all_vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v : sequence) {
      if (!alive.test(v)) continue;
      Bitset allowed = alive;
      allowed.reset(v);
      if (find_homomorphism(h.induced(alive), h, allowed)) {
        alive = std::move(allowed);
        changed = true;
      }
    }
  }
  std::vector<std::size_t> keep;
  alive.for_each([&](std::size_t v) { keep.push_back(c.representative[v]); });
  return g.induced(keep);
}

}  // namespace comax
