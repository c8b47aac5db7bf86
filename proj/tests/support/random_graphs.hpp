#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "domkern/graph.hpp"
#include "domkern/plangen.hpp"
#include "domkern/random.hpp"

namespace domkern::testing {

inline ColoredGraph random_er(std::size_t n, double p, Rng& rng) {
  ColoredGraph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.chance(p)) g.add_edge(u, v);
    }
  }
  return g;
}

inline void paint_white(ColoredGraph& g, double fraction, Rng& rng) {
  for (VertexId v : g.vertices()) {
    if (rng.chance(fraction)) g.set_color(v, Color::White);
  }
}

// Stacked triangulation thinned to a random edge count; ids are compacted so
// the result has no gaps.
inline ColoredGraph random_small_planar(std::size_t n, Rng& rng) {
  auto full = random_maximal_planar(std::max<std::size_t>(n, 3), rng.next());
  std::size_t m = 1 + rng.below(full.edge_count());
  auto thin = thin_to_edges(full, m, rng.next());
  std::vector<VertexId> id(thin.id_bound(), 0);
  VertexId next = 0;
  for (VertexId v : thin.vertices()) id[v] = next++;
  ColoredGraph g(next);
  for (auto [u, v] : thin.edges()) g.add_edge(id[u], id[v]);
  return g;
}

// The mix used throughout the oracle suites: Erdős–Rényi with density
// 0.1-0.5 or small planar, then up to half the vertices painted white.
inline ColoredGraph random_colored(std::size_t max_n, Rng& rng) {
  ColoredGraph g;
  if (rng.chance(0.5)) {
    std::size_t n = 1 + rng.below(max_n);
    g = random_er(n, 0.1 + 0.4 * rng.unit(), rng);
  } else {
    g = random_small_planar(3 + rng.below(max_n - 2), rng);
  }
  paint_white(g, 0.5 * rng.unit(), rng);
  return g;
}

// Minimum dominating set size by trying every subset, smallest first.
inline std::size_t brute_force_dom(const ColoredGraph& g) {
  auto ids = g.vertices();
  const std::size_t n = ids.size();
  std::vector<std::uint64_t> closed(n, 0);
  std::uint64_t black = 0;
  for (std::size_t i = 0; i < n; ++i) {
    closed[i] |= std::uint64_t{1} << i;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.adjacent(ids[i], ids[j])) closed[i] |= std::uint64_t{1} << j;
    }
    if (g.is_black(ids[i])) black |= std::uint64_t{1} << i;
  }
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) covered |= closed[i];
    }
    if ((covered & black) == black) best = size;
  }
  return best;
}

inline constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

inline std::vector<std::size_t> bfs_distances(const ColoredGraph& g, VertexId source) {
  std::vector<std::size_t> dist(g.id_bound(), kFar);
  std::queue<VertexId> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (VertexId u : g.neighbors(v)) {
      if (dist[u] != kFar) continue;
      dist[u] = dist[v] + 1;
      q.push(u);
    }
  }
  return dist;
}

bool is_planar(const ColoredGraph& g);

inline ColoredGraph path(std::size_t n) {
  ColoredGraph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline ColoredGraph cycle(std::size_t n) {
  ColoredGraph g = path(n);
  g.add_edge(0, static_cast<VertexId>(n - 1));
  return g;
}

// Center 0, leaves 1..leaves.
inline ColoredGraph star(std::size_t leaves) {
  ColoredGraph g(leaves + 1);
  for (VertexId v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace domkern::testing
