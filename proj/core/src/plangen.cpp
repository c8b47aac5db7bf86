#include "domkern/plangen.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "domkern/random.hpp"

namespace domkern {

std::string GroupSpec::name() const {
  return std::to_string(vertices) + "_" + std::to_string(edges);
}

std::vector<GroupSpec> canonical_groups(std::size_t instances_per_group, std::uint64_t seed) {
  constexpr std::array<std::pair<std::size_t, std::size_t>, 6> kShapes = {{
      {302, 900}, {450, 900}, {600, 900}, {2002, 6000}, {3000, 6000}, {4000, 6000},
  }};
  std::vector<GroupSpec> groups;
  for (auto [n, m] : kShapes) {
    groups.push_back({n, m, instances_per_group, mix_seed(seed, n * 100000 + m)});
  }
  return groups;
}

ColoredGraph random_maximal_planar(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw UsageError("maximal planar graph needs at least 3 vertices");
  Rng rng(seed);
  ColoredGraph g(n, Color::Black);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);

  // The initial triangle bounds two faces.
  std::vector<std::array<VertexId, 3>> faces = {{0, 1, 2}, {0, 1, 2}};
  for (VertexId x = 3; x < n; ++x) {
    auto pick = static_cast<std::size_t>(rng.below(faces.size()));
    auto [a, b, c] = faces[pick];
    g.add_edge(x, a);
    g.add_edge(x, b);
    g.add_edge(x, c);
    faces[pick] = {a, b, x};
    faces.push_back({b, c, x});
    faces.push_back({a, c, x});
  }
  return g;
}

ColoredGraph thin_to_edges(const ColoredGraph& g, std::size_t m, std::uint64_t seed) {
  auto edges = g.edges();
  if (m > edges.size()) {
    throw UsageError("cannot keep " + std::to_string(m) + " of " +
                     std::to_string(edges.size()) + " edges");
  }
  Rng rng(seed);
  // Partial Fisher-Yates: the first m slots become a uniform m-subset.
  for (std::size_t i = 0; i < m; ++i) {
    auto j = i + static_cast<std::size_t>(rng.below(edges.size() - i));
    std::swap(edges[i], edges[j]);
  }
  edges.resize(m);
  std::sort(edges.begin(), edges.end());

  std::vector<bool> used(g.id_bound(), false);
  for (auto [u, v] : edges) used[u] = used[v] = true;

  ColoredGraph out(g.id_bound(), Color::Black);
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    if (!used[v]) out.remove_vertex(v);
  }
  for (auto [u, v] : edges) out.add_edge(u, v);
  return out;
}

std::uint64_t instance_seed(const GroupSpec& spec, std::size_t index) {
  return mix_seed(spec.base_seed, index);
}

ColoredGraph generate_instance(const GroupSpec& spec, std::size_t index) {
  std::uint64_t seed = instance_seed(spec, index);
  ColoredGraph g = random_maximal_planar(spec.vertices, seed);
  return thin_to_edges(g, spec.edges, mix_seed(seed, 0x7417));
}

}  // namespace domkern
