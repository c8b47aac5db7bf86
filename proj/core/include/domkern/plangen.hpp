#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "domkern/graph.hpp"

namespace domkern {

struct GroupSpec {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t instances = 25;
  std::uint64_t base_seed = 0;

  // "302_900"
  std::string name() const;
};

// The six benchmark groups, (302, 900) through (4000, 6000).
std::vector<GroupSpec> canonical_groups(std::size_t instances_per_group = 25,
                                        std::uint64_t seed = 1);

/// Random stacked triangulation on n >= 3 vertices (3n - 6 edges).
///
/// Starts from a triangle with its inner and outer face and repeatedly
/// splits a uniformly chosen face with a new vertex joined to its corners.
/// All vertices are black.
ColoredGraph random_maximal_planar(std::size_t n, std::uint64_t seed);

// Keeps a uniformly random m-subset of the edges, then drops isolated
// vertices. Ids of the surviving vertices are unchanged.
ColoredGraph thin_to_edges(const ColoredGraph& g, std::size_t m, std::uint64_t seed);

std::uint64_t instance_seed(const GroupSpec& spec, std::size_t index);

// Maximal planar graph on spec.vertices, thinned to spec.edges.
ColoredGraph generate_instance(const GroupSpec& spec, std::size_t index);

}  // namespace domkern
