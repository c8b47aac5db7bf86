#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>

#include "domkern/instance.hpp"

namespace domkern {

// Greedy max-coverage: repeatedly take the vertex covering the most
// undominated targets, smallest id on ties. Any live vertex may be picked.
VertexSet greedy_dominating_set(const ColoredGraph& g, std::span<const VertexId> targets);

struct ScatterOptions {
  // A vertex is a hub when its residual degree exceeds
  // max(hub_min_degree, hub_degree_factor * average degree).
  double hub_degree_factor = 2.0;
  std::size_t hub_min_degree = 8;
  // Cap on |deleted|; 0 means sqrt(#candidates).
  std::size_t max_deleted = 0;
};

struct ScatterResult {
  VertexSet scattered;  // F
  VertexSet deleted;    // S
};

/// Large 1-scattered subset of `candidates` after deleting a few hubs.
///
/// Hubs are deleted first, highest residual degree first, while the cap
/// allows. The remaining candidates are then scanned by ascending degree
/// (then id) and kept when no kept vertex is within distance two.
ScatterResult uqw_scatter(const ColoredGraph& g, std::span<const VertexId> candidates,
                          const ScatterOptions& options = {});

// Which vertex the outer loop adds to D' next.
enum class Escalation : std::uint8_t {
  DominatorNeighbors,  // argmax |N(v) ∩ D'|
  CandidateNeighbors,  // argmax |N(v) ∩ (Z \ D)|
};

struct SparsityOptions {
  std::size_t hub_threshold = 7;
  Escalation escalation = Escalation::DominatorNeighbors;
  ScatterOptions scatter;
  // Re-check every scatter result with is_1_scattered on the residual graph.
  bool validate_scatter = true;
};

struct SparsityContext {
  VertexSet d_prime;  // D'
  VertexSet d;        // D = D' ∪ S
  std::size_t hub_threshold = 7;
};

// (N(f) ∩ D, N(N(f)) ∩ D ∩ Z)
using GroupKey = std::pair<VertexSet, VertexSet>;

GroupKey group_key(const ColoredGraph& g, const VertexSet& d, VertexId f);

/// Whitens irrelevant dominatees among `scattered`.
///
/// Members are grouped by GroupKey; groups with no neighbor in D are
/// skipped. For a group B, with M = N[B] \ D and R = N[M] ∩ Z, a greedy
/// dominating set of R of size g allows |B| - g - 1 members (largest ids)
/// to be whitened. All groups are evaluated before any color changes.
/// Throws std::logic_error unless `scattered` is black and 1-scattered in
/// G - D.
std::size_t group_and_reduce(Instance& inst, const SparsityContext& ctx,
                             std::span<const VertexId> scattered);

/// Full search loop: D' from a greedy dominating set of the black vertices,
/// then scatter, group, whiten, and grow D' by the vertex with the most
/// neighbors in D' until that count is at most the hub threshold.
std::size_t sparsity_reduce(Instance& inst, const SparsityOptions& options = {});

}  // namespace domkern
