#pragma once

#include <cstdint>

#include "domkern/instance.hpp"

namespace domkern {

/// Neighborhood classes of a single vertex v:
///   n1: neighbors with a neighbor outside N[v]
///   n2: remaining neighbors adjacent to some n1 vertex
///   n3: everything else in N(v); each has N[u] ⊆ N[v]
struct SinglePartition {
  VertexId v = 0;
  VertexSet n1, n2, n3;
};

/// The same classes for the joint neighborhood N(v,w) = (N(v) ∪ N(w)) \ {v,w},
/// with "outside" meaning outside N[v] ∪ N[w].
struct PairPartition {
  VertexId v = 0;
  VertexId w = 0;
  VertexSet n1, n2, n3;
};

SinglePartition partition_single(const ColoredGraph& g, VertexId v);
PairPartition partition_pair(const ColoredGraph& g, VertexId v, VertexId w);

// If some black vertex has all its possible dominators inside N[v] (a black
// n3 vertex), v is taken into the solution.
bool alber_rule1(Instance& inst, VertexId v);

enum class PairOutcome : std::uint8_t {
  NotApplicable,
  TakeBoth,    // neither v nor w alone dominates the black n3 vertices
  TakeOne,     // exactly one of them does
  Gadget,      // both do: whiten and add two black vertices adjacent to v, w
  GadgetRejected,  // the gadget would not decrease the potential
};

struct PairRuleOptions {
  // Refuse the gadget case unless it strictly decreases
  // #vertices + #edges + #black.
  bool require_potential_drop = true;
};

/// Decides which case of the pair rule applies to (v, w), without mutating.
PairOutcome classify_pair(const ColoredGraph& g, VertexId v, VertexId w,
                          const PairRuleOptions& options = {});

/// Applies the pair rule to (v, w). Returns true iff the instance changed.
bool alber_rule2(Instance& inst, VertexId v, VertexId w,
                 const PairRuleOptions& options = {});

// Vertices u > v with dist(v, u) <= 3, ascending.
VertexSet pair_partners(const ColoredGraph& g, VertexId v);

}  // namespace domkern
