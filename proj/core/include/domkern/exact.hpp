#pragma once

#include <cstddef>
#include <stdexcept>

#include "domkern/graph.hpp"
#include "domkern/instance.hpp"

namespace domkern {

// The instance is larger than the oracle is willing to solve.
class OracleSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactOptions {
  std::size_t max_vertices = 64;
};

struct ExactResult {
  std::size_t size = 0;
  VertexSet witness;
};

/// Minimum set D with every black vertex in N[D].
///
/// Branch and bound: pick the undominated black vertex with the fewest
/// possible dominators and try each of them in ascending id order. A greedy
/// solution seeds the upper bound. Refuses (OracleSizeError) rather than
/// approximating when the graph exceeds options.max_vertices.
ExactResult exact_dom(const ColoredGraph& g, const ExactOptions& options = {});

// exact_dom(before) + |before.solution| == exact_dom(after) + |after.solution|.
bool verify_rule_safety(const Instance& before, const Instance& after,
                        const ExactOptions& options = {});

}  // namespace domkern
