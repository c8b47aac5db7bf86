#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "domkern/graph.hpp"

namespace domkern {

// Every reduction the engine can apply, in reporting order.
enum class RuleId : std::uint8_t {
  WwEdge,
  WhiteNoBlack,
  WhiteSubsumed,
  BlackToWhite,
  IsolatedBlack,
  Degree1Black,
  AlberSingle,
  AlberPairTakeBoth,
  AlberPairTakeOne,
  AlberPairGadget,
  SparsityWhitening,
};

inline constexpr std::size_t kRuleCount = 11;

std::string_view rule_name(RuleId id);

struct RuleStats {
  std::array<std::uint64_t, kRuleCount> applied{};
  // Applicability checks, one per (rule, vertex) or (rule, pair) evaluated.
  std::uint64_t attempts = 0;
  std::uint64_t sparsity_passes = 0;
  std::uint64_t scatter_calls = 0;
  std::uint64_t scatter_invalid = 0;

  std::uint64_t& operator[](RuleId id) {
    return applied[static_cast<std::size_t>(id)];
  }
  std::uint64_t operator[](RuleId id) const {
    return applied[static_cast<std::size_t>(id)];
  }
};

/// A colored graph together with the dominators already committed.
///
/// Solution vertices are no longer part of `graph`. For every reduction,
/// dom(original) == solution.size() + dom(graph).
struct Instance {
  Instance() = default;
  explicit Instance(ColoredGraph g) : graph(std::move(g)) {}

  ColoredGraph graph;
  std::vector<VertexId> solution;
  RuleStats stats;
};

// Commits v as a dominator: whitens N(v), then deletes v.
void take_into_solution(Instance& inst, VertexId v);

}  // namespace domkern
