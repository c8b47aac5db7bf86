#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "domkern/alber_rules.hpp"
#include "domkern/instance.hpp"
#include "domkern/sparsity.hpp"

namespace domkern {

enum class AlberLevel : std::uint8_t { None, One, Both };

/// One of the six evaluated rule combinations: off.none ... on.both.
struct ApproachConfig {
  bool sparsity = false;
  AlberLevel alber = AlberLevel::None;

  std::string name() const;
  static std::optional<ApproachConfig> parse(std::string_view name);
  static std::array<ApproachConfig, 6> all();

  friend bool operator==(const ApproachConfig&, const ApproachConfig&) = default;
};

struct EngineOptions {
  SparsityOptions sparsity;
  PairRuleOptions pair;
  // Abort (EngineLimitError) after this many applicability checks.
  std::uint64_t max_attempts = 10'000'000;
  // Verify that the potential strictly drops on every application.
  bool check_potential = true;
};

class EngineLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KernelReport {
  std::size_t initial_vertices = 0;
  std::size_t initial_edges = 0;
  std::size_t final_vertices = 0;
  std::size_t final_edges = 0;
  std::size_t solution_size = 0;
  RuleStats stats;
  bool fully_solved = false;
  std::chrono::nanoseconds elapsed{0};

  // final / initial, 0 for an empty input.
  double remaining_vertex_fraction() const;
  double remaining_edge_fraction() const;
};

/// Reduces `inst` to a fixed point of the enabled rules.
///
/// Tiers, cheapest first; any success in tiers 2-4 returns to tier 1:
///   1. simple rules, exhaustively
///   2. single-vertex Alber rule (alber >= One)
///   3. pair Alber rule (alber == Both), pairs (v, w) with v < w
///   4. sparsity_reduce (sparsity on), if it whitens anything
///
/// Within a tier, vertices are tried in order of current degree, then id.
KernelReport kernelize(Instance& inst, const ApproachConfig& config,
                       const EngineOptions& options = {});

}  // namespace domkern
