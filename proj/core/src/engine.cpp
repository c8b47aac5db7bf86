#include "domkern/engine.hpp"

#include "domkern/dirty_queue.hpp"
#include "domkern/simple_rules.hpp"

namespace domkern {

namespace {

constexpr std::array<std::string_view, 3> kAlberNames = {"none", "one", "both"};

class Guard {
 public:
  Guard(const Instance& inst, const EngineOptions& options)
      : inst_(inst), options_(options), start_attempts_(inst.stats.attempts) {}

  // Every application must lower the potential by at least one.
  void expect_drop(std::size_t before, std::size_t applications, std::string_view what) const {
    if (!options_.check_potential || applications == 0) return;
    std::size_t after = inst_.graph.potential();
    if (after + applications > before) {
      throw std::logic_error("potential did not decrease after " + std::string(what));
    }
  }

  void check_budget() const {
    if (inst_.stats.attempts - start_attempts_ > options_.max_attempts) {
      throw EngineLimitError("kernelize exceeded " + std::to_string(options_.max_attempts) +
                             " rule-application attempts");
    }
  }

 private:
  const Instance& inst_;
  const EngineOptions& options_;
  std::uint64_t start_attempts_;
};

bool run_single_tier(Instance& inst, JournalTracker& tracker) {
  auto& g = inst.graph;
  tracker.sync(g);
  auto& queue = tracker.lane(0);
  while (!queue.empty(g)) {
    VertexId v = queue.top();
    ++inst.stats.attempts;
    if (alber_rule1(inst, v)) return true;
    queue.pop();
  }
  return false;
}

bool run_pair_tier(Instance& inst, JournalTracker& tracker, const PairRuleOptions& options) {
  auto& g = inst.graph;
  tracker.sync(g);
  auto& queue = tracker.lane(0);
  while (!queue.empty(g)) {
    VertexId v = queue.top();
    for (VertexId w : pair_partners(g, v)) {
      ++inst.stats.attempts;
      if (alber_rule2(inst, v, w, options)) return true;
    }
    queue.pop();
  }
  return false;
}

RuleStats minus(const RuleStats& a, const RuleStats& b) {
  RuleStats out;
  for (std::size_t i = 0; i < kRuleCount; ++i) out.applied[i] = a.applied[i] - b.applied[i];
  out.attempts = a.attempts - b.attempts;
  out.sparsity_passes = a.sparsity_passes - b.sparsity_passes;
  out.scatter_calls = a.scatter_calls - b.scatter_calls;
  out.scatter_invalid = a.scatter_invalid - b.scatter_invalid;
  return out;
}

}  // namespace

std::string ApproachConfig::name() const {
  return std::string(sparsity ? "on." : "off.") +
         std::string(kAlberNames[static_cast<std::size_t>(alber)]);
}

std::optional<ApproachConfig> ApproachConfig::parse(std::string_view name) {
  for (const auto& cfg : all()) {
    if (cfg.name() == name) return cfg;
  }
  return std::nullopt;
}

std::array<ApproachConfig, 6> ApproachConfig::all() {
  return {{{false, AlberLevel::None},
           {false, AlberLevel::One},
           {false, AlberLevel::Both},
           {true, AlberLevel::None},
           {true, AlberLevel::One},
           {true, AlberLevel::Both}}};
}

double KernelReport::remaining_vertex_fraction() const {
  return initial_vertices == 0 ? 0.0
                               : static_cast<double>(final_vertices) /
                                     static_cast<double>(initial_vertices);
}

double KernelReport::remaining_edge_fraction() const {
  return initial_edges == 0 ? 0.0
                            : static_cast<double>(final_edges) /
                                  static_cast<double>(initial_edges);
}

KernelReport kernelize(Instance& inst, const ApproachConfig& config,
                       const EngineOptions& options) {
  auto started = std::chrono::steady_clock::now();
  auto& g = inst.graph;

  KernelReport report;
  report.initial_vertices = g.vertex_count();
  report.initial_edges = g.edge_count();
  const RuleStats baseline = inst.stats;
  const std::size_t baseline_solution = inst.solution.size();

  Guard guard(inst, options);
  SimpleReducer simple(g);
  JournalTracker single(1, 1);
  JournalTracker pair(4, 1, QueueOrder::ById);
  single.reset(g);
  pair.reset(g);

  for (;;) {
    std::size_t before = g.potential();
    std::size_t applied = simple.run(inst);
    guard.expect_drop(before, applied, "simple rules");
    guard.check_budget();

    if (config.alber != AlberLevel::None) {
      before = g.potential();
      bool fired = run_single_tier(inst, single);
      guard.check_budget();
      if (fired) {
        guard.expect_drop(before, 1, "alber_rule1");
        continue;
      }
    }

    if (config.alber == AlberLevel::Both) {
      before = g.potential();
      bool fired = run_pair_tier(inst, pair, options.pair);
      guard.check_budget();
      if (fired) {
        guard.expect_drop(before, 1, "alber_rule2");
        continue;
      }
    }

    if (config.sparsity) {
      before = g.potential();
      std::size_t whitened = sparsity_reduce(inst, options.sparsity);
      if (whitened > 0) {
        guard.expect_drop(before, whitened, "sparsity_reduce");
        continue;
      }
    }
    break;
  }

  report.final_vertices = g.vertex_count();
  report.final_edges = g.edge_count();
  report.solution_size = inst.solution.size() - baseline_solution;
  report.stats = minus(inst.stats, baseline);
  report.fully_solved = g.empty();
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

}  // namespace domkern
