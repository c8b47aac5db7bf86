#include "domkern/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace domkern {

namespace {

using Mask = std::uint64_t;

class BranchAndBound {
 public:
  BranchAndBound(std::vector<Mask> closed, Mask targets)
      : closed_(std::move(closed)), targets_(targets) {}

  std::vector<std::size_t> solve() {
    best_ = greedy();
    chosen_.clear();
    search(targets_);
    return best_;
  }

 private:
  std::vector<std::size_t> greedy() const {
    std::vector<std::size_t> picked;
    Mask open = targets_;
    while (open != 0) {
      std::size_t arg = 0;
      int gain = -1;
      for (std::size_t i = 0; i < closed_.size(); ++i) {
        int c = std::popcount(closed_[i] & open);
        if (c > gain) {
          gain = c;
          arg = i;
        }
      }
      picked.push_back(arg);
      open &= ~closed_[arg];
    }
    return picked;
  }

  void search(Mask open) {
    if (open == 0) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    int max_cover = 0;
    for (Mask m : closed_) max_cover = std::max(max_cover, std::popcount(m & open));
    std::size_t lower =
        (static_cast<std::size_t>(std::popcount(open)) + max_cover - 1) / max_cover;
    if (chosen_.size() + lower >= best_.size()) return;

    // Undominated vertex with the fewest dominators; lowest index on ties.
    std::size_t pivot = 0;
    int fewest = 65;
    for (Mask rest = open; rest != 0; rest &= rest - 1) {
      auto b = static_cast<std::size_t>(std::countr_zero(rest));
      int options = std::popcount(closed_[b]);
      if (options < fewest) {
        fewest = options;
        pivot = b;
      }
    }
    for (Mask rest = closed_[pivot]; rest != 0; rest &= rest - 1) {
      auto c = static_cast<std::size_t>(std::countr_zero(rest));
      chosen_.push_back(c);
      search(open & ~closed_[c]);
      chosen_.pop_back();
      if (chosen_.size() + 1 >= best_.size()) return;
    }
  }

  std::vector<Mask> closed_;
  Mask targets_;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

ExactResult exact_dom(const ColoredGraph& g, const ExactOptions& options) {
  std::size_t limit = std::min<std::size_t>(options.max_vertices, 64);
  if (g.vertex_count() > limit) {
    throw OracleSizeError("exact oracle refuses " + std::to_string(g.vertex_count()) +
                          " vertices (limit " + std::to_string(limit) + ")");
  }

  std::vector<VertexId> ids = g.vertices();
  std::vector<std::size_t> index(g.id_bound(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;

  std::vector<Mask> closed(ids.size(), 0);
  Mask targets = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    closed[i] |= Mask{1} << i;
    for (VertexId u : g.neighbors(ids[i])) closed[i] |= Mask{1} << index[u];
    if (g.is_black(ids[i])) targets |= Mask{1} << i;
  }

  BranchAndBound solver(std::move(closed), targets);
  ExactResult result;
  for (std::size_t i : solver.solve()) result.witness.push_back(ids[i]);
  std::sort(result.witness.begin(), result.witness.end());
  result.size = result.witness.size();
  return result;
}

bool verify_rule_safety(const Instance& before, const Instance& after,
                        const ExactOptions& options) {
  return exact_dom(before.graph, options).size + before.solution.size() ==
         exact_dom(after.graph, options).size + after.solution.size();
}

}  // namespace domkern
