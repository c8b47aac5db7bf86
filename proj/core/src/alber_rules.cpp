#include "domkern/alber_rules.hpp"

#include <algorithm>
#include <iterator>

namespace domkern {

namespace {

// Epoch-stamped membership marks, reused across calls on one thread.
class Marks {
 public:
  void begin(std::size_t bound) {
    if (stamp_.size() < bound) stamp_.resize(bound, 0);
    epoch_ += 2;
    if (epoch_ < 2) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 2;
    }
  }
  // Two independent flags per epoch: "region" and "first class".
  void mark_region(VertexId v) { stamp_[v] = std::max(stamp_[v], epoch_); }
  bool in_region(VertexId v) const { return stamp_[v] >= epoch_; }
  void mark_first(VertexId v) { stamp_[v] = epoch_ + 1; }
  bool in_first(VertexId v) const { return stamp_[v] == epoch_ + 1; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

Marks& marks() {
  thread_local Marks m;
  return m;
}

struct Classes {
  VertexSet n1, n2, n3;
};

// Classifies (N(v) ∪ N(w)) \ {v, w}; pass w == v for the single-vertex case.
Classes classify_neighborhood(const ColoredGraph& g, VertexId v, VertexId w) {
  auto nv = g.neighbors(v);
  auto nw = g.neighbors(w);

  VertexSet members;
  members.reserve(nv.size() + nw.size());
  std::set_union(nv.begin(), nv.end(), nw.begin(), nw.end(),
                 std::back_inserter(members));
  std::erase_if(members, [&](VertexId u) { return u == v || u == w; });

  auto& m = marks();
  m.begin(g.id_bound());
  m.mark_region(v);
  m.mark_region(w);
  for (VertexId u : members) m.mark_region(u);

  Classes out;
  for (VertexId u : members) {
    for (VertexId x : g.neighbors(u)) {
      if (!m.in_region(x)) {
        out.n1.push_back(u);
        break;
      }
    }
  }
  for (VertexId u : out.n1) m.mark_first(u);

  for (VertexId u : members) {
    if (m.in_first(u)) continue;
    bool touches_first = std::any_of(g.neighbors(u).begin(), g.neighbors(u).end(),
                                     [&](VertexId x) { return m.in_first(x); });
    (touches_first ? out.n2 : out.n3).push_back(u);
  }
  return out;
}

bool dominates_all(const ColoredGraph& g, VertexId x, const VertexSet& targets) {
  return std::all_of(targets.begin(), targets.end(), [&](VertexId b) {
    return b == x || g.adjacent(x, b);
  });
}

}  // namespace

SinglePartition partition_single(const ColoredGraph& g, VertexId v) {
  if (!g.contains(v)) throw UsageError("unknown vertex id " + std::to_string(v));
  auto c = classify_neighborhood(g, v, v);
  return {v, std::move(c.n1), std::move(c.n2), std::move(c.n3)};
}

PairPartition partition_pair(const ColoredGraph& g, VertexId v, VertexId w) {
  if (!g.contains(v)) throw UsageError("unknown vertex id " + std::to_string(v));
  if (!g.contains(w)) throw UsageError("unknown vertex id " + std::to_string(w));
  if (v == w) throw UsageError("pair rule needs two distinct vertices");
  auto c = classify_neighborhood(g, v, w);
  return {v, w, std::move(c.n1), std::move(c.n2), std::move(c.n3)};
}

bool alber_rule1(Instance& inst, VertexId v) {
  const auto& g = inst.graph;
  if (!g.contains(v)) throw UsageError("unknown vertex id " + std::to_string(v));
  auto c = classify_neighborhood(g, v, v);
  bool forced = std::any_of(c.n3.begin(), c.n3.end(),
                            [&](VertexId u) { return g.is_black(u); });
  if (!forced) return false;
  take_into_solution(inst, v);
  ++inst.stats[RuleId::AlberSingle];
  return true;
}

PairOutcome classify_pair(const ColoredGraph& g, VertexId v, VertexId w,
                          const PairRuleOptions& options) {
  auto p = partition_pair(g, v, w);

  VertexSet black_n3;
  for (VertexId u : p.n3) {
    if (g.is_black(u)) black_n3.push_back(u);
  }
  if (black_n3.size() < 2) return PairOutcome::NotApplicable;

  for (const VertexSet* cls : {&p.n2, &p.n3}) {
    for (VertexId x : *cls) {
      if (dominates_all(g, x, black_n3)) return PairOutcome::NotApplicable;
    }
  }

  bool by_v = dominates_all(g, v, black_n3);
  bool by_w = dominates_all(g, w, black_n3);
  if (!by_v && !by_w) return PairOutcome::TakeBoth;
  if (by_v != by_w) return PairOutcome::TakeOne;

  if (options.require_potential_drop) {
    // Gadget adds 2 vertices, 4 edges, 2 blacks; whitening removes blacks.
    std::size_t whitened = black_n3.size();
    for (VertexId u : p.n2) {
      if (g.is_black(u) && g.adjacent(u, v) && g.adjacent(u, w)) ++whitened;
    }
    if (whitened <= 8) return PairOutcome::GadgetRejected;
  }
  return PairOutcome::Gadget;
}

bool alber_rule2(Instance& inst, VertexId v, VertexId w,
                 const PairRuleOptions& options) {
  auto& g = inst.graph;
  switch (classify_pair(g, v, w, options)) {
    case PairOutcome::NotApplicable:
    case PairOutcome::GadgetRejected:
      return false;

    case PairOutcome::TakeBoth:
      take_into_solution(inst, v);
      take_into_solution(inst, w);
      ++inst.stats[RuleId::AlberPairTakeBoth];
      return true;

    case PairOutcome::TakeOne: {
      auto p = partition_pair(g, v, w);
      VertexSet black_n3;
      for (VertexId u : p.n3) {
        if (g.is_black(u)) black_n3.push_back(u);
      }
      take_into_solution(inst, dominates_all(g, v, black_n3) ? v : w);
      ++inst.stats[RuleId::AlberPairTakeOne];
      return true;
    }

    case PairOutcome::Gadget: {
      auto p = partition_pair(g, v, w);
      VertexSet region = p.n3;
      for (VertexId u : p.n2) {
        if (g.adjacent(u, v) && g.adjacent(u, w)) region.push_back(u);
      }
      for (VertexId u : region) g.set_color(u, Color::White);
      for (int i = 0; i < 2; ++i) {
        VertexId z = g.add_vertex(Color::Black);
        g.add_edge(z, v);
        g.add_edge(z, w);
      }
      ++inst.stats[RuleId::AlberPairGadget];
      return true;
    }
  }
  return false;
}

VertexSet pair_partners(const ColoredGraph& g, VertexId v) {
  VertexSet seen{v};
  VertexSet frontier{v};
  for (int depth = 0; depth < 3; ++depth) {
    VertexSet next;
    for (VertexId x : frontier) {
      for (VertexId u : g.neighbors(x)) next.push_back(u);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    VertexSet fresh;
    std::set_difference(next.begin(), next.end(), seen.begin(), seen.end(),
                        std::back_inserter(fresh));
    VertexSet merged;
    std::set_union(seen.begin(), seen.end(), fresh.begin(), fresh.end(),
                   std::back_inserter(merged));
    seen.swap(merged);
    frontier.swap(fresh);
  }
  VertexSet out;
  for (VertexId u : seen) {
    if (u > v) out.push_back(u);
  }
  return out;
}

}  // namespace domkern
