#include "domkern/simple_rules.hpp"

namespace domkern {

namespace {

// True iff N[inner] ⊆ N[outer], for adjacent inner and outer.
bool closed_subset(const ColoredGraph& g, VertexId inner, VertexId outer) {
  auto in = g.neighbors(inner);
  auto out = g.neighbors(outer);
  if (in.size() > out.size()) return false;
  auto o = out.begin();
  for (VertexId x : in) {
    if (x == outer) continue;
    while (o != out.end() && *o < x) ++o;
    if (o == out.end() || *o != x) return false;
  }
  return true;
}

std::optional<SimpleMatch> found(SimpleRule rule, VertexId key, VertexId partner) {
  return SimpleMatch{rule, key, partner};
}

}  // namespace

RuleId rule_id(SimpleRule rule) {
  return static_cast<RuleId>(static_cast<std::uint8_t>(rule));
}

std::optional<SimpleMatch> match_simple(const ColoredGraph& g, SimpleRule rule,
                                        VertexId key) {
  if (!g.contains(key)) return std::nullopt;
  auto nbrs = g.neighbors(key);
  switch (rule) {
    case SimpleRule::WwEdge:
      if (!g.is_white(key)) break;
      for (VertexId v : nbrs) {
        if (g.is_white(v)) return found(rule, key, v);
      }
      break;

    case SimpleRule::WhiteNoBlack:
      if (!g.is_white(key)) break;
      for (VertexId v : nbrs) {
        if (g.is_black(v)) return std::nullopt;
      }
      return found(rule, key, key);

    case SimpleRule::WhiteSubsumed:
      if (!g.is_white(key)) break;
      for (VertexId v : nbrs) {
        bool covers = true;
        for (VertexId b : nbrs) {
          if (b != v && g.is_black(b) && !g.adjacent(v, b)) {
            covers = false;
            break;
          }
        }
        if (covers) return found(rule, key, v);
      }
      break;

    case SimpleRule::BlackToWhite:
      if (!g.is_black(key)) break;
      for (VertexId v : nbrs) {
        if (g.is_black(v) && closed_subset(g, v, key)) return found(rule, key, v);
      }
      break;

    case SimpleRule::IsolatedBlack:
      if (g.is_black(key) && nbrs.empty()) return found(rule, key, key);
      break;

    case SimpleRule::Degree1Black:
      if (g.is_black(key) && nbrs.size() == 1) return found(rule, key, nbrs.front());
      break;
  }
  return std::nullopt;
}

void apply_simple(Instance& inst, const SimpleMatch& match) {
  auto& g = inst.graph;
  switch (match.rule) {
    case SimpleRule::WwEdge:
      g.remove_edge(match.key, match.partner);
      break;
    case SimpleRule::WhiteNoBlack:
    case SimpleRule::WhiteSubsumed:
      g.remove_vertex(match.key);
      break;
    case SimpleRule::BlackToWhite:
      g.set_color(match.key, Color::White);
      break;
    case SimpleRule::IsolatedBlack:
      take_into_solution(inst, match.key);
      break;
    case SimpleRule::Degree1Black:
      take_into_solution(inst, match.partner);
      break;
  }
  ++inst.stats[rule_id(match.rule)];
}

bool apply_simple_rule(Instance& inst, SimpleRule rule) {
  const auto& g = inst.graph;
  std::optional<SimpleMatch> best;
  for (VertexId v : g.vertices()) {
    ++inst.stats.attempts;
    if (best && g.degree(v) >= g.degree(best->key)) continue;
    if (auto m = match_simple(g, rule, v)) best = m;
  }
  if (!best) return false;
  apply_simple(inst, *best);
  return true;
}

bool rule_ww_edge(Instance& inst) { return apply_simple_rule(inst, SimpleRule::WwEdge); }
bool rule_white_no_black(Instance& inst) {
  return apply_simple_rule(inst, SimpleRule::WhiteNoBlack);
}
bool rule_white_subsumed(Instance& inst) {
  return apply_simple_rule(inst, SimpleRule::WhiteSubsumed);
}
bool rule_black_to_white(Instance& inst) {
  return apply_simple_rule(inst, SimpleRule::BlackToWhite);
}
bool rule_isolated_black(Instance& inst) {
  return apply_simple_rule(inst, SimpleRule::IsolatedBlack);
}
bool rule_degree1_black(Instance& inst) {
  return apply_simple_rule(inst, SimpleRule::Degree1Black);
}

SimpleReducer::SimpleReducer(const ColoredGraph& g)
    : tracker_(1, kSimpleRules.size()) {
  tracker_.reset(g);
}

std::size_t SimpleReducer::run(Instance& inst) {
  auto& g = inst.graph;
  std::size_t applied = 0;
  for (;;) {
    tracker_.sync(g);
    bool progress = false;
    for (std::size_t r = 0; r < kSimpleRules.size() && !progress; ++r) {
      auto& queue = tracker_.lane(r);
      while (!queue.empty(g)) {
        VertexId v = queue.top();
        ++inst.stats.attempts;
        if (auto m = match_simple(g, kSimpleRules[r], v)) {
          apply_simple(inst, *m);
          ++applied;
          progress = true;
          break;
        }
        queue.pop();
      }
    }
    if (!progress) return applied;
  }
}

std::size_t apply_simple_exhaustively(Instance& inst) {
  SimpleReducer reducer(inst.graph);
  return reducer.run(inst);
}

std::size_t apply_simple_naive(Instance& inst) {
  std::size_t applied = 0;
  for (;;) {
    bool progress = false;
    for (SimpleRule rule : kSimpleRules) {
      if (apply_simple_rule(inst, rule)) {
        ++applied;
        progress = true;
        break;
      }
    }
    if (!progress) return applied;
  }
}

}  // namespace domkern
