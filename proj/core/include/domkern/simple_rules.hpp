#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "domkern/dirty_queue.hpp"
#include "domkern/instance.hpp"

namespace domkern {

// The six cheap local rules, in application order.
enum class SimpleRule : std::uint8_t {
  WwEdge,         // edge between two whites: delete it
  WhiteNoBlack,   // white vertex without black neighbors: delete it
  WhiteSubsumed,  // white u, neighbor v with N[u]∩Z ⊆ N[v]∩Z: delete u
  BlackToWhite,   // black u, black neighbor v with N[v] ⊆ N[u]: whiten u
  IsolatedBlack,  // isolated black vertex: take it
  Degree1Black,   // black vertex of degree one: take its neighbor
};

inline constexpr std::array<SimpleRule, 6> kSimpleRules = {
    SimpleRule::WwEdge,        SimpleRule::WhiteNoBlack,
    SimpleRule::WhiteSubsumed, SimpleRule::BlackToWhite,
    SimpleRule::IsolatedBlack, SimpleRule::Degree1Black,
};

RuleId rule_id(SimpleRule rule);

// One applicable instance of a simple rule. `key` is the vertex that orders
// candidates: lowest current degree wins, then smallest id. `partner` is the
// second vertex involved, or equal to `key` when the rule only needs one.
struct SimpleMatch {
  SimpleRule rule;
  VertexId key;
  VertexId partner;
};

// Checks `rule` with `key` as its key vertex; picks the smallest partner.
std::optional<SimpleMatch> match_simple(const ColoredGraph& g, SimpleRule rule,
                                        VertexId key);

void apply_simple(Instance& inst, const SimpleMatch& match);

// Each applies the rule once at its first applicable key in (degree, id) order.
bool rule_ww_edge(Instance& inst);
bool rule_white_no_black(Instance& inst);
bool rule_white_subsumed(Instance& inst);
bool rule_black_to_white(Instance& inst);
bool rule_isolated_black(Instance& inst);
bool rule_degree1_black(Instance& inst);
bool apply_simple_rule(Instance& inst, SimpleRule rule);

/// Exhaustive application with memory between calls.
///
/// Semantics are those of the naive loop: find the first rule (in
/// kSimpleRules order) that applies anywhere, apply it at its first key,
/// start over. Vertices that failed a check are only re-examined after a
/// mutation within distance one, which the journal reports.
class SimpleReducer {
 public:
  explicit SimpleReducer(const ColoredGraph& g);

  // Runs to a fixed point; returns the number of applications.
  std::size_t run(Instance& inst);

 private:
  JournalTracker tracker_;
};

std::size_t apply_simple_exhaustively(Instance& inst);

// Reference loop that rescans the whole graph after every application.
std::size_t apply_simple_naive(Instance& inst);

}  // namespace domkern
