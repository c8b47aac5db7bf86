#include "domkern/instance.hpp"

namespace domkern {

std::string_view rule_name(RuleId id) {
  switch (id) {
    case RuleId::WwEdge: return "ww_edge";
    case RuleId::WhiteNoBlack: return "white_no_black";
    case RuleId::WhiteSubsumed: return "white_subsumed";
    case RuleId::BlackToWhite: return "black_to_white";
    case RuleId::IsolatedBlack: return "isolated_black";
    case RuleId::Degree1Black: return "degree1_black";
    case RuleId::AlberSingle: return "alber_single";
    case RuleId::AlberPairTakeBoth: return "alber_pair_take_both";
    case RuleId::AlberPairTakeOne: return "alber_pair_take_one";
    case RuleId::AlberPairGadget: return "alber_pair_gadget";
    case RuleId::SparsityWhitening: return "sparsity_whitened";
  }
  return "unknown";
}

void take_into_solution(Instance& inst, VertexId v) {
  auto& g = inst.graph;
  for (VertexId u : neighbors(g, v)) g.set_color(u, Color::White);
  g.remove_vertex(v);
  inst.solution.push_back(v);
}

}  // namespace domkern
