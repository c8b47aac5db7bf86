#include <gtest/gtest.h>

#include "domkern/exact.hpp"
#include "domkern/graph.hpp"
#include "domkern/instance.hpp"
#include "support/random_graphs.hpp"

namespace domkern {
namespace {

using testing::path;
using testing::star;

TEST(ColoredGraph, NeighborsOfTrianglePathAndIsolatedVertex) {
  ColoredGraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  EXPECT_EQ(neighbors(tri, 0), (VertexSet{1, 2}));

  ColoredGraph lone(1);
  EXPECT_TRUE(neighbors(lone, 0).empty());

  EXPECT_EQ(neighbors(path(3), 1), (VertexSet{0, 2}));
}

TEST(ColoredGraph, UnknownVertexIsUsageError) {
  ColoredGraph g(2);
  EXPECT_THROW(neighbors(g, 5), UsageError);
  g.remove_vertex(1);
  EXPECT_THROW(neighbors(g, 1), UsageError);
  EXPECT_THROW(g.add_edge(0, 1), UsageError);
  EXPECT_THROW(g.set_color(7, Color::White), UsageError);
}

TEST(ColoredGraph, RejectsSelfLoopsAndIgnoresParallelEdges) {
  ColoredGraph g(2);
  EXPECT_THROW(g.add_edge(1, 1), UsageError);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.remove_edge(1, 0));
  EXPECT_FALSE(g.remove_edge(0, 1));
  g.audit();
}

TEST(ColoredGraph, IdsStayStableAcrossRemovals) {
  ColoredGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.remove_vertex(1);
  VertexId fresh = g.add_vertex();
  EXPECT_EQ(fresh, 4u);
  EXPECT_FALSE(g.contains(1));
  EXPECT_EQ(g.vertices(), (std::vector<VertexId>{0, 2, 3, 4}));
  EXPECT_EQ(g.id_bound(), 5u);
  g.audit();
}

TEST(ColoredGraph, CountersAndPotential) {
  ColoredGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.set_color(2, Color::White);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.black_count(), 2u);
  EXPECT_EQ(g.potential(), 3u + 2u + 2u);
  g.remove_vertex(1);
  EXPECT_EQ(g.potential(), 2u + 0u + 1u);
  g.audit();
}

TEST(ColoredGraph, JournalRecordsTouchedVertices) {
  ColoredGraph g(3);
  std::size_t start = g.journal().size();
  g.add_edge(0, 2);
  auto j = g.journal().subspan(start);
  EXPECT_EQ(std::vector<VertexId>(j.begin(), j.end()), (std::vector<VertexId>{0, 2}));

  start = g.journal().size();
  g.set_color(1, Color::Black);  // unchanged: nothing logged
  EXPECT_EQ(g.journal().size(), start);
  g.remove_vertex(2);
  j = g.journal().subspan(start);
  EXPECT_EQ(std::vector<VertexId>(j.begin(), j.end()), (std::vector<VertexId>{0, 2}));
}

TEST(ColoredGraph, RandomMutationsKeepAdjacencySymmetric) {
  Rng rng(7);
  ColoredGraph g(30);
  for (int step = 0; step < 2000; ++step) {
    auto live = g.vertices();
    if (live.size() < 2) break;
    VertexId u = live[rng.below(live.size())];
    VertexId v = live[rng.below(live.size())];
    switch (rng.below(5)) {
      case 0:
      case 1:
        if (u != v) g.add_edge(u, v);
        break;
      case 2:
        g.remove_edge(u, v);
        break;
      case 3:
        g.set_color(u, rng.chance(0.5) ? Color::White : Color::Black);
        break;
      default:
        if (rng.chance(0.1)) g.remove_vertex(u);
        if (rng.chance(0.1)) g.add_vertex();
    }
    ASSERT_NO_THROW(g.audit());
  }
}

TEST(Neighborhoods, ClosedNeighborhoodOfSet) {
  EXPECT_TRUE(closed_neighborhood_of_set(path(4), {}).empty());
  EXPECT_EQ(closed_neighborhood_of_set(path(4), VertexSet{0, 3}), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(closed_neighborhood_of_set(star(5), VertexSet{0}),
            (VertexSet{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(closed_neighborhood(path(3), 0), (VertexSet{0, 1}));
}

TEST(TakeIntoSolution, StarCenterLeavesWhiteIsolatedLeaves) {
  Instance inst(star(5));
  take_into_solution(inst, 0);
  EXPECT_EQ(inst.solution, (std::vector<VertexId>{0}));
  EXPECT_EQ(inst.graph.vertex_count(), 5u);
  EXPECT_EQ(inst.graph.edge_count(), 0u);
  EXPECT_EQ(inst.graph.black_count(), 0u);
}

TEST(TakeIntoSolution, IsolatedVertexAndSingleEdge) {
  Instance lone{ColoredGraph(1)};
  take_into_solution(lone, 0);
  EXPECT_TRUE(lone.graph.empty());
  EXPECT_EQ(lone.solution.size(), 1u);

  Instance edge(path(2));
  take_into_solution(edge, 0);
  EXPECT_EQ(edge.solution, (std::vector<VertexId>{0}));
  EXPECT_TRUE(edge.graph.is_white(1));
  EXPECT_EQ(edge.graph.degree(1), 0u);
  EXPECT_THROW(take_into_solution(edge, 0), UsageError);
}

TEST(TakeIntoSolution, NeverRaisesOrLowersTheOptimumWhenTakingAnOptimalVertex) {
  // Taking a vertex from some optimal witness keeps dom + |solution| fixed.
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Instance inst(testing::random_colored(12, rng));
    auto opt = exact_dom(inst.graph);
    if (opt.witness.empty()) continue;
    Instance after = inst;
    take_into_solution(after, opt.witness[rng.below(opt.witness.size())]);
    ASSERT_TRUE(verify_rule_safety(inst, after));
  }
}

TEST(Scattered, PathExamplesAndSingletons) {
  EXPECT_FALSE(is_1_scattered(path(3), VertexSet{0, 2}));
  EXPECT_TRUE(is_1_scattered(path(5), VertexSet{0, 4}));
  EXPECT_FALSE(is_1_scattered(path(5), VertexSet{0, 3, 4}));
  EXPECT_TRUE(is_1_scattered(path(5), VertexSet{2}));
  EXPECT_TRUE(is_1_scattered(path(5), VertexSet{}));
}

TEST(Scattered, AgreesWithPairwiseBfsDistance) {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    auto g = testing::random_colored(16, rng);
    auto ids = g.vertices();
    VertexSet b;
    for (VertexId v : ids) {
      if (rng.chance(0.3)) b.push_back(v);
    }
    bool expected = true;
    for (VertexId u : b) {
      auto dist = testing::bfs_distances(g, u);
      for (VertexId v : b) {
        if (u != v && dist[v] < 3) expected = false;
      }
    }
    ASSERT_EQ(is_1_scattered(g, b), expected);
  }
}

TEST(WithoutVertices, KeepsIdsAndDropsIncidentEdges) {
  auto g = path(5);
  auto h = without_vertices(g, VertexSet{2});
  EXPECT_FALSE(h.contains(2));
  EXPECT_TRUE(h.contains(4));
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_TRUE(h.adjacent(3, 4));
  h.audit();
}

TEST(IsDominating, ChecksOnlyBlackVertices) {
  auto g = path(3);
  EXPECT_TRUE(is_dominating(g, VertexSet{1}));
  EXPECT_FALSE(is_dominating(g, VertexSet{0}));
  g.set_color(2, Color::White);
  EXPECT_TRUE(is_dominating(g, VertexSet{0}));
}

TEST(PlainGadget, AddsPendantPairOnTopOfAllBlackInput) {
  auto g = path(3);
  auto h = bw_to_plain_gadget(g);
  EXPECT_EQ(h.vertex_count(), 5u);
  EXPECT_EQ(h.edge_count(), 3u);
  EXPECT_TRUE(h.adjacent(3, 4));
  EXPECT_EQ(h.degree(3), 1u);
  EXPECT_EQ(h.black_count(), 5u);
  EXPECT_EQ(exact_dom(h).size, exact_dom(g).size + 1);
}

TEST(PlainGadget, PathWithWhiteMiddle) {
  auto g = path(3);
  g.set_color(1, Color::White);
  auto h = bw_to_plain_gadget(g);
  // Hub 4 is joined to the pendant 3 and to the former white vertex 1.
  EXPECT_TRUE(h.adjacent(4, 1));
  EXPECT_TRUE(h.adjacent(4, 3));
  EXPECT_EQ(h.white_vertices().size(), 0u);
  EXPECT_EQ(testing::brute_force_dom(h), 2u);
  EXPECT_EQ(exact_dom(h).size, exact_dom(g).size + 1);
}

TEST(PlainGadget, GadgetIdsAreTheTwoLargest) {
  ColoredGraph g(4);
  g.add_edge(0, 1);
  g.remove_vertex(3);
  auto h = bw_to_plain_gadget(g);
  EXPECT_TRUE(h.contains(4));
  EXPECT_TRUE(h.contains(5));
  EXPECT_EQ(h.id_bound(), 6u);
}

TEST(PlainGadget, EmptyGraph) {
  auto h = bw_to_plain_gadget(ColoredGraph{});
  EXPECT_EQ(h.vertex_count(), 2u);
  EXPECT_EQ(exact_dom(h).size, 1u);
}

}  // namespace
}  // namespace domkern
