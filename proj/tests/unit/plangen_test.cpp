#include <gtest/gtest.h>

#include "domkern/plangen.hpp"
#include "support/random_graphs.hpp"

namespace domkern {
namespace {

TEST(MaximalPlanar, EdgeCountAndPlanarity) {
  for (std::size_t n : {3u, 4u, 10u, 302u, 1000u}) {
    auto g = random_maximal_planar(n, n);
    EXPECT_EQ(g.vertex_count(), n);
    EXPECT_EQ(g.edge_count(), 3 * n - 6);
    EXPECT_EQ(g.black_count(), n);
    EXPECT_TRUE(testing::is_planar(g)) << n;
    g.audit();
  }
  EXPECT_THROW(random_maximal_planar(2, 1), UsageError);
}

TEST(MaximalPlanar, MinimumDegreeIsThree) {
  auto g = random_maximal_planar(200, 9);
  for (VertexId v : g.vertices()) EXPECT_GE(g.degree(v), 3u);
}

TEST(MaximalPlanar, SeedDeterminesTheGraph) {
  EXPECT_EQ(random_maximal_planar(100, 5), random_maximal_planar(100, 5));
  EXPECT_FALSE(random_maximal_planar(100, 5) == random_maximal_planar(100, 6));
}

TEST(ThinToEdges, KeepsExactlyMEdgesAndNoIsolatedVertices) {
  auto g = random_maximal_planar(600, 3);
  auto t = thin_to_edges(g, 900, 4);
  EXPECT_EQ(t.edge_count(), 900u);
  EXPECT_LE(t.vertex_count(), 600u);
  for (VertexId v : t.vertices()) EXPECT_GT(t.degree(v), 0u);
  for (auto [u, v] : t.edges()) EXPECT_TRUE(g.adjacent(u, v));
  EXPECT_EQ(t, thin_to_edges(g, 900, 4));
  EXPECT_TRUE(thin_to_edges(g, 0, 4).empty());
  EXPECT_THROW(thin_to_edges(g, g.edge_count() + 1, 4), UsageError);
}

TEST(CanonicalGroups, ShapesAndNames) {
  auto groups = canonical_groups();
  std::vector<std::string> names;
  for (const auto& g : groups) {
    names.push_back(g.name());
    EXPECT_EQ(g.instances, 25u);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"302_900", "450_900", "600_900", "2002_6000",
                                             "3000_6000", "4000_6000"}));
  EXPECT_NE(canonical_groups(25, 1)[0].base_seed, canonical_groups(25, 2)[0].base_seed);
  EXPECT_NE(groups[0].base_seed, groups[1].base_seed);
}

TEST(GenerateInstance, PlanarWithTheRequestedEdgeCount) {
  for (const auto& spec : canonical_groups(2)) {
    for (std::size_t i = 0; i < 2; ++i) {
      auto g = generate_instance(spec, i);
      EXPECT_EQ(g.edge_count(), spec.edges);
      EXPECT_LE(g.vertex_count(), spec.vertices);
      EXPECT_TRUE(testing::is_planar(g)) << spec.name();
    }
  }
  auto spec = canonical_groups(3)[0];
  EXPECT_EQ(generate_instance(spec, 0).vertex_count(), 302u);
  EXPECT_EQ(generate_instance(spec, 2), generate_instance(spec, 2));
  EXPECT_NE(instance_seed(spec, 0), instance_seed(spec, 1));
}

}  // namespace
}  // namespace domkern
