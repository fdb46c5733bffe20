#include <gtest/gtest.h>

#include <random>

#include "fcg/graph.hpp"
#include "support.hpp"

using namespace fcg;
using namespace fcg::testing;

TEST(Graph, ConstructionAndAccess) {
  auto g = make({0, 1, 0}, {{0, 1, R}, {1, 2, B}});
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.framing(1), 1);
  EXPECT_EQ(g.edge(1, 0), EdgeColor::Red);
  EXPECT_EQ(g.edge(2, 1), EdgeColor::Black);
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.edge_count(EdgeColor::Red), 1);
  EXPECT_EQ(g.framing_sum(), 1);
  EXPECT_FALSE(g.uses_only(Palette::red_only()));
  EXPECT_TRUE(g.uses_only(Palette::both()));
  EXPECT_EQ(to_string(g), "n=3 f=010 E={01r,12b}");
}

TEST(Graph, RejectsInvalidInput) {
  EXPECT_THROW(FramedColoredGraph(-1), std::invalid_argument);
  EXPECT_THROW(make({2}), std::invalid_argument);
  EXPECT_THROW(make({0, 0}, {{0, 1, R}, {1, 0, B}}), std::invalid_argument);
  EXPECT_THROW(make({0, 0}, {{0, 1, EdgeColor::None}}), std::invalid_argument);
  FramedColoredGraph g(2);
  EXPECT_THROW(g.set_edge(1, 1, R), std::invalid_argument);
  EXPECT_THROW(g.set_edge(0, 2, R), std::out_of_range);
  EXPECT_THROW(g.set_framing(0, 3), std::invalid_argument);
  EXPECT_THROW(g.framing(5), std::out_of_range);
}

TEST(Graph, Connectivity) {
  EXPECT_FALSE(FramedColoredGraph().is_connected());
  EXPECT_TRUE(vertex(0).is_connected());
  EXPECT_TRUE(path({0, 0, 0}).is_connected());
  EXPECT_FALSE(make({0, 0, 0}, {{0, 1, R}}).is_connected());
  EXPECT_TRUE(path({0, 0, 0}, B).is_connected());
}

TEST(Graph, ComponentsKeepFramingAndColors) {
  auto g = make({1, 0, 0, 1}, {{0, 2, B}, {1, 3, R}});
  const auto sets = component_vertex_sets(g);
  ASSERT_EQ(sets.size(), 2u);
  EXPECT_EQ(sets[0], (std::vector<int>{0, 2}));
  EXPECT_EQ(sets[1], (std::vector<int>{1, 3}));
  const auto comps = connected_components(g);
  EXPECT_EQ(comps[0], make({1, 0}, {{0, 1, B}}));
  EXPECT_EQ(comps[1], make({0, 1}, {{0, 1, R}}));
}

TEST(Graph, EulerCharacteristic) {
  EXPECT_EQ(euler_characteristic(FramedColoredGraph()), 0);
  EXPECT_EQ(euler_characteristic(vertex(1)), 1);
  EXPECT_EQ(euler_characteristic(path({0, 0, 0, 0})), 1);
  EXPECT_EQ(euler_characteristic(cycle({0, 0, 0, 0})), 0);
  EXPECT_EQ(euler_characteristic(complete(4)), -2);
}

TEST(Graph, EulerCharacteristicIsAdditive) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto a = random_graph(rng, 1 + static_cast<int>(rng() % 5), Palette::both());
    auto b = random_graph(rng, 1 + static_cast<int>(rng() % 5), Palette::both());
    EXPECT_EQ(euler_characteristic(disjoint_union(a, b)),
              euler_characteristic(a) + euler_characteristic(b));
  }
}

TEST(Graph, SpanningSubgraphsOfTriangle) {
  const auto subs = spanning_subgraphs(complete(3));
  EXPECT_EQ(subs.size(), 8u);
  int connected = 0;
  for (const auto& s : subs) {
    EXPECT_EQ(s.size(), 3);
    connected += s.is_connected();
  }
  EXPECT_EQ(connected, 4);
}

TEST(Graph, FullSubgraphRelabelsInGivenOrder) {
  auto g = make({0, 1, 0}, {{0, 1, R}, {1, 2, B}});
  const std::vector<int> keep{2, 1};
  EXPECT_EQ(full_subgraph(g, keep), make({0, 1}, {{0, 1, B}}));
  EXPECT_EQ(full_subgraph_mask(g, 0b011), make({0, 1}, {{0, 1, R}}));
  const std::vector<int> twice{1, 1};
  EXPECT_THROW(full_subgraph(g, twice), std::invalid_argument);
  EXPECT_THROW(full_subgraph_mask(g, 0b1000), std::out_of_range);
}

TEST(Graph, DisjointUnionAppendsVertices) {
  auto u = disjoint_union(vertex(1), make({0, 0}, {{0, 1, R}}));
  EXPECT_EQ(u, make({1, 0, 0}, {{1, 2, R}}));
}

TEST(Graph, AddLeaf) {
  auto g = add_leaf(path({0, 1}), 1, 1);
  EXPECT_EQ(g, make({0, 1, 1}, {{0, 1, R}, {1, 2, R}}));
  EXPECT_EQ(add_leaf(vertex(0), 0, 0, B).edge(0, 1), EdgeColor::Black);
  EXPECT_THROW(add_leaf(vertex(0), 1, 0), std::out_of_range);
  EXPECT_THROW(add_leaf(vertex(0), 0, 0, EdgeColor::None), std::invalid_argument);
}

TEST(Graph, NablaIdentifiesVertices) {
  // P3 = K2 ∇ K2 glued at an end of each.
  const auto p3 = nabla(path({0, 0}), 1, path({0, 0}), 0);
  EXPECT_EQ(p3, path({0, 0, 0}));
  // Merged framing is the F_2 sum.
  EXPECT_EQ(nabla(vertex(1), 0, vertex(1), 0), vertex(0));
  EXPECT_EQ(nabla(vertex(1), 0, vertex(0), 0), vertex(1));
  EXPECT_EQ(nabla(vertex(1), 0, vertex(1), 0, 1), vertex(1));
  EXPECT_THROW(nabla(vertex(0), 1, vertex(0), 0), std::out_of_range);
}

TEST(Graph, JoinComponents) {
  auto g = make({0, 1, 0}, {{0, 1, B}});
  EXPECT_EQ(join_components(g), make({0, 1, 0}, {{0, 1, B}, {0, 2, R}, {1, 2, R}}));
  EXPECT_EQ(join_components(path({0, 0})), path({0, 0}));
}
