#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "fcg/canonical.hpp"
#include "support.hpp"

using namespace fcg;
using namespace fcg::testing;

TEST(Canonical, EmptyGraphKey) {
  EXPECT_EQ(canonical_form(FramedColoredGraph()), CanonicalKey());
  EXPECT_EQ(CanonicalKey().vertex_count(), 0);
  EXPECT_EQ(decode(CanonicalKey()).size(), 0);
}

TEST(Canonical, DistinguishesFramingAndColor) {
  std::set<CanonicalKey> keys{
      canonical_form(make({0, 0}, {{0, 1, R}})), canonical_form(make({0, 0}, {{0, 1, B}})),
      canonical_form(make({0, 1}, {{0, 1, R}})), canonical_form(make({1, 1}, {{0, 1, R}})),
      canonical_form(make({0, 0}))};
  EXPECT_EQ(keys.size(), 5u);
  EXPECT_EQ(canonical_form(make({0, 1}, {{0, 1, R}})), canonical_form(make({1, 0}, {{0, 1, R}})));
}

TEST(Canonical, KeyOrderPutsDenserGraphsFirst) {
  const auto k3 = canonical_form(complete(3));
  const auto p3 = canonical_form(path({0, 0, 0}));
  const auto e3 = canonical_form(make({0, 0, 0}));
  EXPECT_LT(k3, p3);
  EXPECT_LT(p3, e3);
  EXPECT_EQ(k3.edge_count(), 3);
  EXPECT_EQ(p3.vertex_count(), 3);
  EXPECT_LT(canonical_form(vertex(0)), k3);
}

// Property: the key is constant on isomorphism classes.
TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto g = random_graph(rng, n, Palette::both());
    const auto h = permuted(g, random_permutation(rng, n));
    ASSERT_EQ(canonical_form(g), canonical_form(h)) << to_string(g);
  }
}

TEST(Canonical, InvariantUnderRelabelingOfRegularGraphs) {
  // Vertex-transitive graphs exercise the individualization search.
  std::mt19937_64 rng(99);
  const std::vector<FramedColoredGraph> hard{
      cycle({0, 0, 0, 0, 0, 0, 0, 0}), cycle({0, 1, 0, 1, 0, 1, 0, 1}),
      disjoint_union(cycle({0, 0, 0}), cycle({0, 0, 0})), complete(5, B)};
  for (const auto& g : hard) {
    for (int t = 0; t < 20; ++t) {
      ASSERT_EQ(canonical_form(g), canonical_form(permuted(g, random_permutation(rng, g.size()))));
    }
  }
  // C6 and two triangles are both 2-regular but not isomorphic.
  EXPECT_NE(canonical_form(cycle({0, 0, 0, 0, 0, 0})),
            canonical_form(disjoint_union(cycle({0, 0, 0}), cycle({0, 0, 0}))));
}

TEST(Canonical, DecodeRoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_graph(rng, static_cast<int>(rng() % 7), Palette::both());
    const auto key = canonical_form(g);
    const auto back = decode(key);
    EXPECT_EQ(canonical_form(back), key);
    EXPECT_EQ(encode_labeled(back), key.bytes());
  }
}

// The class partition agrees with the exhaustive minimum over all labelings.
TEST(Canonical, MatchesExhaustiveOracle) {
  for (auto [n, palette] : {std::pair{3, Palette::both()}, std::pair{4, Palette::red_only()},
                            std::pair{4, Palette::both()}}) {
    std::map<std::string, CanonicalKey> by_oracle;
    std::map<CanonicalKey, std::string> by_key;
    for (const auto& g : all_labeled(n, palette)) {
      const auto oracle = brute_canonical(g);
      const auto key = canonical_form(g);
      auto [it, fresh] = by_oracle.try_emplace(oracle, key);
      ASSERT_EQ(it->second, key) << to_string(g);
      auto [jt, fresh2] = by_key.try_emplace(key, oracle);
      ASSERT_EQ(jt->second, oracle) << to_string(g);
    }
    EXPECT_EQ(by_oracle.size(), enumerate_graphs(n, palette).size());
  }
}

TEST(Canonical, EnumerationCountsMatchLabeledOrbits) {
  for (int n = 0; n <= 4; ++n) {
    for (auto palette : {Palette::red_only(), Palette::black_only(), Palette::both()}) {
      if (n == 4 && palette == Palette::both()) continue;  // covered by the oracle test
      std::set<std::string> orbits;
      std::set<std::string> connected;
      for (const auto& g : all_labeled(n, palette)) {
        auto c = brute_canonical(g);
        if (g.is_connected()) connected.insert(c);
        orbits.insert(std::move(c));
      }
      EXPECT_EQ(enumerate_graphs(n, palette).size(), orbits.size()) << n;
      EXPECT_EQ(enumerate_graphs(n, palette, true).size(), connected.size()) << n;
    }
  }
}

TEST(Canonical, EnumerationCounts) {
  const std::vector<std::size_t> framed{1, 2, 6, 20, 90, 544, 5096};
  const std::vector<std::size_t> connected{0, 2, 3, 10, 50, 354};
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(enumerate_graphs(n, Palette::red_only()).size(), framed[n]);
  }
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(enumerate_graphs(n, Palette::red_only(), true).size(), connected[n]);
  }
  EXPECT_EQ(enumerate_graphs(2, Palette::both()).size(), 9u);
  EXPECT_EQ(enumerate_graphs(3, Palette::both()).size(), 56u);
  EXPECT_EQ(enumerate_graphs(4, Palette::both()).size(), 705u);
}

TEST(Canonical, EnumerationIsSortedAndCanonical) {
  const auto keys = enumerate_graphs(4, Palette::red_only());
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  for (const auto& k : keys) {
    EXPECT_EQ(canonical_form(decode(k)), k);
    EXPECT_EQ(k.vertex_count(), 4);
    EXPECT_TRUE(decode(k).uses_only(Palette::red_only()));
  }
}

TEST(Canonical, Errors) {
  EXPECT_THROW(CanonicalKey(std::string("\x01")), std::invalid_argument);
  EXPECT_THROW(canonical_form(FramedColoredGraph(kMaxCanonicalVertices + 1)), std::length_error);
  EXPECT_THROW(enumerate_graphs(-1, Palette::red_only()), std::invalid_argument);
  EXPECT_NO_THROW(canonical_form(FramedColoredGraph(kMaxCanonicalVertices)));
}

TEST(Canonical, HashAgreesWithEquality) {
  const auto a = canonical_form(path({0, 1, 0}));
  const auto b = canonical_form(make({1, 0, 0}, {{0, 1, R}, {0, 2, R}}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::hash<CanonicalKey>{}(a), std::hash<CanonicalKey>{}(b));
  EXPECT_FALSE(a.hex().empty());
}
