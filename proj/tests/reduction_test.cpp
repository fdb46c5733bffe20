#include <gtest/gtest.h>

#include <random>

#include "fcg/bialgebra.hpp"
#include "fcg/reduction.hpp"
#include "support.hpp"

using namespace fcg;
using namespace fcg::testing;

namespace {

CanonicalKey key(const FramedColoredGraph& g) { return canonical_form(g); }

}  // namespace

TEST(Psi, RedEdgeBecomesBlackMinusDeleted) {
  const auto x = psi(path({0, 1}));
  EXPECT_EQ(x, lc({{path({0, 1}, B), 1}, {make({0, 1}), -1}}));
}

TEST(Psi, TwoRedEdges) {
  // Four states; both single-edge states are isomorphic only up to framing.
  const auto x = psi(path({0, 0, 0}));
  EXPECT_EQ(x, lc({{path({0, 0, 0}, B), 1},
                   {make({0, 0, 0}, {{0, 1, B}}), -2},
                   {make({0, 0, 0}), 1}}));
}

TEST(Psi, KeepsBlackEdges) {
  const auto g = path({1, 0}, B);
  EXPECT_EQ(psi(g), from_graph(g));
}

TEST(Iota, RejectsRedEdges) {
  EXPECT_THROW(iota(from_graph(path({0, 0}))), std::invalid_argument);
  const auto x = from_graph(path({0, 0}, B), 3);
  EXPECT_EQ(iota(x), x);
}

TEST(RedNormalForm, BlackEdgeBecomesRedPlusDeleted) {
  EXPECT_EQ(red_normal_form(path({0, 0}, B)), lc({{path({0, 0}), 1}, {make({0, 0}), 1}}));
  EXPECT_EQ(red_normal_form(path({0, 1})), from_graph(path({0, 1})));
}

// ψ and the red normal form are mutually inverse between the two bases.
TEST(RedNormalForm, InverseToPsi) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng() % 6);
    const auto black = random_graph(rng, n, Palette::black_only());
    EXPECT_EQ(psi(red_normal_form(black)), from_graph(black));
    const auto red = random_graph(rng, n, Palette::red_only());
    EXPECT_EQ(red_normal_form(psi(red)), from_graph(red));
    // Mixed graphs: both routes land on the same class modulo I_C.
    const auto mixed = random_graph(rng, n, Palette::both());
    EXPECT_EQ(red_normal_form(psi(mixed)), red_normal_form(mixed));
  }
}

TEST(PiC, KeepsConnected) {
  LinearCombination x = from_graph(path({0, 1}), 2);
  add_graph(x, make({0, 1}), 5);
  EXPECT_EQ(pi_c(x), from_graph(path({0, 1}), 2));
  EXPECT_THROW(pi_c(from_graph(path({0, 1}, B))), std::invalid_argument);
}

TEST(PiJR, SmallExamples) {
  EXPECT_EQ(pi_jr_formula(key(vertex(1))), from_graph(vertex(1)));
  // K2 − (two vertices).
  EXPECT_EQ(pi_jr_formula(key(path({0, 1}, B))),
            lc({{path({0, 1}, B), 1}, {make({0, 1}), -1}}));
  EXPECT_TRUE(pi_jr_formula(key(make({0, 1}))).is_zero());
  EXPECT_TRUE(pi_jr_formula(CanonicalKey()).is_zero());
  // Black path a–b–c: connected spanning subgraphs are the path only.
  EXPECT_EQ(pi_jr_formula(key(path({0, 0, 0}, B))), psi(path({0, 0, 0})));
  EXPECT_THROW(pi_jr_formula(key(path({0, 0}))), std::invalid_argument);
}

TEST(PiJR, FormulaMatchesCompositionOnAllClasses) {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& k : enumerate_graphs(n, Palette::black_only())) {
      const auto f = pi_jr_formula(k);
      ASSERT_EQ(f, pi_jr_composition(LinearCombination(k)));
      ASSERT_EQ(pi_jr_formula(f), f);
      if (n > 0) ASSERT_TRUE(is_primitive(f, CoproductRule::JoniRota));
    }
  }
}

TEST(IC, GeneratorShape) {
  ICGenerator gen{make({0, 1, 0}, {{1, 2, R}}), 0, 1};
  EXPECT_EQ(gen.variant(EdgeColor::Black), make({0, 1, 0}, {{0, 1, B}, {1, 2, R}}));
  EXPECT_EQ(gen.element(), lc({{make({0, 1, 0}, {{0, 1, R}, {1, 2, R}}), 1},
                               {make({0, 1, 0}, {{0, 1, B}, {1, 2, R}}), -1},
                               {make({0, 1, 0}, {{1, 2, R}}), 1}}));
}

TEST(IC, GeneratorsAreAnnihilated) {
  for (int n = 2; n <= 3; ++n) {
    const auto gens = ic_generators(n);
    EXPECT_FALSE(gens.empty());
    for (const auto& g : gens) {
      EXPECT_TRUE(psi(g.element()).is_zero());
      EXPECT_TRUE(red_normal_form(g.element()).is_zero());
    }
  }
  // n = 2: framings {00, 01, 11} times the pair; the surroundings are empty.
  EXPECT_EQ(ic_generators(2).size(), 3u);
  EXPECT_TRUE(ic_generators(1).empty());
}

// ψ intertwines the colored and Joni–Rota coproducts.
TEST(Psi, IsACoalgebraMap) {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& k : enumerate_graphs(n, Palette::both())) {
      Tensor rhs;
      for (const auto& [kk, c] : coproduct(k, CoproductRule::Colored)) {
        rhs.axpy(c, tensor(psi(decode(kk.first)), psi(decode(kk.second))));
      }
      ASSERT_EQ(coproduct(psi(decode(k)), CoproductRule::JoniRota), rhs);
    }
  }
}
