#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fcg/combination.hpp"
#include "fcg/span.hpp"
#include "support.hpp"

using namespace fcg;
using Vec = Combination<int>;

namespace {

// Plain dense elimination, used as the rank oracle.
std::size_t dense_rank(std::vector<std::vector<Scalar>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Scalar f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<Vec> random_vectors(std::mt19937_64& rng, int count, int dim) {
  std::vector<Vec> out;
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int i = 0; i < count; ++i) {
    Vec v;
    // Sparse-ish with frequent dependencies.
    for (int k = 0; k < dim; ++k) {
      if (rng() % 3 == 0) v.add(k, entry(rng));
    }
    out.push_back(v);
  }
  // Mix in explicit combinations so the span is not full.
  for (int i = 0; i + 1 < count; i += 3) out.push_back(out[i] + Scalar(3, 2) * out[i + 1]);
  return out;
}

std::vector<std::vector<Scalar>> to_dense(const std::vector<Vec>& vs, int dim) {
  std::vector<std::vector<Scalar>> m;
  for (const auto& v : vs) {
    std::vector<Scalar> row(dim, 0);
    for (const auto& [k, c] : v) row[k] = c;
    m.push_back(row);
  }
  return m;
}

}  // namespace

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(parse_scalar("3"), Scalar(3));
  EXPECT_EQ(parse_scalar("-6/4"), Scalar(-3, 2));
  EXPECT_EQ(to_string(Scalar(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(Scalar(0)), "0");
  EXPECT_THROW(parse_scalar(""), std::invalid_argument);
  EXPECT_THROW(parse_scalar("abc"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
}

TEST(Combination, ZeroCoefficientsAreDropped) {
  Vec v;
  v.add(1, 2);
  v.add(1, -2);
  EXPECT_TRUE(v.is_zero());
  v.add(3, 0);
  EXPECT_EQ(v.size(), 0u);
  Vec a(1, 2);
  Vec b(2, 5);
  auto s = a + b - a;
  EXPECT_EQ(s, b);
  EXPECT_EQ((Scalar(0) * b).size(), 0u);
  EXPECT_EQ((-b).coeff(2), Scalar(-5));
}

TEST(Combination, GradingAndTensors) {
  using namespace fcg::testing;
  const auto v0 = canonical_form(vertex(0));
  const auto k2 = canonical_form(path({0, 0}));
  LinearCombination x(k2);
  EXPECT_EQ(homogeneous_grading(x), 2);
  EXPECT_EQ(homogeneous_grading(LinearCombination()), -1);
  x.add(v0, 1);
  EXPECT_EQ(homogeneous_grading(x), -2);
  const auto t = tensor(LinearCombination(v0, 2), LinearCombination(k2, 3));
  EXPECT_EQ(t.coeff({v0, k2}), Scalar(6));
  EXPECT_EQ(flip(t).coeff({k2, v0}), Scalar(6));
}

// Property: rank matches a dense oracle and the reduced basis does not
// depend on insertion order.
TEST(Echelon, RankAndRowsIndependentOfOrder) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 3 + static_cast<int>(rng() % 8);
    auto vs = random_vectors(rng, 2 + static_cast<int>(rng() % 8), dim);
    Echelon<int> a;
    for (const auto& v : vs) a.insert(v);
    EXPECT_EQ(a.rank(), dense_rank(to_dense(vs, dim)));
    std::shuffle(vs.begin(), vs.end(), rng);
    Echelon<int> b;
    for (const auto& v : vs) b.insert(v);
    EXPECT_EQ(a, b);
    for (const auto& [p, row] : a.rows()) {
      EXPECT_EQ(row.leading_key(), p);
      EXPECT_EQ(row.coeff(p), Scalar(1));
      for (const auto& [q, other] : a.rows()) {
        if (q != p) EXPECT_EQ(row.coeff(q), Scalar(0));
      }
    }
  }
}

TEST(Echelon, MembershipMatchesRankOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 4 + static_cast<int>(rng() % 4);
    auto vs = random_vectors(rng, 3, dim);
    Echelon<int> e;
    for (const auto& v : vs) e.insert(v);
    const auto probe = random_vectors(rng, 1, dim).front();
    auto with = vs;
    with.push_back(probe);
    const bool oracle = dense_rank(to_dense(with, dim)) == dense_rank(to_dense(vs, dim));
    EXPECT_EQ(e.contains(probe), oracle);
    // The normal form differs from the probe by an element of the span.
    EXPECT_TRUE(e.contains(probe - e.reduce(probe)));
  }
}

TEST(Echelon, InsertReportsGrowth) {
  Echelon<int> e;
  Vec a;
  a.add(0, 1);
  a.add(1, 1);
  EXPECT_TRUE(e.insert(a));
  EXPECT_FALSE(e.insert(Scalar(2) * a));
  EXPECT_FALSE(e.insert(Vec()));
  EXPECT_TRUE(e.is_pivot(0));
  EXPECT_EQ(e.basis().size(), 1u);
}

TEST(Intersect, CoordinateSubspaces) {
  const std::vector<int> ab{1, 2};
  const std::vector<int> bc{2, 3};
  const std::set<int> ambient{1, 2, 3};
  const auto meet = intersect(coordinate_span<int>(ab), coordinate_span<int>(bc), ambient);
  ASSERT_EQ(meet.rank(), 1u);
  EXPECT_EQ(meet.basis().front(), Vec(2));
}

// dim(A ∩ B) = dim A + dim B − dim(A + B).
TEST(Intersect, DimensionFormula) {
  std::mt19937_64 rng(13);
  std::set<int> ambient;
  for (int k = 0; k < 7; ++k) ambient.insert(k);
  for (int trial = 0; trial < 60; ++trial) {
    const auto va = random_vectors(rng, 4, 7);
    const auto vb = random_vectors(rng, 4, 7);
    Echelon<int> a;
    Echelon<int> b;
    Echelon<int> sum;
    for (const auto& v : va) a.insert(v), sum.insert(v);
    for (const auto& v : vb) b.insert(v), sum.insert(v);
    const auto meet = intersect(a, b, ambient);
    EXPECT_EQ(meet.rank() + sum.rank(), a.rank() + b.rank());
    for (const auto& v : meet.basis()) {
      EXPECT_TRUE(a.contains(v));
      EXPECT_TRUE(b.contains(v));
    }
  }
}

TEST(Intersect, RejectsForeignKeys) {
  const std::vector<int> ab{1, 2};
  EXPECT_THROW(intersect(coordinate_span<int>(ab), coordinate_span<int>(ab), std::set<int>{1}),
               std::invalid_argument);
}

TEST(Kernel, SmallMap) {
  // e1 -> x, e2 -> x, e3 -> y, e4 -> 0
  std::vector<std::pair<int, Combination<char>>> images{
      {1, Combination<char>('x')}, {2, Combination<char>('x')}, {3, Combination<char>('y')},
      {4, Combination<char>()}};
  const auto ker = kernel(images);
  ASSERT_EQ(ker.size(), 2u);
  Echelon<int> k;
  for (const auto& v : ker) k.insert(v);
  Vec d;
  d.add(1, 1);
  d.add(2, -1);
  EXPECT_TRUE(k.contains(d));
  EXPECT_TRUE(k.contains(Vec(4)));
  EXPECT_FALSE(k.contains(Vec(3)));
}
