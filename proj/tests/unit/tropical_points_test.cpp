#include "stasheff/tropical_points.hpp"

#include <gtest/gtest.h>

#include "expect_code.hpp"
#include "generators.hpp"
#include "stasheff/cluster_atlas.hpp"
#include "stasheff/exact_algebra.hpp"

namespace stasheff {
namespace {

using testing::Rng;
using testing::uniform;

TropicalCoords coords(const Triangulation& t, std::vector<std::int64_t> v) { return make_coords(t, std::move(v)); }

Lamination balanced(int n, std::vector<WeightedGraph::Triplet> diagonals, std::int64_t shift = 0) {
  return Lamination(testing::balance_edges(WeightedGraph::from_triplets(n, diagonals), shift).value());
}

TEST(Lamination, Validation) {
  EXPECT_TRUE(is_lamination(WeightedGraph(5)));
  EXPECT_FALSE(is_lamination(WeightedGraph::from_triplets(5, {{1, 3, 1}})));
  // Crossing support.
  auto crossing = testing::balance_edges(WeightedGraph::from_triplets(6, {{1, 4, 1}, {2, 5, 1}}));
  ASSERT_TRUE(crossing.has_value());
  EXPECT_FALSE(is_lamination(*crossing));
  EXPECT_CODE((void)(Lamination(*crossing)), ErrorCode::NotALamination);
  EXPECT_TRUE(is_lamination(balanced(6, {{1, 3, 1}, {4, 6, 1}}, 2).graph()));
  RationalGraph half(5);
  half.set_weight(1, 3, Rational(1, 2));
  half.set_weight(3, 4, Rational(-1, 2));
  half.set_weight(4, 5, Rational(1, 2));
  half.set_weight(1, 5, Rational(-1, 2));
  EXPECT_TRUE(is_lamination(half));
}

TEST(Phi, PentagonExamples) {
  const auto snake = snake_triangulation(5);
  const auto zero = Lamination::zero(5);
  EXPECT_EQ(phi(zero, snake).values, (std::vector<std::int64_t>{0, 0}));
  const auto l1 = phi_inverse(coords(snake, {-1, 0}));
  for (const auto& d : all_diagonals(5)) EXPECT_EQ(l1.graph().weight(d.i, d.j), (d == Segment{1, 4}) ? 1 : 0);
  EXPECT_EQ(phi(l1, snake).values, (std::vector<std::int64_t>{-1, 0}));
  EXPECT_EQ(phi_inverse(coords(snake, {0, 0})), zero);
  const auto l13 = balanced(5, {{1, 3, 2}});
  const auto own = Triangulation(5, {{1, 3}, {3, 5}});
  EXPECT_EQ(phi(l13, own).at({1, 3}), stats(l13.graph()).cut_at(1, 3) / 2);
  EXPECT_CODE((void)(phi(zero, Triangulation(5, {{1, 3}}))), ErrorCode::IncompleteTriangulation);
  EXPECT_CODE((void)(coords(snake, {1})), ErrorCode::SizeMismatch);
}

TEST(TropA, PentagonExamples) {
  const auto snake = snake_triangulation(5);
  EXPECT_EQ(trop_A(phi_inverse(coords(snake, {-1, 0})), {2, 4}), 1);
  EXPECT_EQ(trop_A(phi_inverse(coords(snake, {1, 0})), {2, 4}), -1);
  for (const auto& d : all_diagonals(5)) EXPECT_EQ(trop_A(Lamination::zero(5), d), 0);
  EXPECT_CODE((void)(trop_A(Lamination::zero(5), {1, 2})), ErrorCode::NotADiagonal);
}

TEST(ChartChange, PentagonExample) {
  const auto snake = snake_triangulation(5);
  const auto c = coords(snake, {-1, 0});
  const auto t2 = Triangulation(5, {{2, 4}, {2, 5}});
  const auto moved = chart_change(c, t2);
  EXPECT_EQ(moved.at({2, 4}), 1);
  EXPECT_EQ(moved.at({2, 5}), 1);
  EXPECT_EQ(chart_change(c, snake), c);
  EXPECT_CODE((void)(moved.at({1, 3})), ErrorCode::NotADiagonal);
}

TEST(Phi, RoundTripsInEveryChart) {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 8));
    const auto l = testing::random_lamination(rng, n, 4);
    const auto t = testing::random_triangulation(rng, n);
    EXPECT_EQ(phi_inverse(phi(l, t)), l);
  }
}

TEST(Phi, InverseOfArbitraryCoordinates) {
  Rng rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 8));
    const auto t = testing::random_triangulation(rng, n);
    std::vector<std::int64_t> v(t.size());
    for (auto& x : v) x = uniform(rng, -6, 6);
    const auto c = coords(t, v);
    EXPECT_EQ(phi(phi_inverse(c), t), c);
  }
}

TEST(Phi, IsAdditivePerChart) {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 8));
    const auto a = testing::random_lamination(rng, n, 3);
    const auto b = testing::random_lamination(rng, n, 3);
    const auto t = testing::random_triangulation(rng, n);
    // The sum of two laminations is a weighted graph, not necessarily a lamination.
    const auto s = stats(a.graph() + b.graph());
    const auto pa = phi(a, t);
    const auto pb = phi(b, t);
    for (std::size_t k = 0; k < t.size(); ++k) {
      const auto& d = t.diagonals()[k];
      EXPECT_EQ(s.cut_at(d.i, d.j), 2 * (pa.values[k] + pb.values[k]));
    }
  }
}

TEST(ChartChange, AgreesWithPhiInEveryChart) {
  Rng rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 7));
    const auto l = testing::random_lamination(rng, n, 4);
    const auto t1 = testing::random_triangulation(rng, n);
    const auto t2 = testing::random_triangulation(rng, n);
    const auto c1 = phi(l, t1);
    EXPECT_EQ(chart_change(c1, t2), phi(l, t2));
    EXPECT_EQ(chart_change(chart_change(c1, t2), t1), c1);
  }
}

TEST(TropA, TropicalPluckerAndEdges) {
  Rng rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 8));
    const auto a = trop_A_all(testing::random_lamination(rng, n, 4));
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(a(i, i), 0);
      EXPECT_EQ(a(i, i == n ? 1 : i + 1), 0);
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l)
            EXPECT_EQ(a(i, k) + a(j, l), std::max(a(i, j) + a(k, l), a(i, l) + a(j, k)));
  }
}

// trop_A is the tropicalization of the Plucker expansion of the diagonal,
// evaluated at the chart coordinates, in every chart.
TEST(TropA, MatchesTropicalizedExpansion) {
  Rng rng(46);
  for (int n = 4; n <= 7; ++n) {
    for (const auto& t : triangulations(n)) {
      PluckerExpander ex(t, ASpace::Reduced);
      for (int rep = 0; rep < 3; ++rep) {
        const auto l = testing::random_lamination(rng, n, 3);
        const auto c = phi(l, t);
        for (const auto& d : all_diagonals(n)) {
          EXPECT_EQ(tropicalize(ex.expand(d)).eval(c.values), trop_A(l, d));
        }
      }
    }
  }
}

TEST(Extension, MatchesTropA) {
  Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 8));
    const auto l = testing::random_lamination(rng, n, 3);
    const auto t = testing::random_triangulation(rng, n);
    EXPECT_EQ(tropical_extension(phi(l, t)), trop_A_all(l));
  }
}

TEST(RationalPoints, RoundTripAndHalfIntegers) {
  Rng rng(48);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 7));
    const auto t = testing::random_triangulation(rng, n);
    std::vector<Rational> v(t.size());
    for (auto& x : v) x = Rational(uniform(rng, -9, 9), uniform(rng, 1, 3));
    const auto c = make_coords(t, v);
    const auto l = phi_inverse(c);
    EXPECT_EQ(phi(l, t), c);
    const auto t2 = testing::random_triangulation(rng, n);
    EXPECT_EQ(chart_change(c, t2), phi(l, t2));
  }
}

}  // namespace
}  // namespace stasheff
