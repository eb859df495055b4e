#include "stasheff/weighted_graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "expect_code.hpp"
#include "generators.hpp"

namespace stasheff {
namespace {

using testing::Rng;
using testing::uniform;

WeightedGraph graph(int n, std::vector<WeightedGraph::Triplet> t) { return WeightedGraph::from_triplets(n, t); }

WeightedGraph random_graph(Rng& rng, int n, std::int64_t max_w) {
  WeightedGraph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const bool edge = is_edge(Segment{i, j}, n);
      g.set_weight(i, j, uniform(rng, edge ? -max_w : 0, max_w));
    }
  return g;
}

TEST(Stats, ZeroGraph) {
  const auto s = stats(WeightedGraph(6));
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(s.r_at(k), 0);
    for (int l = k; l <= 6; ++l) {
      EXPECT_EQ(s.gamma_at(k, l), 0);
      EXPECT_EQ(s.cut_at(k, l), 0);
    }
  }
}

TEST(Stats, SingleLongDiagonal) {
  const auto s = stats(graph(6, {{1, 4, 1}}));
  EXPECT_EQ(s.r_at(1), 1);
  EXPECT_EQ(s.r_at(4), 1);
  EXPECT_EQ(s.r_at(2), 0);
  EXPECT_EQ(s.cut_at(1, 3), 0);
  EXPECT_EQ(s.cut_at(1, 4), 1);
}

TEST(Stats, CrossingPairInPentagon) {
  const auto s = stats(graph(5, {{1, 3, 1}, {2, 4, 1}}));
  EXPECT_EQ(s.gamma_at(1, 4), 2);
  EXPECT_EQ(s.r_at(2), 1);
  EXPECT_EQ(s.cut_at(1, 3), 2);
}

// Oracle for the cut identity: I_kl = sum_{i in [k+1,l]} R_i - 2 Gamma over the
// same interval, evaluated here by brute force on ordered pairs.
TEST(Stats, CutIdentityHoldsOnRandomGraphs) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(uniform(rng, 3, 8));
    const auto g = random_graph(rng, n, 3);
    const auto s = stats(g);
    std::int64_t r_total = 0;
    for (int p = 1; p <= n; ++p) r_total += s.r_at(p);
    EXPECT_EQ(2 * s.gamma_at(1, n), r_total);
    for (int k = 1; k <= n; ++k) {
      for (int l = k + 1; l <= n; ++l) {
        std::int64_t r_sum = 0;
        for (int i = k + 1; i <= l; ++i) r_sum += s.r_at(i);
        const std::int64_t gamma = k + 1 <= l ? s.gamma_at(k + 1, l) : 0;
        EXPECT_EQ(s.cut_at(k, l), r_sum - 2 * gamma);
      }
    }
  }
}

TEST(Stats, CutsAreNonNegativeForNonNegativeWeights) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 8));
    WeightedGraph g(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) g.set_weight(i, j, uniform(rng, 0, 3));
    const auto s = stats(g);
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) EXPECT_GE(s.cut_at(k, l), 0);
  }
}

TEST(WeightedGraph, Validation) {
  EXPECT_CODE((void)(graph(5, {{1, 3, -1}})), ErrorCode::InvariantViolation);
  EXPECT_CODE((void)(graph(5, {{1, 1, 2}})), ErrorCode::InvariantViolation);
  EXPECT_CODE((void)(graph(5, {{1, 6, 2}})), ErrorCode::InvalidVertex);
  EXPECT_NO_THROW((void)graph(5, {{1, 2, -4}}));
  EXPECT_CODE((void)(WeightedGraph::from_matrix({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}})), ErrorCode::InvariantViolation);
  EXPECT_CODE((void)(WeightedGraph::from_matrix({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})), ErrorCode::InvariantViolation);
  const auto g = WeightedGraph::from_matrix({{0, 1, 2, 0}, {1, 0, -1, 0}, {2, -1, 0, 3}, {0, 0, 3, 0}});
  EXPECT_EQ(g.weight(1, 3), 2);
  EXPECT_EQ(g.weight(3, 1), 2);
  EXPECT_EQ(graph(5, {{1, 3, 1}, {3, 1, 2}}).weight(1, 3), 3);
}

TEST(Depth, Examples) {
  EXPECT_FALSE(depth(WeightedGraph(5)).has_value());
  EXPECT_EQ(depth(graph(6, {{1, 4, 1}})), 3);
  EXPECT_EQ(depth(graph(5, {{1, 2, -1}, {1, 4, 1}})), 1);
}

TEST(Dominates, Examples) {
  const auto g = graph(5, {{1, 3, 1}, {2, 4, 1}});
  EXPECT_TRUE(dominates(g, g));
  EXPECT_TRUE(dominates(graph(5, {{1, 4, 1}, {2, 3, 1}}), g));
  EXPECT_FALSE(dominates(graph(5, {{1, 3, 1}}), graph(5, {{2, 4, 1}})));
  EXPECT_CODE((void)(dominates(WeightedGraph(5), WeightedGraph(6))), ErrorCode::SizeMismatch);
}

TEST(Dominates, IsAPartialOrder) {
  Rng rng(13);
  // Graphs with a common vertex-sum vector, so comparisons are not vacuous.
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 6));
    std::vector<WeightedGraph> gs;
    const auto base = random_graph(rng, n, 2);
    gs.push_back(base);
    // Plucker children of base keep R and lower cuts.
    for (int k = 0; k < 4; ++k) {
      WeightedGraph cur = gs[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(gs.size()) - 1))];
      bool moved = false;
      for (int r = 1; r <= n && !moved; ++r)
        for (int s = r + 1; s <= n && !moved; ++s)
          for (int m = s + 1; m <= n && !moved; ++m)
            for (int t = m + 1; t <= n && !moved; ++t)
              if (cur.weight(r, m) > 0 && cur.weight(s, t) > 0 && uniform(rng, 0, 2) == 0) {
                cur.add_weight(r, m, -1);
                cur.add_weight(s, t, -1);
                if (uniform(rng, 0, 1)) {
                  cur.add_weight(r, t, 1);
                  cur.add_weight(s, m, 1);
                } else {
                  cur.add_weight(r, s, 1);
                  cur.add_weight(m, t, 1);
                }
                moved = true;
              }
      gs.push_back(cur);
    }
    for (const auto& a : gs) {
      EXPECT_TRUE(dominates(a, a));
      for (const auto& b : gs) {
        if (dominates(a, b) && dominates(b, a)) EXPECT_EQ(a, b);
        for (const auto& c : gs)
          if (dominates(a, b) && dominates(b, c)) EXPECT_TRUE(dominates(a, c));
      }
    }
  }
}

TEST(PluckerChildren, KeepVertexSumsAndSplitCutsByMax) {
  Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 8));
    auto g = random_graph(rng, n, 2);
    std::array<std::int64_t, 4> v{};
    for (auto& x : v) x = uniform(rng, 1, n);
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) continue;
    const auto [r, s, m, t] = v;
    g.add_weight(r, m, 1);
    g.add_weight(s, t, 1);
    WeightedGraph g1 = g;
    g1.add_weight(r, m, -1);
    g1.add_weight(s, t, -1);
    WeightedGraph g2 = g1;
    g1.add_weight(r, t, 1);
    g1.add_weight(s, m, 1);
    g2.add_weight(r, s, 1);
    g2.add_weight(m, t, 1);
    EXPECT_EQ(vertex_sums(g), vertex_sums(g1));
    EXPECT_EQ(vertex_sums(g), vertex_sums(g2));
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l)
        EXPECT_EQ(cut_value(g, k, l), std::max(cut_value(g1, k, l), cut_value(g2, k, l)));
  }
}

TEST(GraphFromCutStats, Examples) {
  EXPECT_EQ(graph_from_cut_stats(stats(WeightedGraph(5)).cut), WeightedGraph(5));
  const auto g = graph(5, {{1, 3, 1}});
  EXPECT_EQ(graph_from_cut_stats(stats(g).cut), g);
}

TEST(GraphFromCutStats, RoundTripOnRandomGraphs) {
  Rng rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(uniform(rng, 3, 9));
    const auto g = random_graph(rng, n, 3);
    EXPECT_EQ(graph_from_cut_stats(stats(g).cut), g);
  }
}

TEST(GraphFromCutStats, RejectsInconsistentData) {
  SymmetricMatrix<std::int64_t> cut(5);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) cut.set(i, j, 0);
  cut.set(1, 3, 1);
  EXPECT_CODE((void)(graph_from_cut_stats(cut)), ErrorCode::NonIntegral);
  cut.set(1, 3, 0);
  cut.set(2, 2, 4);
  EXPECT_CODE((void)(graph_from_cut_stats(cut)), ErrorCode::InvariantViolation);
}

TEST(RationalGraph, StatsAreExact) {
  RationalGraph g(5);
  g.set_weight(1, 3, Rational(1, 2));
  g.set_weight(2, 4, Rational(3, 2));
  const auto s = stats(g);
  EXPECT_EQ(s.cut_at(1, 3), Rational(2));
  EXPECT_EQ(graph_from_cut_stats(s.cut), g);
}

TEST(CrossingCount, Examples) {
  EXPECT_EQ(crossing_count(graph(5, {{1, 3, 2}, {2, 4, 3}})), 6);
  EXPECT_EQ(crossing_count(graph(6, {{1, 4, 1}, {2, 5, 1}, {3, 6, 1}})), 3);
  EXPECT_EQ(crossing_count(graph(6, {{1, 3, 1}, {1, 4, 1}, {1, 2, -5}})), 0);
}

// Disjoint-support pairs satisfying the order criterion: the smaller graph
// reaches shorter segments.
TEST(Depth, DecreasesAlongTheOrderForDisjointSupports) {
  Rng rng(16);
  int checked = 0;
  for (int trial = 0; trial < 3000 && checked < 40; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 6));
    const auto g1 = random_graph(rng, n, 1);
    const auto g2 = random_graph(rng, n, 1);
    if (g1.is_zero() || g2.is_zero() || g1 == g2 || !dominates(g1, g2)) continue;
    bool disjoint = true;
    for (const auto& [i, j, w] : g1.triplets())
      if (g2.weight(i, j) != 0) disjoint = false;
    if (!disjoint) continue;
    ++checked;
    EXPECT_LT(*depth(g1), *depth(g2));
  }
}

}  // namespace
}  // namespace stasheff
