#include "stasheff/canonical_basis.hpp"

#include <gtest/gtest.h>

#include "expect_code.hpp"
#include "generators.hpp"
#include "stasheff/cluster_atlas.hpp"
#include "stasheff/polytope.hpp"

namespace stasheff {
namespace {

using testing::Rng;
using testing::uniform;

const std::vector<std::string> kX{"X1", "X2"};

LaurentPolynomial P(std::string_view text) { return LaurentPolynomial::parse(text, kX); }

LaurentPolynomial product_of(const std::vector<Lamination>& pts) {
  const auto vars = x_vars(triangulation_seed(snake_triangulation(pts[0].n_gon())));
  LaurentPolynomial out = LaurentPolynomial::constant(vars, 1);
  for (const auto& l : pts) out *= ia_laurent(l);
  return out;
}

LaurentPolynomial recombine(const Expansion& e) {
  LaurentPolynomial out(x_vars(triangulation_seed(snake_triangulation(e.n_gon))));
  for (const auto& [l, c] : e.coeffs) out += ia_laurent(l) * c;
  return out;
}

Lamination sum(const Lamination& a, const Lamination& b) { return Lamination(a.graph() + b.graph()); }

TEST(IA, PentagonBasis) {
  const auto p = a2_points();
  EXPECT_EQ(ia_laurent(p[0]), P("X1^-1"));
  EXPECT_EQ(ia_laurent(p[1]), P("X2"));
  EXPECT_EQ(ia_laurent(p[2]), P("X1*X2 + X1"));
  EXPECT_EQ(ia_laurent(p[3]), P("X1 + X1*X2^-1 + X2^-1"));
  EXPECT_EQ(ia_laurent(p[4]), P("X2^-1 + X1^-1*X2^-1"));
  EXPECT_EQ(ia_laurent(Lamination::zero(5)), P("1"));
}

// Consecutive basis elements satisfy the A2 exchange relations
// I(l_{i-1}) I(l_{i+1}) = 1 + I(l_i).
TEST(IA, ExchangeRelations) {
  const auto p = a2_points();
  const auto one = P("1");
  for (int i = 0; i < 5; ++i) {
    const auto& prev = p[static_cast<std::size_t>((i + 4) % 5)];
    const auto& next = p[static_cast<std::size_t>((i + 1) % 5)];
    EXPECT_EQ(ia_laurent(prev) * ia_laurent(next), one + ia_laurent(p[static_cast<std::size_t>(i)])) << i;
  }
  // l2 + l4 = l3 in chart coordinates, and the sum of a compatible pair is a product.
  EXPECT_EQ(ia_laurent(sum(p[1], p[2])), ia_laurent(p[1]) * ia_laurent(p[2]));
}

TEST(IA, PullsBackToGraphMonomial) {
  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 7));
    const auto l = testing::random_lamination(rng, n, 2);
    const Seed seed = triangulation_seed(snake_triangulation(n));
    const MonomialLattice lattice(seed);
    LaurentPolynomial pulled(a_vars(seed));
    const auto f = ia_laurent(l);
    for (const auto& [b, c] : f.terms()) pulled.add_term(lattice.tau(b), c);
    EXPECT_EQ(pulled, graph_monomial_expansion(l.graph()));
  }
}

TEST(IA, RejectsUnbalancedGraphs) {
  // Not a lamination, so go through the monomial expansion directly.
  const auto g = WeightedGraph::from_triplets(5, {{1, 3, 1}});
  const MonomialLattice lattice(triangulation_seed(snake_triangulation(5)));
  bool off_lattice = false;
  const auto f = graph_monomial_expansion(g);
  for (const auto& [a, c] : f.terms()) off_lattice |= !lattice.tau_inverse(a).has_value();
  EXPECT_TRUE(off_lattice);
}

TEST(Expand, Examples) {
  const auto p = a2_points();
  const auto zero = Lamination::zero(5);
  const auto single = product_expand({p[2]});
  EXPECT_EQ(single.coeffs.size(), 1u);
  EXPECT_EQ(single.coefficient(p[2]), 1);
  const auto compatible = product_expand({p[0], p[1]});
  EXPECT_EQ(compatible.coeffs.size(), 1u);
  EXPECT_EQ(compatible.coefficient(sum(p[0], p[1])), 1);
  const auto e = product_expand({p[0], p[3]});
  EXPECT_EQ(e.coeffs.size(), 2u);
  EXPECT_EQ(e.coefficient(zero), 1);
  EXPECT_EQ(e.coefficient(p[4]), 1);
  EXPECT_EQ(support({p[0], p[3]}), (std::vector<Lamination>{std::min(zero, p[4]), std::max(zero, p[4])}));
  EXPECT_EQ(support({p[2], p[2]}), lattice_points(minkowski_c({p[2], p[2]})));
  EXPECT_CODE((void)(product_expand({})), ErrorCode::EmptyInput);
  EXPECT_CODE((void)(product_expand({zero, Lamination::zero(6)})), ErrorCode::SizeMismatch);
  EXPECT_CODE((void)(product_expand({p[0], p[3], p[0], p[3]}, {CrossingPolicy::SmallestFirst, 2})),
              ErrorCode::BudgetExceeded);
}

TEST(Expand, FindCrossing) {
  const auto g = WeightedGraph::from_triplets(6, {{1, 4, 1}, {2, 5, 1}, {3, 6, 1}});
  EXPECT_EQ(find_crossing(g, CrossingPolicy::SmallestFirst), (std::array<int, 4>{1, 2, 4, 5}));
  EXPECT_EQ(find_crossing(g, CrossingPolicy::LargestFirst), (std::array<int, 4>{2, 3, 5, 6}));
  EXPECT_EQ(find_crossing(WeightedGraph::from_triplets(6, {{1, 4, 1}, {1, 3, 1}}), CrossingPolicy::SmallestFirst),
            std::nullopt);
}

// Basis identity, confluence across policies, and non-negativity.
TEST(Expand, ReproducesTheProduct) {
  Rng rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 6));
    std::vector<Lamination> pts;
    const int m = static_cast<int>(uniform(rng, 1, 3));
    for (int k = 0; k < m; ++k) pts.push_back(testing::random_lamination(rng, n, 2));
    const auto e = product_expand(pts);
    const auto other = product_expand(pts, {CrossingPolicy::LargestFirst, 2'000'000});
    EXPECT_EQ(e, other);
    for (const auto& [l, c] : e.coeffs) EXPECT_GT(c, 0);
    EXPECT_EQ(recombine(e), product_of(pts));
  }
}

TEST(Expand, CompatiblePointsMultiply) {
  Rng rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 8));
    // Points supported on one triangulation are pairwise compatible.
    const auto t = testing::random_triangulation(rng, n);
    std::vector<Lamination> pts;
    WeightedGraph total(n);
    for (int k = 0; k < 3; ++k) {
      std::vector<std::int64_t> v(t.size());
      for (auto& x : v) x = uniform(rng, -2, 2);
      // Positive chart coordinates on T alone do not guarantee support in T,
      // so build the point from weights on T's diagonals.
      WeightedGraph g(n);
      for (const auto& d : t.diagonals()) g.set_weight(d.i, d.j, uniform(rng, 0, 2));
      auto balanced = testing::balance_edges(g, uniform(rng, -2, 2));
      if (!balanced) continue;
      pts.emplace_back(*balanced);
      total += *balanced;
    }
    if (pts.empty()) continue;
    const auto e = product_expand(pts);
    ASSERT_EQ(e.coeffs.size(), 1u);
    EXPECT_EQ(e.coefficient(Lamination(total)), 1);
  }
}

TEST(Support, MatchesLatticePoints) {
  Rng rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(uniform(rng, 4, 6));
    std::vector<Lamination> pts;
    for (int k = 0; k < 2; ++k) pts.push_back(testing::random_lamination(rng, n, 2));
    EXPECT_EQ(support(pts), lattice_points(minkowski_c(pts)));
  }
}

TEST(A2, CoefficientExamples) {
  EXPECT_EQ(a2_coefficient({0, 0, 0, 0, 0}, 1, 0, 0), 1);
  EXPECT_EQ(a2_coefficient({1, 0, 0, 1, 0}, 5, 0, 0), 1);
  EXPECT_EQ(a2_coefficient({1, 0, 0, 1, 0}, 5, 1, 0), 1);
  EXPECT_EQ(a2_coefficient({1, 0, 0, 1, 0}, 5, 0, 1), 0);
}

TEST(A2, CoefficientMatchesExpansion) {
  Rng rng(65);
  const auto p = a2_points();
  for (int trial = 0; trial < 30; ++trial) {
    std::array<std::int64_t, 5> d{};
    for (auto& x : d) x = uniform(rng, 0, 1);
    d[static_cast<std::size_t>(uniform(rng, 0, 4))] += 1;
    std::vector<Lamination> pts;
    std::int64_t total = 0;
    for (std::size_t k = 0; k < 5; ++k)
      for (std::int64_t r = 0; r < d[k]; ++r) pts.push_back(p[k]);
    for (auto x : d) total += x;
    const auto e = product_expand(pts);
    for (int i = 1; i <= 5; ++i)
      for (std::int64_t b = 0; b <= total; ++b)
        for (std::int64_t c = 0; c <= total; ++c) {
          WeightedGraph g(5);
          for (std::int64_t r = 0; r < b; ++r) g += p[static_cast<std::size_t>(i - 1)].graph();
          for (std::int64_t r = 0; r < c; ++r) g += p[static_cast<std::size_t>(i % 5)].graph();
          EXPECT_EQ(a2_coefficient(d, i, b, c), e.coefficient(Lamination(g)));
        }
  }
}

TEST(Verify, Examples) {
  const auto p = a2_points();
  EXPECT_TRUE(verify_positive_basis(product_expand({p[0], p[3]})).ok);
  EXPECT_TRUE(verify_positive_basis(product_expand({p[2]})).ok);
  auto corrupted = product_expand({p[0], p[3]});
  corrupted.coeffs[p[4]] += 1;
  const auto report = verify_positive_basis(corrupted);
  EXPECT_FALSE(report.ok);
  EXPECT_FALSE(report.detail.empty());
}

TEST(Verify, RandomProductsUpToHexagon) {
  Rng rng(66);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = static_cast<int>(uniform(rng, 5, 6));
    std::vector<Lamination> pts;
    for (int k = 0; k < 2; ++k) pts.push_back(testing::random_lamination(rng, n, 1));
    const auto report = verify_positive_basis(product_expand(pts));
    EXPECT_TRUE(report.ok) << report.detail;
  }
}

// Order correspondence: comparing products through their graphs agrees with
// comparing their supports.
TEST(Order, DominanceMatchesSupportInclusion) {
  Rng rng(67);
  int included = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Lamination> a{testing::random_lamination(rng, 5, 2)};
    std::vector<Lamination> b = a;
    if (trial % 2 == 0) b.push_back(testing::random_lamination(rng, 5, 1));
    else b = {testing::random_lamination(rng, 5, 2), testing::random_lamination(rng, 5, 1)};
    WeightedGraph ga(5), gb(5);
    for (const auto& l : a) ga += l.graph();
    for (const auto& l : b) gb += l.graph();
    const auto sa = support(a);
    const auto sb = support(b);
    const bool inc = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
    included += inc ? 1 : 0;
    EXPECT_EQ(dominates(ga, gb), inc);
  }
  EXPECT_GT(included, 0);
}

}  // namespace
}  // namespace stasheff
