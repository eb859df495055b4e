#pragma once

// The canonical basis I_A(l) of positive functions on the X-space of type
// A_n, products of basis elements and their expansions, and the closed-form
// structure coefficients for A_2.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stasheff/exact_algebra.hpp"
#include "stasheff/numeric.hpp"
#include "stasheff/tropical_points.hpp"

namespace stasheff {

/// I_A(l) as a Laurent polynomial in the X-chart X1..Xn of the snake
/// triangulation. Throws NotInImageLattice when some monomial of the
/// pulled-back product is not of the form p*(X^b).
LaurentPolynomial ia_laurent(const Lamination& l);

/// prod A_ij^{w_ij} of a weighted graph in the snake A-chart with coefficients.
LaurentPolynomial graph_monomial_expansion(const WeightedGraph& g);

/// Which crossing pair a Plucker move smooths first.
enum class CrossingPolicy { SmallestFirst, LargestFirst };

struct ExpandOptions {
  CrossingPolicy policy = CrossingPolicy::SmallestFirst;
  /// Maximum number of distinct graphs processed.
  std::size_t node_budget = 2'000'000;
};

/// Decomposition of prod_k I_A(l_k) = sum_l c(l) I_A(l); coefficients > 0.
struct Expansion {
  int n_gon = 0;
  std::vector<Lamination> points;
  std::map<Lamination, BigInt> coeffs;

  [[nodiscard]] BigInt coefficient(const Lamination& l) const;
  bool operator==(const Expansion&) const = default;
};

/// The first crossing pair ({r,m}, {s,t}), r < s < m < t, under the policy;
/// nullopt when the diagonal support is non-crossing.
std::optional<std::array<int, 4>> find_crossing(const WeightedGraph& g, CrossingPolicy policy);

/// Splits sum(points) by Plucker moves until every graph is non-crossing.
/// Throws EmptyInput, SizeMismatch, BudgetExceeded.
Expansion product_expand(const std::vector<Lamination>& points, const ExpandOptions& options = {});

/// Keys of product_expand(points), sorted.
std::vector<Lamination> support(const std::vector<Lamination>& points, const ExpandOptions& options = {});

/// The five points l_1..l_5 of the A_2 fan; l_i and l_{i+1} are compatible.
std::array<Lamination, 5> a2_points();

/// Closed-form coefficient of b*l_i + c*l_{i+1} in prod_j I_A(l_j)^{d_j}
/// (i is 1-based and read mod 5).
BigInt a2_coefficient(const std::array<std::int64_t, 5>& d, int i, std::int64_t b, std::int64_t c);

struct VerifyReport {
  bool ok = true;
  /// Chart where a check failed, if it was chart-specific.
  std::optional<Triangulation> failing_chart;
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
};

/// Re-expands sum c(l) I_A(l), compares with the product of the defining
/// points, and checks non-negativity in the base chart and, for n <= 3, in
/// every X-chart.
VerifyReport verify_positive_basis(const Expansion& f);

}  // namespace stasheff
