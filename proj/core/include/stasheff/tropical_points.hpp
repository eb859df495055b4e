#pragma once

// Integer and rational points of the tropical A-space of type A_n, modelled as
// laminations (weighted graphs with non-crossing support and zero vertex
// sums), their coordinates in the chart of a triangulation, and tropical
// chart changes.

#include <compare>
#include <cstdint>
#include <vector>

#include "stasheff/numeric.hpp"
#include "stasheff/polygon.hpp"
#include "stasheff/weighted_graph.hpp"

namespace stasheff {

/// True iff diagonal weights are non-negative with non-crossing support and
/// every vertex sum vanishes.
template <class Scalar>
bool is_lamination(const BasicWeightedGraph<Scalar>& g);

template <class Scalar>
class BasicLamination {
 public:
  using scalar_type = Scalar;

  BasicLamination() = default;
  /// Throws NotALamination unless is_lamination(graph).
  explicit BasicLamination(BasicWeightedGraph<Scalar> graph);

  static BasicLamination zero(int n_gon) { return BasicLamination(BasicWeightedGraph<Scalar>(n_gon)); }

  [[nodiscard]] const BasicWeightedGraph<Scalar>& graph() const noexcept { return graph_; }
  [[nodiscard]] int n_gon() const noexcept { return graph_.n_gon(); }

  auto operator<=>(const BasicLamination&) const = default;
  bool operator==(const BasicLamination&) const = default;

 private:
  BasicWeightedGraph<Scalar> graph_;
};

using Lamination = BasicLamination<std::int64_t>;
using RationalLamination = BasicLamination<Rational>;

/// Values a_ij on the diagonals of a complete triangulation, stored in the
/// order of chart.diagonals().
template <class Scalar>
struct BasicTropicalCoords {
  Triangulation chart;
  std::vector<Scalar> values;

  /// Value on a diagonal of the chart; throws NotADiagonal otherwise.
  [[nodiscard]] const Scalar& at(const Segment& s) const;

  bool operator==(const BasicTropicalCoords&) const = default;
};

using TropicalCoords = BasicTropicalCoords<std::int64_t>;
using RationalTropicalCoords = BasicTropicalCoords<Rational>;

/// Checks completeness and the number of values.
template <class Scalar>
BasicTropicalCoords<Scalar> make_coords(Triangulation chart, std::vector<Scalar> values);

/// a_kl = I_kl / 2 for every diagonal {kl} of t. Throws IncompleteTriangulation.
template <class Scalar>
BasicTropicalCoords<Scalar> phi(const BasicLamination<Scalar>& l, const Triangulation& t);

/// Extends chart coordinates to every pair of vertices by the tropical
/// Plucker relation, with zero on edges and on the diagonal of the matrix.
template <class Scalar>
SymmetricMatrix<Scalar> tropical_extension(const BasicTropicalCoords<Scalar>& coords);

/// The lamination with the given chart coordinates.
template <class Scalar>
BasicLamination<Scalar> phi_inverse(const BasicTropicalCoords<Scalar>& coords);

/// Tropical cluster variable A_d^t(l) = I_d / 2. Throws NotADiagonal.
template <class Scalar>
Scalar trop_A(const BasicLamination<Scalar>& l, const Segment& d);

/// A^t on every pair of vertices (zero on edges and i = j).
template <class Scalar>
SymmetricMatrix<Scalar> trop_A_all(const BasicLamination<Scalar>& l);

/// Moves coordinates to the chart t2 by tropical flips along flip_path.
template <class Scalar>
BasicTropicalCoords<Scalar> chart_change(const BasicTropicalCoords<Scalar>& coords, const Triangulation& t2);

}  // namespace stasheff
