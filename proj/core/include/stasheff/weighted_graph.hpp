#pragma once

// Weighted graphs on the segments of a convex N-gon, the interval/vertex/cut
// statistics Gamma, R and I, and the partial-order test built on them.

#include <compare>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "stasheff/numeric.hpp"
#include "stasheff/polygon.hpp"

namespace stasheff {

/// Dense symmetric N x N matrix addressed with 1-based vertex labels.
template <class Scalar>
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n_gon) : n_(n_gon), data_(static_cast<std::size_t>(n_gon * n_gon)) {}

  [[nodiscard]] int n_gon() const noexcept { return n_; }
  [[nodiscard]] const Scalar& operator()(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, const Scalar& v) {
    data_[index(i, j)] = v;
    data_[index(j, i)] = v;
  }

  auto operator<=>(const SymmetricMatrix&) const = default;
  bool operator==(const SymmetricMatrix&) const = default;

 private:
  [[nodiscard]] std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }
  int n_ = 0;
  std::vector<Scalar> data_;
};

/// Integer (or rational) weights on the segments of an N-gon. Diagonal weights
/// are non-negative; edge weights are unrestricted; w_ii = 0.
template <class Scalar>
class BasicWeightedGraph {
 public:
  using scalar_type = Scalar;
  using Triplet = std::tuple<int, int, Scalar>;

  BasicWeightedGraph() = default;
  explicit BasicWeightedGraph(int n_gon);

  /// Builds from a sparse list; repeated pairs accumulate. Throws
  /// InvariantViolation for self-loops or negative diagonal weights.
  static BasicWeightedGraph from_triplets(int n_gon, const std::vector<Triplet>& triplets);

  /// Builds from a full matrix (0-based rows), checking symmetry, the zero
  /// diagonal and non-negativity on polygon diagonals.
  static BasicWeightedGraph from_matrix(const std::vector<std::vector<Scalar>>& rows);

  [[nodiscard]] int n_gon() const noexcept { return w_.n_gon(); }
  [[nodiscard]] const Scalar& weight(int i, int j) const { return w_(i, j); }
  [[nodiscard]] const Scalar& weight(const Segment& s) const { return w_(s.i, s.j); }
  void set_weight(int i, int j, const Scalar& w);
  void add_weight(int i, int j, const Scalar& dw) { set_weight(i, j, w_(i, j) + dw); }

  [[nodiscard]] bool is_zero() const;
  /// Non-zero entries with i < j, lexicographic.
  [[nodiscard]] std::vector<Triplet> triplets() const;

  BasicWeightedGraph& operator+=(const BasicWeightedGraph& other);
  friend BasicWeightedGraph operator+(BasicWeightedGraph a, const BasicWeightedGraph& b) {
    a += b;
    return a;
  }

  auto operator<=>(const BasicWeightedGraph&) const = default;
  bool operator==(const BasicWeightedGraph&) const = default;

 private:
  SymmetricMatrix<Scalar> w_;
};

using WeightedGraph = BasicWeightedGraph<std::int64_t>;
using RationalGraph = BasicWeightedGraph<Rational>;

template <class Scalar>
struct BasicGraphStats {
  /// Gamma(k, l) for k <= l; zero elsewhere.
  SymmetricMatrix<Scalar> gamma;
  /// R_p, index p-1.
  std::vector<Scalar> r;
  /// I(k, l) over the cyclic cut I = [k+1, l]; symmetric, I(k, k) = 0.
  SymmetricMatrix<Scalar> cut;

  [[nodiscard]] const Scalar& gamma_at(int k, int l) const { return gamma(k, l); }
  [[nodiscard]] const Scalar& r_at(int p) const { return r[static_cast<std::size_t>(p - 1)]; }
  [[nodiscard]] const Scalar& cut_at(int k, int l) const { return cut(k, l); }
};

using GraphStats = BasicGraphStats<std::int64_t>;

/// Cyclic vertex interval [p, q] = {p, ..., q} with wraparound when p > q.
std::vector<int> cyclic_interval(int p, int q, int n_gon);

template <class Scalar>
BasicGraphStats<Scalar> stats(const BasicWeightedGraph<Scalar>& g);

/// Cut value I(k, l) alone.
template <class Scalar>
Scalar cut_value(const BasicWeightedGraph<Scalar>& g, int k, int l);

/// Vertex sums R_p, index p-1.
template <class Scalar>
std::vector<Scalar> vertex_sums(const BasicWeightedGraph<Scalar>& g);

/// Minimum length of a segment with non-zero weight; nullopt for the zero graph.
template <class Scalar>
std::optional<int> depth(const BasicWeightedGraph<Scalar>& g);

/// R(G1) == R(G2) and I_kl(G1) <= I_kl(G2) on every diagonal: decides
/// I(G1) <= I(G2). Throws SizeMismatch.
template <class Scalar>
bool dominates(const BasicWeightedGraph<Scalar>& g1, const BasicWeightedGraph<Scalar>& g2);

/// Inverts stats(g).cut: w_ij = (I_ij + I_{i-1,j-1} - I_{i,j-1} - I_{i-1,j}) / 2.
/// Throws NonIntegral when an integer weight would be fractional and
/// InvariantViolation for a negative diagonal weight or malformed input.
template <class Scalar>
BasicWeightedGraph<Scalar> graph_from_cut_stats(const SymmetricMatrix<Scalar>& cut);

/// Total crossing count: sum of w_a * w_b over crossing diagonal pairs.
template <class Scalar>
Scalar crossing_count(const BasicWeightedGraph<Scalar>& g);

/// Exact halving; NonIntegral for odd integers.
std::int64_t half_exact(std::int64_t v);
Rational half_exact(const Rational& v);

}  // namespace stasheff
