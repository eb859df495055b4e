#pragma once

// Seeds, mutations and the charts of the type-A cluster ensemble. Charts of the
// A-space are indexed by triangulations of the (n+3)-gon; moving between them
// follows flips. Indices of a seed are 0-based in the C++ API; serialized
// mutation words are 1-based.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stasheff/exact_algebra.hpp"
#include "stasheff/numeric.hpp"
#include "stasheff/polygon.hpp"

namespace stasheff {

/// Exchange datum (I, I0, epsilon, d) with I = {0..m-1}.
struct Seed {
  std::vector<std::vector<int>> epsilon;
  std::vector<bool> frozen;
  std::vector<Rational> d;
  /// Display labels; variable names are "A" + label and "X" + label.
  std::vector<std::string> labels;

  [[nodiscard]] std::size_t size() const noexcept { return epsilon.size(); }
  [[nodiscard]] std::vector<std::size_t> unfrozen() const;

  bool operator==(const Seed&) const = default;
};

/// Validates shape, I0 membership and epsilon_ij / d_j = -epsilon_ji / d_i.
/// Throws InvariantViolation. Missing labels default to "1".."m".
Seed make_seed(std::vector<std::vector<int>> epsilon, std::vector<bool> frozen, std::vector<Rational> d,
               std::vector<std::string> labels = {});

/// Skew-symmetric A_n exchange matrix read off the Cartan matrix.
Seed seed_from_cartan_An(int n);

/// Throws FrozenDirection when k is frozen (or out of range).
Seed mutate_seed(const Seed& s, std::size_t k);

/// A-chart variable names, one per index.
std::vector<std::string> a_vars(const Seed& s);
/// X-chart variable names "X1".."Xn", one per unfrozen index in order.
std::vector<std::string> x_vars(const Seed& s);

/// Images of the mutated X-coordinates X'_i as functions of the current ones
/// (one per unfrozen index). The exponent uses epsilon_ik.
std::vector<RationalFunction> x_substitution(const Seed& s, std::size_t k);

/// Images of the mutated A-coordinates A'_i as functions of the current ones
/// (one per index of the seed).
std::vector<RationalFunction> a_substitution(const Seed& s, std::size_t k);

/// The monomial prod_j A_j^{epsilon_ij}. Throws FrozenDirection for frozen i.
LaurentPolynomial p_star(const Seed& s, std::size_t i);

/// Replaces cluster variable k by (prod A_j^{e_kj>0} + prod A_j^{-e_kj<0}) / A_k,
/// with every entry given as a Laurent polynomial in some fixed initial chart.
std::vector<LaurentPolynomial> mutate_cluster(const Seed& s, const std::vector<LaurentPolynomial>& cluster,
                                              std::size_t k);

/// tau(b)_j = sum_i b_i epsilon_ij over unfrozen i.
class MonomialLattice {
 public:
  explicit MonomialLattice(Seed seed);

  [[nodiscard]] const Seed& seed() const noexcept { return seed_; }
  [[nodiscard]] bool injective() const noexcept { return pivots_.size() == rows_.size(); }
  [[nodiscard]] std::vector<int> tau(const std::vector<int>& b) const;
  /// The unique b with tau(b) = a, or nullopt when a is off the image lattice.
  /// Throws RankDeficient when tau is not injective, DimensionMismatch on size.
  [[nodiscard]] std::optional<std::vector<int>> tau_inverse(const std::vector<int>& a) const;

 private:
  Seed seed_;
  std::vector<std::size_t> rows_;               // unfrozen indices
  std::vector<std::size_t> pivots_;             // columns of an invertible square block
  std::vector<std::vector<Rational>> inverse_;  // inverse of that block
};

// ---------------------------------------------------------------------------
// Type-A atlas keyed by triangulations.

enum class ASpace { Reduced, WithCoefficients };
enum class ChartKind { A, X };

struct Chart {
  ChartKind kind = ChartKind::A;
  Triangulation label;
  /// Segments carrying a variable, in variable order.
  std::vector<Segment> segments;
  std::vector<std::string> vars;
};

/// Variable name "A_i_j" of a segment.
std::string segment_var(const Segment& s);

/// A-chart of T: diagonals of T in slot order, then (with coefficients) the
/// boundary edges. slot_order defaults to the sorted diagonals of T.
Chart a_chart(const Triangulation& t, ASpace space, std::span<const Segment> slot_order = {});
/// X-chart of T: one variable X1..Xn per diagonal in slot order.
Chart x_chart(const Triangulation& t, std::span<const Segment> slot_order = {});

/// Seed with coefficients attached to a complete triangulation: unfrozen
/// indices are the diagonals (slot order), frozen ones the edges; every
/// triangle contributes a clockwise 3-cycle of arrows.
Seed triangulation_seed(const Triangulation& t, std::span<const Segment> slot_order = {});

struct Flip {
  Triangulation result;
  Segment removed;
  Segment added;
  /// Quadrilateral p, q, r, s (clockwise) with removed = {p, r}, added = {q, s}.
  std::array<int, 4> quad;
};

/// Throws NotADiagonal if d is not in t, IncompleteTriangulation for partial t.
Flip flip(const Triangulation& t, const Segment& d);

/// Diagonals to flip, in order, along a shortest path of the flip graph.
/// Ties are broken by trying removals in lexicographic order.
std::vector<Segment> flip_path(const Triangulation& from, const Triangulation& to);

/// Mutation word (0-based slots) from `from` to `to`, with slots initially
/// holding the sorted diagonals of `from`. `final_slots` receives the slot
/// contents after the word.
std::vector<std::size_t> mutation_word(const Triangulation& from, const Triangulation& to,
                                       std::vector<Segment>* final_slots = nullptr);

/// Memoised Plucker expansion of A_d in a fixed chart.
class PluckerExpander {
 public:
  PluckerExpander(Triangulation t, ASpace space);

  [[nodiscard]] const Chart& chart() const noexcept { return chart_; }
  /// Laurent polynomial of A_s in the chart (edges give 1 in the reduced space).
  const LaurentPolynomial& expand(const Segment& s);

 private:
  Triangulation t_;
  ASpace space_;
  Chart chart_;
  std::vector<std::array<int, 3>> triangles_;
  std::map<Segment, LaurentPolynomial> memo_;
};

/// A_diag in the chart of t. Throws IncompleteTriangulation.
LaurentPolynomial expand_A_variable(const Segment& diag, const Triangulation& t, ASpace space);

/// Rewrites a Laurent polynomial in the X-chart of `seed` into the chart
/// reached by the mutation word, by substitution and exact division. Throws
/// NotDivisible when f is not Laurent in some intermediate chart.
LaurentPolynomial expand_in_X_chart(const LaurentPolynomial& f, const Seed& seed,
                                    std::span<const std::size_t> word);

/// One step of expand_in_X_chart.
LaurentPolynomial mutate_x_function(const LaurentPolynomial& f, const Seed& seed, std::size_t k);

}  // namespace stasheff
