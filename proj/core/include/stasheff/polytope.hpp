#pragma once

// Regions of the tropical A-space cut out by bounds c_ij on the tropical
// cluster variables: recognition of Stasheff polytopes, faces, vertices,
// lattice points and convex hulls. Bounds are integers.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "stasheff/polygon.hpp"
#include "stasheff/tropical_points.hpp"

namespace stasheff {

/// Bounds c_ij on every diagonal of an N-gon; c = 0 on edges is implicit.
class StasheffSpec {
 public:
  StasheffSpec() = default;
  /// All-zero bounds.
  explicit StasheffSpec(int n_gon);
  /// Throws InvariantViolation unless every diagonal gets exactly one value,
  /// NotADiagonal for entries on edges.
  StasheffSpec(int n_gon, const std::map<Segment, std::int64_t>& c);

  [[nodiscard]] int n_gon() const noexcept { return n_gon_; }
  [[nodiscard]] const std::map<Segment, std::int64_t>& values() const noexcept { return c_; }
  /// c on a diagonal, 0 on an edge.
  [[nodiscard]] std::int64_t at(const Segment& s) const;
  [[nodiscard]] std::int64_t at(int i, int j) const;
  void set(const Segment& d, std::int64_t v);

  bool operator==(const StasheffSpec&) const = default;

 private:
  int n_gon_ = 0;
  std::map<Segment, std::int64_t> c_;
};

/// The face F_c^T: equalities on T, inequalities on the supplement of T.
struct Face {
  StasheffSpec spec;
  Triangulation t;
};

/// c_d = sum_k A_d^t(l_k). Throws EmptyInput, SizeMismatch.
StasheffSpec minkowski_c(const std::vector<Lamination>& points);

/// c_ac + c_bd >= max(c_ab + c_cd, c_bc + c_ad) for all a < b < c < d.
bool is_stasheff(const StasheffSpec& spec);
/// Every vertex of every chart satisfies all the defining inequalities.
bool is_stasheff_by_vertices(const StasheffSpec& spec);
/// All quadruple inequalities hold strictly.
bool is_nondegenerate(const StasheffSpec& spec);

/// Coordinates (c_ij) for ij in T. Throws IncompleteTriangulation.
TropicalCoords vertex(const StasheffSpec& spec, const Triangulation& t);

/// A_d^t(x) <= c_d for every diagonal d.
bool in_region(const StasheffSpec& spec, const Lamination& x);
bool face_membership(const Face& face, const Lamination& x);

/// Integer laminations in F_c^empty, sorted. The region is linearised in the
/// chart `chart` (the snake chart when empty) and bounded by Fourier-Motzkin
/// elimination. Throws Unbounded when some coordinate has no finite bound.
std::vector<Lamination> lattice_points(const StasheffSpec& spec, const Triangulation& chart = {});

/// Per-coordinate integer bounds of the region in a chart; nullopt when the
/// linearised system is infeasible.
std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> coordinate_bounds(const StasheffSpec& spec,
                                                                                      const Triangulation& chart);

/// Whether x lies in the convex hull of S: in every chart, phi(x) lies in the
/// ordinary hull of phi(S) shifted down by the non-negative orthant. Throws
/// EmptyInput.
bool hull_membership(const std::vector<Lamination>& s, const Lamination& x);

/// Componentwise sum. Throws NotStasheff, SizeMismatch.
StasheffSpec minkowski_sum_sets(const StasheffSpec& s1, const StasheffSpec& s2);

/// A point x with non-positive snake coordinates and the spec of
/// {x} + F_c^empty, whose lattice points have non-positive snake coordinates.
std::pair<Lamination, StasheffSpec> shift_to_negative_part(const StasheffSpec& spec);

/// Exact phase-one simplex: is {y >= 0 : A y = b} non-empty?
bool feasible(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

}  // namespace stasheff
