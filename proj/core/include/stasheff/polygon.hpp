#pragma once

// Combinatorics of a convex N-gon with vertices labeled 1..N clockwise:
// segments, crossings, triangulations and compatibility of diagonals.

#include <array>
#include <compare>
#include <cstddef>
#include <ostream>
#include <vector>

namespace stasheff {

/// Unordered pair of polygon vertices, stored with i < j. The polygon size is
/// carried by the calling context.
struct Segment {
  int i = 0;
  int j = 0;

  auto operator<=>(const Segment&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Segment& s);

/// Maps any integer onto the cyclic label range 1..n_gon.
constexpr int cyclic_vertex(int v, int n_gon) {
  int r = (v - 1) % n_gon;
  if (r < 0) r += n_gon;
  return r + 1;
}

/// Canonical segment {a, b}. Throws InvalidVertex for labels outside 1..n_gon
/// or a == b.
Segment make_segment(int a, int b, int n_gon);

bool is_edge(const Segment& s, int n_gon);
bool is_diagonal(const Segment& s, int n_gon);

/// True iff the open chords intersect. Segments sharing a vertex never cross.
bool crosses(const Segment& s1, const Segment& s2, int n_gon);

/// min(|i-j|, N-|i-j|).
int segment_length(const Segment& s, int n_gon);

/// Type-A compatibility degree: 1 for crossing diagonals, 0 otherwise.
int compatibility_degree(const Segment& s1, const Segment& s2, int n_gon);

/// All diagonals in lexicographic order; there are N(N-3)/2 of them.
std::vector<Segment> all_diagonals(int n_gon);

/// The N boundary edges, sorted.
std::vector<Segment> boundary_edges(int n_gon);

/// Set of pairwise non-crossing diagonals. Partial triangulations are allowed;
/// complete() tells whether the set is maximal.
class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(int n_gon, std::vector<Segment> diagonals);

  [[nodiscard]] int n_gon() const noexcept { return n_gon_; }
  [[nodiscard]] const std::vector<Segment>& diagonals() const noexcept { return diagonals_; }
  [[nodiscard]] std::size_t size() const noexcept { return diagonals_.size(); }
  [[nodiscard]] bool complete() const noexcept {
    return n_gon_ >= 3 && diagonals_.size() == static_cast<std::size_t>(n_gon_ - 3);
  }
  [[nodiscard]] bool contains(const Segment& s) const;
  /// Position of s in diagonals(), or -1.
  [[nodiscard]] int index_of(const Segment& s) const;

  /// Diagonals outside the set that are compatible with every member.
  [[nodiscard]] std::vector<Segment> supplement() const;

  /// Triangles of a complete triangulation as sorted vertex triples.
  [[nodiscard]] std::vector<std::array<int, 3>> triangles() const;

  auto operator<=>(const Triangulation&) const = default;

 private:
  int n_gon_ = 0;
  std::vector<Segment> diagonals_;
};

std::ostream& operator<<(std::ostream& os, const Triangulation& t);

/// All complete triangulations, ordered lexicographically by their sorted
/// diagonal lists. Throws InvalidPolygon for n_gon < 3.
std::vector<Triangulation> triangulations(int n_gon);

/// The fan {1,3},{1,4},...,{1,N-1}; the base chart throughout the library.
Triangulation snake_triangulation(int n_gon);

}  // namespace stasheff
