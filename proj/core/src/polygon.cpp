#include "stasheff/polygon.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "stasheff/error.hpp"

namespace stasheff {

namespace {

void check_vertex(int v, int n_gon) {
  if (v < 1 || v > n_gon) {
    throw Error(ErrorCode::InvalidVertex,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_gon));
  }
}

void check_segment(const Segment& s, int n_gon) {
  check_vertex(s.i, n_gon);
  check_vertex(s.j, n_gon);
  if (s.i == s.j) throw Error(ErrorCode::InvalidVertex, "degenerate segment");
}

// Triangulations of the convex polygon on the sub-range [lo, hi] of labels,
// where {lo, hi} is a side (an edge or an already chosen diagonal).
std::vector<std::vector<Segment>> triangulate_range(int lo, int hi, int n_gon) {
  if (hi - lo < 2) return {{}};
  std::vector<std::vector<Segment>> out;
  for (int apex = lo + 1; apex < hi; ++apex) {
    auto left = triangulate_range(lo, apex, n_gon);
    auto right = triangulate_range(apex, hi, n_gon);
    for (const auto& l : left) {
      for (const auto& r : right) {
        std::vector<Segment> diags = l;
        diags.insert(diags.end(), r.begin(), r.end());
        if (apex - lo >= 2) diags.push_back({lo, apex});
        if (hi - apex >= 2) diags.push_back({apex, hi});
        out.push_back(std::move(diags));
      }
    }
  }
  return out;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Segment& s) {
  return os << '{' << s.i << ',' << s.j << '}';
}

Segment make_segment(int a, int b, int n_gon) {
  if (n_gon < 3) throw Error(ErrorCode::InvalidPolygon, "polygon needs at least 3 vertices");
  Segment s{std::min(a, b), std::max(a, b)};
  check_segment(s, n_gon);
  return s;
}

bool is_edge(const Segment& s, int n_gon) {
  check_segment(s, n_gon);
  int d = std::abs(s.i - s.j);
  return d == 1 || d == n_gon - 1;
}

bool is_diagonal(const Segment& s, int n_gon) { return !is_edge(s, n_gon); }

bool crosses(const Segment& s1, const Segment& s2, int n_gon) {
  check_segment(s1, n_gon);
  check_segment(s2, n_gon);
  int a = std::min(s1.i, s1.j);
  int b = std::max(s1.i, s1.j);
  auto strictly_inside = [&](int v) { return a < v && v < b; };
  auto on_chord = [&](int v) { return v == a || v == b; };
  if (on_chord(s2.i) || on_chord(s2.j)) return false;
  return strictly_inside(s2.i) != strictly_inside(s2.j);
}

int segment_length(const Segment& s, int n_gon) {
  check_segment(s, n_gon);
  int d = std::abs(s.i - s.j);
  return std::min(d, n_gon - d);
}

int compatibility_degree(const Segment& s1, const Segment& s2, int n_gon) {
  if (is_edge(s1, n_gon) || is_edge(s2, n_gon)) {
    throw Error(ErrorCode::NotADiagonal, "compatibility degree is defined on diagonals");
  }
  return crosses(s1, s2, n_gon) ? 1 : 0;
}

std::vector<Segment> all_diagonals(int n_gon) {
  if (n_gon < 3) throw Error(ErrorCode::InvalidPolygon, "polygon needs at least 3 vertices");
  std::vector<Segment> out;
  for (int i = 1; i <= n_gon; ++i) {
    for (int j = i + 2; j <= n_gon; ++j) {
      if (i == 1 && j == n_gon) continue;
      out.push_back({i, j});
    }
  }
  return out;
}

std::vector<Segment> boundary_edges(int n_gon) {
  if (n_gon < 3) throw Error(ErrorCode::InvalidPolygon, "polygon needs at least 3 vertices");
  std::vector<Segment> out;
  for (int i = 1; i < n_gon; ++i) out.push_back({i, i + 1});
  out.push_back({1, n_gon});
  std::sort(out.begin(), out.end());
  return out;
}

Triangulation::Triangulation(int n_gon, std::vector<Segment> diagonals)
    : n_gon_(n_gon), diagonals_(std::move(diagonals)) {
  if (n_gon_ < 3) throw Error(ErrorCode::InvalidPolygon, "polygon needs at least 3 vertices");
  for (auto& d : diagonals_) {
    d = make_segment(d.i, d.j, n_gon_);
    if (is_edge(d, n_gon_)) throw Error(ErrorCode::NotADiagonal, "triangulations hold diagonals only");
  }
  std::sort(diagonals_.begin(), diagonals_.end());
  diagonals_.erase(std::unique(diagonals_.begin(), diagonals_.end()), diagonals_.end());
  for (std::size_t a = 0; a < diagonals_.size(); ++a) {
    for (std::size_t b = a + 1; b < diagonals_.size(); ++b) {
      if (crosses(diagonals_[a], diagonals_[b], n_gon_)) {
        throw Error(ErrorCode::InvariantViolation, "triangulation contains crossing diagonals");
      }
    }
  }
}

bool Triangulation::contains(const Segment& s) const { return index_of(s) >= 0; }

int Triangulation::index_of(const Segment& s) const {
  auto it = std::lower_bound(diagonals_.begin(), diagonals_.end(), s);
  if (it == diagonals_.end() || *it != s) return -1;
  return static_cast<int>(it - diagonals_.begin());
}

std::vector<Segment> Triangulation::supplement() const {
  std::vector<Segment> out;
  for (const auto& d : all_diagonals(n_gon_)) {
    if (contains(d)) continue;
    bool ok = std::none_of(diagonals_.begin(), diagonals_.end(),
                           [&](const Segment& t) { return crosses(d, t, n_gon_); });
    if (ok) out.push_back(d);
  }
  return out;
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
  if (!complete()) throw Error(ErrorCode::IncompleteTriangulation, "triangles need a complete triangulation");
  auto connected = [&](int a, int b) {
    Segment s{std::min(a, b), std::max(a, b)};
    return is_edge(s, n_gon_) || contains(s);
  };
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a <= n_gon_; ++a) {
    for (int b = a + 1; b <= n_gon_; ++b) {
      if (!connected(a, b)) continue;
      for (int c = b + 1; c <= n_gon_; ++c) {
        if (connected(a, c) && connected(b, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Triangulation& t) {
  os << '[';
  for (std::size_t k = 0; k < t.diagonals().size(); ++k) {
    if (k) os << ',';
    os << t.diagonals()[k];
  }
  return os << ']';
}

std::vector<Triangulation> triangulations(int n_gon) {
  if (n_gon < 3) throw Error(ErrorCode::InvalidPolygon, "polygon needs at least 3 vertices");
  std::vector<Triangulation> out;
  for (auto& diags : triangulate_range(1, n_gon, n_gon)) out.emplace_back(n_gon, std::move(diags));
  std::sort(out.begin(), out.end(), [](const Triangulation& x, const Triangulation& y) {
    return x.diagonals() < y.diagonals();
  });
  return out;
}

Triangulation snake_triangulation(int n_gon) {
  if (n_gon < 3) throw Error(ErrorCode::InvalidPolygon, "polygon needs at least 3 vertices");
  std::vector<Segment> diags;
  for (int j = 3; j <= n_gon - 1; ++j) diags.push_back({1, j});
  return Triangulation(n_gon, std::move(diags));
}

}  // namespace stasheff
