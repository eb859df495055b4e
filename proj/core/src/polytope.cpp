#include "stasheff/polytope.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "stasheff/cluster_atlas.hpp"
#include "stasheff/error.hpp"
#include "stasheff/exact_algebra.hpp"

namespace stasheff {

namespace {

// sum_k coef[k] * x_k <= rhs
struct Row {
  std::vector<BigInt> coef;
  BigInt rhs;

  bool operator<(const Row& o) const { return std::tie(coef, rhs) < std::tie(o.coef, o.rhs); }
};

Row normalised(Row r) {
  BigInt g = 0;
  for (const auto& c : r.coef) g = gcd(g, abs(c));
  if (g > 1) {
    for (auto& c : r.coef) c /= g;
    // Integer points only: the bound may be rounded down.
    r.rhs = floor_div(Rational(r.rhs, g));
  }
  return r;
}

bool is_zero_row(const Row& r) {
  return std::all_of(r.coef.begin(), r.coef.end(), [](const BigInt& c) { return c == 0; });
}

// Eliminates variable j; returns false when a contradiction 0 <= negative shows up.
bool eliminate(std::set<Row>& rows, std::size_t j) {
  std::vector<Row> pos;
  std::vector<Row> neg;
  std::set<Row> next;
  for (const auto& r : rows) {
    if (r.coef[j] > 0) pos.push_back(r);
    else if (r.coef[j] < 0) neg.push_back(r);
    else next.insert(r);
  }
  for (const auto& p : pos) {
    for (const auto& q : neg) {
      Row combo{std::vector<BigInt>(p.coef.size()), 0};
      const BigInt fp = -q.coef[j];
      const BigInt fq = p.coef[j];
      for (std::size_t k = 0; k < p.coef.size(); ++k) combo.coef[k] = fp * p.coef[k] + fq * q.coef[k];
      combo.rhs = fp * p.rhs + fq * q.rhs;
      combo = normalised(std::move(combo));
      if (is_zero_row(combo)) {
        if (combo.rhs < 0) return false;
        continue;
      }
      next.insert(std::move(combo));
    }
  }
  rows = std::move(next);
  return true;
}

struct Linearised {
  Triangulation chart;
  std::vector<Segment> diagonals;
  std::vector<TropicalFunction> forms;
  std::vector<std::int64_t> bounds;
};

Linearised linearise(const StasheffSpec& spec, const Triangulation& chart_in) {
  const int n = spec.n_gon();
  Triangulation chart = chart_in.n_gon() == 0 ? snake_triangulation(n) : chart_in;
  if (chart.n_gon() != n) throw Error(ErrorCode::SizeMismatch, "chart and spec on different polygons");
  if (!chart.complete()) throw Error(ErrorCode::IncompleteTriangulation, "working chart must be complete");
  Linearised lin{chart, all_diagonals(n), {}, {}};
  PluckerExpander ex(chart, ASpace::Reduced);
  for (const auto& d : lin.diagonals) {
    lin.forms.push_back(tropicalize(ex.expand(d)));
    lin.bounds.push_back(spec.at(d));
  }
  return lin;
}

std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> bounds_of(const Linearised& lin) {
  const std::size_t dim = lin.chart.size();
  std::set<Row> rows;
  for (std::size_t k = 0; k < lin.forms.size(); ++k) {
    for (const auto& f : lin.forms[k].linear_forms()) {
      Row r{std::vector<BigInt>(dim), lin.bounds[k]};
      for (std::size_t v = 0; v < dim; ++v) r.coef[v] = f[v];
      r = normalised(std::move(r));
      if (is_zero_row(r)) {
        if (r.rhs < 0) return std::nullopt;
        continue;
      }
      rows.insert(std::move(r));
    }
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::size_t keep = 0; keep < dim; ++keep) {
    std::set<Row> sys = rows;
    for (std::size_t j = 0; j < dim; ++j) {
      if (j == keep) continue;
      if (!eliminate(sys, j)) return std::nullopt;
    }
    std::optional<BigInt> lo;
    std::optional<BigInt> hi;
    for (const auto& r : sys) {
      const BigInt& a = r.coef[keep];
      if (a > 0) {
        BigInt ub = floor_div(Rational(r.rhs, a));
        if (!hi || ub < *hi) hi = ub;
      } else if (a < 0) {
        BigInt lb = ceil_div(Rational(-r.rhs, -a));
        if (!lo || lb > *lo) lo = lb;
      }
    }
    if (!lo || !hi) {
      throw Error(ErrorCode::Unbounded, "coordinate " + std::to_string(keep + 1) + " has no finite bound");
    }
    if (*lo > *hi) return std::nullopt;
    out.emplace_back(static_cast<std::int64_t>(*lo), static_cast<std::int64_t>(*hi));
  }
  return out;
}

template <class F>
void for_each_quadruple(int n, F&& f) {
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) f(a, b, c, d);
}

}  // namespace

StasheffSpec::StasheffSpec(int n_gon) : n_gon_(n_gon) {
  for (const auto& d : all_diagonals(n_gon)) c_[d] = 0;
}

StasheffSpec::StasheffSpec(int n_gon, const std::map<Segment, std::int64_t>& c) : n_gon_(n_gon) {
  for (const auto& [s, v] : c) {
    Segment d = make_segment(s.i, s.j, n_gon);
    if (is_edge(d, n_gon)) throw Error(ErrorCode::NotADiagonal, "bounds are given on diagonals only");
    if (!c_.emplace(d, v).second) throw Error(ErrorCode::InvariantViolation, "repeated diagonal in spec");
  }
  if (c_.size() != all_diagonals(n_gon).size()) {
    throw Error(ErrorCode::InvariantViolation, "spec must give a value on every diagonal");
  }
}

std::int64_t StasheffSpec::at(const Segment& s) const {
  Segment d = make_segment(s.i, s.j, n_gon_);
  if (is_edge(d, n_gon_)) return 0;
  return c_.at(d);
}

std::int64_t StasheffSpec::at(int i, int j) const { return at(Segment{i, j}); }

void StasheffSpec::set(const Segment& s, std::int64_t v) {
  Segment d = make_segment(s.i, s.j, n_gon_);
  if (is_edge(d, n_gon_)) throw Error(ErrorCode::NotADiagonal, "bounds are given on diagonals only");
  c_[d] = v;
}

StasheffSpec minkowski_c(const std::vector<Lamination>& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "Minkowski sum of no points");
  const int n = points.front().n_gon();
  StasheffSpec spec(n);
  for (const auto& l : points) {
    if (l.n_gon() != n) throw Error(ErrorCode::SizeMismatch, "points on different polygons");
    for (const auto& d : all_diagonals(n)) spec.set(d, spec.at(d) + trop_A(l, d));
  }
  return spec;
}

bool is_stasheff(const StasheffSpec& spec) {
  bool ok = true;
  for_each_quadruple(spec.n_gon(), [&](int a, int b, int c, int d) {
    auto x = spec.at(a, c) + spec.at(b, d);
    if (x < std::max(spec.at(a, b) + spec.at(c, d), spec.at(b, c) + spec.at(a, d))) ok = false;
  });
  return ok;
}

bool is_nondegenerate(const StasheffSpec& spec) {
  bool ok = true;
  for_each_quadruple(spec.n_gon(), [&](int a, int b, int c, int d) {
    auto x = spec.at(a, c) + spec.at(b, d);
    if (x <= std::max(spec.at(a, b) + spec.at(c, d), spec.at(b, c) + spec.at(a, d))) ok = false;
  });
  return ok;
}

bool is_stasheff_by_vertices(const StasheffSpec& spec) {
  const auto diags = all_diagonals(spec.n_gon());
  for (const auto& t : triangulations(spec.n_gon())) {
    const auto a = tropical_extension(vertex(spec, t));
    for (const auto& d : diags)
      if (a(d.i, d.j) > spec.at(d)) return false;
  }
  return true;
}

TropicalCoords vertex(const StasheffSpec& spec, const Triangulation& t) {
  if (t.n_gon() != spec.n_gon()) throw Error(ErrorCode::SizeMismatch, "chart and spec on different polygons");
  if (!t.complete()) throw Error(ErrorCode::IncompleteTriangulation, "vertices are indexed by complete charts");
  TropicalCoords out{t, {}};
  for (const auto& d : t.diagonals()) out.values.push_back(spec.at(d));
  return out;
}

bool in_region(const StasheffSpec& spec, const Lamination& x) {
  if (x.n_gon() != spec.n_gon()) throw Error(ErrorCode::SizeMismatch, "point and spec on different polygons");
  for (const auto& [d, c] : spec.values())
    if (trop_A(x, d) > c) return false;
  return true;
}

bool face_membership(const Face& face, const Lamination& x) {
  const auto& spec = face.spec;
  if (x.n_gon() != spec.n_gon() || face.t.n_gon() != spec.n_gon()) {
    throw Error(ErrorCode::SizeMismatch, "face and point on different polygons");
  }
  for (const auto& d : face.t.diagonals())
    if (trop_A(x, d) != spec.at(d)) return false;
  for (const auto& d : face.t.supplement())
    if (trop_A(x, d) > spec.at(d)) return false;
  return true;
}

std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> coordinate_bounds(const StasheffSpec& spec,
                                                                                      const Triangulation& chart) {
  return bounds_of(linearise(spec, chart));
}

std::vector<Lamination> lattice_points(const StasheffSpec& spec, const Triangulation& chart) {
  const Linearised lin = linearise(spec, chart);
  const auto box = bounds_of(lin);
  std::vector<Lamination> out;
  if (!box) return out;
  const std::size_t dim = box->size();
  std::vector<std::int64_t> x(dim);
  for (std::size_t k = 0; k < dim; ++k) x[k] = (*box)[k].first;
  while (true) {
    bool inside = true;
    for (std::size_t k = 0; k < lin.forms.size() && inside; ++k) inside = lin.forms[k].eval(x) <= lin.bounds[k];
    if (inside) out.push_back(phi_inverse(make_coords(lin.chart, x)));
    std::size_t k = 0;
    while (k < dim && x[k] == (*box)[k].second) {
      x[k] = (*box)[k].first;
      ++k;
    }
    if (k == dim) break;
    ++x[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool feasible(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw Error(ErrorCode::DimensionMismatch, "one right-hand side per row");
  const std::size_t nv = m == 0 ? 0 : a.front().size();
  const std::size_t cols = nv + m;  // originals, artificials; rhs kept apart
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != nv) throw Error(ErrorCode::DimensionMismatch, "ragged constraint matrix");
    const bool flip_row = b[i] < 0;
    for (std::size_t j = 0; j < nv; ++j) tab[i][j] = flip_row ? -a[i][j] : a[i][j];
    tab[i][nv + i] = 1;
    tab[i][cols] = flip_row ? -b[i] : b[i];
    basis[i] = nv + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> obj(cols + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) obj[j] -= tab[i][j];
    obj[cols] -= tab[i][cols];
  }
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][cols] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // cannot happen for a phase-one objective bounded below by 0
    const Rational piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const Rational f = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    if (obj[enter] != 0) {
      const Rational f = obj[enter];
      for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  return obj[cols] == 0;
}

bool hull_membership(const std::vector<Lamination>& s, const Lamination& x) {
  if (s.empty()) throw Error(ErrorCode::EmptyInput, "hull of an empty set");
  const int n = x.n_gon();
  for (const auto& p : s)
    if (p.n_gon() != n) throw Error(ErrorCode::SizeMismatch, "points on different polygons");
  for (const auto& t : triangulations(n)) {
    const std::size_t dim = t.size();
    const std::size_t np = s.size();
    // sum_s lambda_s phi(s)_k - slack_k = phi(x)_k,  sum_s lambda_s = 1.
    std::vector<std::vector<Rational>> a(dim + 1, std::vector<Rational>(np + dim));
    std::vector<Rational> b(dim + 1);
    for (std::size_t p = 0; p < np; ++p) {
      const auto coords = phi(s[p], t);
      for (std::size_t k = 0; k < dim; ++k) a[k][p] = coords.values[k];
      a[dim][p] = 1;
    }
    const auto target = phi(x, t);
    for (std::size_t k = 0; k < dim; ++k) {
      a[k][np + k] = -1;
      b[k] = target.values[k];
    }
    b[dim] = 1;
    if (!feasible(a, b)) return false;
  }
  return true;
}

StasheffSpec minkowski_sum_sets(const StasheffSpec& s1, const StasheffSpec& s2) {
  if (s1.n_gon() != s2.n_gon()) throw Error(ErrorCode::SizeMismatch, "specs on different polygons");
  if (!is_stasheff(s1) || !is_stasheff(s2)) throw Error(ErrorCode::NotStasheff, "summand is not a Stasheff spec");
  StasheffSpec out = s1;
  for (const auto& [d, c] : s2.values()) out.set(d, out.at(d) + c);
  return out;
}

std::pair<Lamination, StasheffSpec> shift_to_negative_part(const StasheffSpec& spec) {
  const int n = spec.n_gon();
  const Triangulation snake = snake_triangulation(n);
  std::int64_t s = 0;
  for (const auto& d : snake.diagonals()) s = std::max(s, spec.at(d));
  Lamination x = phi_inverse(make_coords(snake, std::vector<std::int64_t>(snake.size(), -s)));
  StasheffSpec shifted = spec;
  for (const auto& d : all_diagonals(n)) shifted.set(d, spec.at(d) + trop_A(x, d));
  return {x, shifted};
}

}  // namespace stasheff
