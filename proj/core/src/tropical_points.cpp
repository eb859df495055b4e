#include "stasheff/tropical_points.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "stasheff/cluster_atlas.hpp"
#include "stasheff/error.hpp"

namespace stasheff {

namespace {

template <class Scalar>
Scalar max_of(const Scalar& a, const Scalar& b) {
  return a < b ? b : a;
}

void require_complete(const Triangulation& t) {
  if (!t.complete()) throw Error(ErrorCode::IncompleteTriangulation, "chart needs a complete triangulation");
}

}  // namespace

template <class Scalar>
bool is_lamination(const BasicWeightedGraph<Scalar>& g) {
  const int n = g.n_gon();
  std::vector<Segment> support;
  for (const auto& [i, j, w] : g.triplets()) {
    Segment s{i, j};
    if (is_edge(s, n)) continue;
    if (w < Scalar{0}) return false;
    support.push_back(s);
  }
  for (std::size_t a = 0; a < support.size(); ++a)
    for (std::size_t b = a + 1; b < support.size(); ++b)
      if (crosses(support[a], support[b], n)) return false;
  for (const auto& r : vertex_sums(g))
    if (r != Scalar{0}) return false;
  return true;
}

template <class Scalar>
BasicLamination<Scalar>::BasicLamination(BasicWeightedGraph<Scalar> graph) : graph_(std::move(graph)) {
  if (!is_lamination(graph_)) {
    throw Error(ErrorCode::NotALamination, "graph has crossing support or non-zero vertex sums");
  }
}

template <class Scalar>
const Scalar& BasicTropicalCoords<Scalar>::at(const Segment& s) const {
  int k = chart.index_of(s);
  if (k < 0) throw Error(ErrorCode::NotADiagonal, "segment is not a diagonal of the chart");
  return values[static_cast<std::size_t>(k)];
}

template <class Scalar>
BasicTropicalCoords<Scalar> make_coords(Triangulation chart, std::vector<Scalar> values) {
  require_complete(chart);
  if (values.size() != chart.size()) throw Error(ErrorCode::SizeMismatch, "one value per chart diagonal required");
  return {std::move(chart), std::move(values)};
}

template <class Scalar>
BasicTropicalCoords<Scalar> phi(const BasicLamination<Scalar>& l, const Triangulation& t) {
  require_complete(t);
  if (t.n_gon() != l.n_gon()) throw Error(ErrorCode::SizeMismatch, "lamination and chart on different polygons");
  BasicTropicalCoords<Scalar> out{t, {}};
  for (const auto& d : t.diagonals()) out.values.push_back(half_exact(cut_value(l.graph(), d.i, d.j)));
  return out;
}

template <class Scalar>
SymmetricMatrix<Scalar> tropical_extension(const BasicTropicalCoords<Scalar>& coords) {
  const Triangulation& t = coords.chart;
  require_complete(t);
  const int n = t.n_gon();
  SymmetricMatrix<Scalar> a(n);
  SymmetricMatrix<char> known(n);
  for (int i = 1; i <= n; ++i) {
    known.set(i, i, 1);
    a.set(i, i, Scalar{0});
  }
  for (const auto& e : boundary_edges(n)) {
    a.set(e.i, e.j, Scalar{0});
    known.set(e.i, e.j, 1);
  }
  for (std::size_t k = 0; k < t.size(); ++k) {
    const auto& d = t.diagonals()[k];
    a.set(d.i, d.j, coords.values[k]);
    known.set(d.i, d.j, 1);
  }
  const auto triangles = t.triangles();

  // Same triangle recursion as the Laurent expansion, in max-plus form:
  // a_ac + a_jl = max(a_aj + a_cl, a_al + a_jc).
  std::function<Scalar(int, int)> value = [&](int p, int q) -> Scalar {
    if (known(p, q)) return a(p, q);
    const int lo = std::min(p, q);
    const int hi = std::max(p, q);
    for (const auto& tri : triangles) {
      if (std::find(tri.begin(), tri.end(), lo) == tri.end()) continue;
      std::array<int, 2> other{};
      std::size_t k = 0;
      for (int v : tri)
        if (v != lo) other[k++] = v;
      const int j = other[0];
      const int l = other[1];
      if (!crosses(Segment{std::min(j, l), std::max(j, l)}, Segment{lo, hi}, n)) continue;
      Scalar v = max_of(value(lo, j) + value(hi, l), value(lo, l) + value(j, hi)) - value(j, l);
      a.set(lo, hi, v);
      known.set(lo, hi, 1);
      return v;
    }
    throw Error(ErrorCode::InternalInvariant, "no chart triangle crossed by the segment");
  };
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) (void)value(p, q);
  return a;
}

template <class Scalar>
BasicLamination<Scalar> phi_inverse(const BasicTropicalCoords<Scalar>& coords) {
  const SymmetricMatrix<Scalar> a = tropical_extension(coords);
  const int n = a.n_gon();
  SymmetricMatrix<Scalar> cut(n);
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q) cut.set(p, q, a(p, q) + a(p, q));
  // u_pq = a_{q-1,p-1} + a_pq - a_{p,q-1} - a_{p-1,q}, via the cut inversion.
  return BasicLamination<Scalar>(graph_from_cut_stats(cut));
}

template <class Scalar>
Scalar trop_A(const BasicLamination<Scalar>& l, const Segment& d) {
  const Segment s = make_segment(d.i, d.j, l.n_gon());
  if (is_edge(s, l.n_gon())) throw Error(ErrorCode::NotADiagonal, "tropical cluster variables live on diagonals");
  return half_exact(cut_value(l.graph(), s.i, s.j));
}

template <class Scalar>
SymmetricMatrix<Scalar> trop_A_all(const BasicLamination<Scalar>& l) {
  const int n = l.n_gon();
  SymmetricMatrix<Scalar> out(n);
  for (int p = 1; p <= n; ++p) {
    out.set(p, p, Scalar{0});
    for (int q = p + 1; q <= n; ++q) out.set(p, q, half_exact(cut_value(l.graph(), p, q)));
  }
  return out;
}

template <class Scalar>
BasicTropicalCoords<Scalar> chart_change(const BasicTropicalCoords<Scalar>& coords, const Triangulation& t2) {
  require_complete(coords.chart);
  require_complete(t2);
  const int n = t2.n_gon();
  SymmetricMatrix<Scalar> a(n);
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q) a.set(p, q, Scalar{0});
  for (std::size_t k = 0; k < coords.chart.size(); ++k) {
    const auto& d = coords.chart.diagonals()[k];
    a.set(d.i, d.j, coords.values[k]);
  }
  Triangulation cur = coords.chart;
  for (const auto& d : flip_path(coords.chart, t2)) {
    Flip f = flip(cur, d);
    const auto [p, q, r, s] = f.quad;
    a.set(q, s, max_of(a(p, q) + a(r, s), a(q, r) + a(p, s)) - a(p, r));
    cur = f.result;
  }
  BasicTropicalCoords<Scalar> out{t2, {}};
  for (const auto& d : t2.diagonals()) out.values.push_back(a(d.i, d.j));
  return out;
}

#define STASHEFF_INSTANTIATE_TROPICAL(S)                                                           \
  template bool is_lamination(const BasicWeightedGraph<S>&);                                       \
  template class BasicLamination<S>;                                                               \
  template struct BasicTropicalCoords<S>;                                                          \
  template BasicTropicalCoords<S> make_coords(Triangulation, std::vector<S>);                      \
  template BasicTropicalCoords<S> phi(const BasicLamination<S>&, const Triangulation&);            \
  template SymmetricMatrix<S> tropical_extension(const BasicTropicalCoords<S>&);                   \
  template BasicLamination<S> phi_inverse(const BasicTropicalCoords<S>&);                          \
  template S trop_A(const BasicLamination<S>&, const Segment&);                                    \
  template SymmetricMatrix<S> trop_A_all(const BasicLamination<S>&);                               \
  template BasicTropicalCoords<S> chart_change(const BasicTropicalCoords<S>&, const Triangulation&);

STASHEFF_INSTANTIATE_TROPICAL(std::int64_t)
STASHEFF_INSTANTIATE_TROPICAL(Rational)

#undef STASHEFF_INSTANTIATE_TROPICAL

}  // namespace stasheff
