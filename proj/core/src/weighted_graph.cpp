#include "stasheff/weighted_graph.hpp"

#include <algorithm>
#include <string>

#include "stasheff/error.hpp"

namespace stasheff {

namespace {

template <class Scalar>
bool diagonal_pair(int i, int j, int n_gon) {
  int d = std::abs(i - j);
  return d != 0 && d != 1 && d != n_gon - 1;
}

template <class Scalar>
void check_weight(int i, int j, int n_gon, const Scalar& w) {
  if (i < 1 || i > n_gon || j < 1 || j > n_gon) {
    throw Error(ErrorCode::InvalidVertex, "weight index outside the polygon");
  }
  if (i == j) {
    if (w != Scalar{0}) throw Error(ErrorCode::InvariantViolation, "non-zero weight on a self-loop");
    return;
  }
  if (diagonal_pair<Scalar>(i, j, n_gon) && w < Scalar{0}) {
    throw Error(ErrorCode::InvariantViolation,
                "negative weight on diagonal {" + std::to_string(i) + "," + std::to_string(j) + "}");
  }
}

}  // namespace

std::int64_t half_exact(std::int64_t v) {
  if (v % 2 != 0) throw Error(ErrorCode::NonIntegral, "odd value " + std::to_string(v) + " cannot be halved");
  return v / 2;
}

Rational half_exact(const Rational& v) { return v / 2; }

std::vector<int> cyclic_interval(int p, int q, int n_gon) {
  std::vector<int> out;
  int v = cyclic_vertex(p, n_gon);
  int end = cyclic_vertex(q, n_gon);
  while (true) {
    out.push_back(v);
    if (v == end) break;
    v = cyclic_vertex(v + 1, n_gon);
  }
  return out;
}

template <class Scalar>
BasicWeightedGraph<Scalar>::BasicWeightedGraph(int n_gon) : w_(n_gon) {
  if (n_gon < 3) throw Error(ErrorCode::InvalidPolygon, "polygon needs at least 3 vertices");
  for (int i = 1; i <= n_gon; ++i)
    for (int j = 1; j <= n_gon; ++j) w_.set(i, j, Scalar{0});
}

template <class Scalar>
BasicWeightedGraph<Scalar> BasicWeightedGraph<Scalar>::from_triplets(int n_gon,
                                                                   const std::vector<Triplet>& triplets) {
  BasicWeightedGraph g(n_gon);
  for (const auto& [i, j, w] : triplets) {
    if (i < 1 || i > n_gon || j < 1 || j > n_gon) {
      throw Error(ErrorCode::InvalidVertex, "weight index outside the polygon");
    }
    if (i == j) {
      if (w != Scalar{0}) throw Error(ErrorCode::InvariantViolation, "non-zero weight on a self-loop");
      continue;
    }
    g.w_.set(i, j, g.w_(i, j) + w);
  }
  for (int i = 1; i <= n_gon; ++i)
    for (int j = i + 1; j <= n_gon; ++j) check_weight(i, j, n_gon, g.w_(i, j));
  return g;
}

template <class Scalar>
BasicWeightedGraph<Scalar> BasicWeightedGraph<Scalar>::from_matrix(const std::vector<std::vector<Scalar>>& rows) {
  const int n = static_cast<int>(rows.size());
  BasicWeightedGraph g(n);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != n) throw Error(ErrorCode::InvariantViolation, "matrix is not square");
  }
  for (int i = 1; i <= n; ++i) {
    if (rows[i - 1][i - 1] != Scalar{0}) throw Error(ErrorCode::InvariantViolation, "non-zero matrix diagonal");
    for (int j = i + 1; j <= n; ++j) {
      const Scalar& a = rows[i - 1][j - 1];
      if (a != rows[j - 1][i - 1]) throw Error(ErrorCode::InvariantViolation, "matrix is not symmetric");
      check_weight(i, j, n, a);
      g.w_.set(i, j, a);
    }
  }
  return g;
}

template <class Scalar>
void BasicWeightedGraph<Scalar>::set_weight(int i, int j, const Scalar& w) {
  check_weight(i, j, n_gon(), w);
  if (i == j) return;
  w_.set(i, j, w);
}

template <class Scalar>
bool BasicWeightedGraph<Scalar>::is_zero() const {
  for (int i = 1; i <= n_gon(); ++i)
    for (int j = i + 1; j <= n_gon(); ++j)
      if (w_(i, j) != Scalar{0}) return false;
  return true;
}

template <class Scalar>
auto BasicWeightedGraph<Scalar>::triplets() const -> std::vector<Triplet> {
  std::vector<Triplet> out;
  for (int i = 1; i <= n_gon(); ++i)
    for (int j = i + 1; j <= n_gon(); ++j)
      if (w_(i, j) != Scalar{0}) out.emplace_back(i, j, w_(i, j));
  return out;
}

template <class Scalar>
BasicWeightedGraph<Scalar>& BasicWeightedGraph<Scalar>::operator+=(const BasicWeightedGraph& other) {
  if (other.n_gon() != n_gon()) throw Error(ErrorCode::SizeMismatch, "graphs on different polygons");
  for (int i = 1; i <= n_gon(); ++i)
    for (int j = i + 1; j <= n_gon(); ++j) w_.set(i, j, w_(i, j) + other.w_(i, j));
  return *this;
}

template <class Scalar>
Scalar cut_value(const BasicWeightedGraph<Scalar>& g, int k, int l) {
  const int n = g.n_gon();
  if (cyclic_vertex(k, n) == cyclic_vertex(l, n)) return Scalar{0};
  std::vector<char> inside(static_cast<std::size_t>(n + 1), 0);
  for (int v : cyclic_interval(k + 1, l, n)) inside[static_cast<std::size_t>(v)] = 1;
  Scalar total{0};
  for (int i = 1; i <= n; ++i) {
    if (!inside[static_cast<std::size_t>(i)]) continue;
    for (int j = 1; j <= n; ++j) {
      if (!inside[static_cast<std::size_t>(j)]) total += g.weight(i, j);
    }
  }
  return total;
}

template <class Scalar>
std::vector<Scalar> vertex_sums(const BasicWeightedGraph<Scalar>& g) {
  std::vector<Scalar> r(static_cast<std::size_t>(g.n_gon()), Scalar{0});
  for (int p = 1; p <= g.n_gon(); ++p)
    for (int j = 1; j <= g.n_gon(); ++j) r[static_cast<std::size_t>(p - 1)] += g.weight(p, j);
  return r;
}

template <class Scalar>
BasicGraphStats<Scalar> stats(const BasicWeightedGraph<Scalar>& g) {
  const int n = g.n_gon();
  BasicGraphStats<Scalar> s{SymmetricMatrix<Scalar>(n), vertex_sums(g), SymmetricMatrix<Scalar>(n)};
  for (int k = 1; k <= n; ++k) {
    for (int l = k; l <= n; ++l) {
      // Summing ordered pairs then halving keeps integer arithmetic exact.
      Scalar ordered{0};
      for (int i = k; i <= l; ++i)
        for (int j = k; j <= l; ++j) ordered += g.weight(i, j);
      s.gamma.set(k, l, half_exact(ordered));
      if (k == l) {
        s.cut.set(k, l, Scalar{0});
      } else {
        s.cut.set(k, l, cut_value(g, k, l));
      }
    }
  }
  // Only Gamma(k, l) with k <= l is meaningful; the mirrored slot holds the same value.
  return s;
}

template <class Scalar>
std::optional<int> depth(const BasicWeightedGraph<Scalar>& g) {
  std::optional<int> best;
  for (const auto& [i, j, w] : g.triplets()) {
    int len = segment_length(Segment{i, j}, g.n_gon());
    if (!best || len < *best) best = len;
  }
  return best;
}

template <class Scalar>
bool dominates(const BasicWeightedGraph<Scalar>& g1, const BasicWeightedGraph<Scalar>& g2) {
  if (g1.n_gon() != g2.n_gon()) throw Error(ErrorCode::SizeMismatch, "graphs on different polygons");
  if (vertex_sums(g1) != vertex_sums(g2)) return false;
  for (const auto& d : all_diagonals(g1.n_gon())) {
    if (cut_value(g1, d.i, d.j) > cut_value(g2, d.i, d.j)) return false;
  }
  return true;
}

template <class Scalar>
BasicWeightedGraph<Scalar> graph_from_cut_stats(const SymmetricMatrix<Scalar>& cut) {
  const int n = cut.n_gon();
  for (int k = 1; k <= n; ++k) {
    if (cut(k, k) != Scalar{0}) throw Error(ErrorCode::InvariantViolation, "cut data needs I_kk = 0");
  }
  auto at = [&](int a, int b) -> const Scalar& { return cut(cyclic_vertex(a, n), cyclic_vertex(b, n)); };
  BasicWeightedGraph<Scalar> g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Scalar twice = at(i, j) + at(i - 1, j - 1) - at(i, j - 1) - at(i - 1, j);
      g.set_weight(i, j, half_exact(twice));
    }
  }
  return g;
}

template <class Scalar>
Scalar crossing_count(const BasicWeightedGraph<Scalar>& g) {
  const int n = g.n_gon();
  std::vector<std::tuple<int, int, Scalar>> diags;
  for (const auto& t : g.triplets()) {
    if (diagonal_pair<Scalar>(std::get<0>(t), std::get<1>(t), n)) diags.push_back(t);
  }
  Scalar total{0};
  for (std::size_t a = 0; a < diags.size(); ++a) {
    for (std::size_t b = a + 1; b < diags.size(); ++b) {
      const auto& [i1, j1, w1] = diags[a];
      const auto& [i2, j2, w2] = diags[b];
      if (crosses(Segment{i1, j1}, Segment{i2, j2}, n)) total += w1 * w2;
    }
  }
  return total;
}

#define STASHEFF_INSTANTIATE_GRAPH(S)                                                  \
  template class BasicWeightedGraph<S>;                                                \
  template BasicGraphStats<S> stats(const BasicWeightedGraph<S>&);                     \
  template S cut_value(const BasicWeightedGraph<S>&, int, int);                        \
  template std::vector<S> vertex_sums(const BasicWeightedGraph<S>&);                   \
  template std::optional<int> depth(const BasicWeightedGraph<S>&);                     \
  template bool dominates(const BasicWeightedGraph<S>&, const BasicWeightedGraph<S>&); \
  template BasicWeightedGraph<S> graph_from_cut_stats(const SymmetricMatrix<S>&);      \
  template S crossing_count(const BasicWeightedGraph<S>&);

STASHEFF_INSTANTIATE_GRAPH(std::int64_t)
STASHEFF_INSTANTIATE_GRAPH(Rational)

#undef STASHEFF_INSTANTIATE_GRAPH

}  // namespace stasheff
