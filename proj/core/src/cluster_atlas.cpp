#include "stasheff/cluster_atlas.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "stasheff/error.hpp"

namespace stasheff {

namespace {

int sgn(int v) { return (v > 0) - (v < 0); }

std::size_t unfrozen_position(const Seed& s, std::size_t k) {
  if (k >= s.size() || s.frozen[k]) {
    throw Error(ErrorCode::FrozenDirection, "index " + std::to_string(k + 1) + " is frozen or out of range");
  }
  std::size_t pos = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (!s.frozen[i]) ++pos;
  return pos;
}

std::vector<Segment> resolve_slots(const Triangulation& t, std::span<const Segment> slot_order) {
  if (slot_order.empty()) return t.diagonals();
  std::vector<Segment> slots(slot_order.begin(), slot_order.end());
  std::vector<Segment> sorted = slots;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != t.diagonals()) {
    throw Error(ErrorCode::InvariantViolation, "slot order is not a permutation of the chart");
  }
  return slots;
}

}  // namespace

std::vector<std::size_t> Seed::unfrozen() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (!frozen[i]) out.push_back(i);
  return out;
}

Seed make_seed(std::vector<std::vector<int>> epsilon, std::vector<bool> frozen, std::vector<Rational> d,
               std::vector<std::string> labels) {
  const std::size_t m = epsilon.size();
  for (const auto& row : epsilon)
    if (row.size() != m) throw Error(ErrorCode::InvariantViolation, "exchange matrix is not square");
  if (frozen.empty()) frozen.assign(m, false);
  if (d.empty()) d.assign(m, Rational(1));
  if (frozen.size() != m || d.size() != m) throw Error(ErrorCode::InvariantViolation, "seed vectors differ in length");
  for (const auto& di : d)
    if (di <= 0) throw Error(ErrorCode::InvariantViolation, "multipliers d_i must be positive");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // epsilon_ij / d_j == -epsilon_ji / d_i
      if (Rational(epsilon[i][j]) * d[i] != -Rational(epsilon[j][i]) * d[j]) {
        throw Error(ErrorCode::InvariantViolation, "exchange matrix is not skew-symmetrizable by d");
      }
    }
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < m; ++i) labels.push_back(std::to_string(i + 1));
  }
  if (labels.size() != m) throw Error(ErrorCode::InvariantViolation, "one label per index required");
  return Seed{std::move(epsilon), std::move(frozen), std::move(d), std::move(labels)};
}

Seed seed_from_cartan_An(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidPolygon, "rank must be at least 1");
  const auto m = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> eps(m, std::vector<int>(m, 0));
  // Cartan matrix has -1 on both off-diagonals; drop the 2s, flip signs below.
  for (std::size_t i = 0; i + 1 < m; ++i) {
    eps[i][i + 1] = 1;
    eps[i + 1][i] = -1;
  }
  return make_seed(std::move(eps), {}, {});
}

Seed mutate_seed(const Seed& s, std::size_t k) {
  (void)unfrozen_position(s, k);
  Seed out = s;
  const std::size_t m = s.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const int e = s.epsilon[i][j];
      if (i == k || j == k) {
        out.epsilon[i][j] = -e;
      } else if (s.epsilon[i][k] * s.epsilon[k][j] > 0) {
        out.epsilon[i][j] = e + std::abs(s.epsilon[i][k]) * s.epsilon[k][j];
      } else {
        out.epsilon[i][j] = e;
      }
    }
  }
  return out;
}

std::vector<std::string> a_vars(const Seed& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (const auto& l : s.labels) out.push_back("A" + l);
  return out;
}

std::vector<std::string> x_vars(const Seed& s) {
  std::vector<std::string> out;
  for (std::size_t pos = 0; pos < s.unfrozen().size(); ++pos) out.push_back("X" + std::to_string(pos + 1));
  return out;
}

std::vector<RationalFunction> x_substitution(const Seed& s, std::size_t k) {
  const std::size_t kp = unfrozen_position(s, k);
  const auto vars = x_vars(s);
  const auto idx = s.unfrozen();
  const auto one = LaurentPolynomial::constant(vars, 1);
  std::vector<RationalFunction> out;
  for (std::size_t ip = 0; ip < idx.size(); ++ip) {
    const std::size_t i = idx[ip];
    if (i == k) {
      out.push_back({LaurentPolynomial::variable(vars, kp, -1), one});
      continue;
    }
    const int e = s.epsilon[i][k];
    LaurentPolynomial xi = LaurentPolynomial::variable(vars, ip);
    if (e == 0) {
      out.push_back({xi, one});
      continue;
    }
    LaurentPolynomial base = one + LaurentPolynomial::variable(vars, kp, -sgn(e));
    if (-e > 0) {
      out.push_back({xi * pow(base, static_cast<unsigned>(-e)), one});
    } else {
      out.push_back({xi, pow(base, static_cast<unsigned>(e))});
    }
  }
  return out;
}

std::vector<RationalFunction> a_substitution(const Seed& s, std::size_t k) {
  (void)unfrozen_position(s, k);
  const auto vars = a_vars(s);
  const std::size_t m = s.size();
  const auto one = LaurentPolynomial::constant(vars, 1);
  std::vector<RationalFunction> out;
  for (std::size_t i = 0; i < m; ++i) {
    if (i != k) {
      out.push_back({LaurentPolynomial::variable(vars, i), one});
      continue;
    }
    Exponent plus(m, 0);
    Exponent minus(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      if (s.epsilon[k][j] > 0) plus[j] = s.epsilon[k][j];
      if (s.epsilon[k][j] < 0) minus[j] = -s.epsilon[k][j];
    }
    LaurentPolynomial num = LaurentPolynomial::monomial(vars, plus) + LaurentPolynomial::monomial(vars, minus);
    out.push_back({std::move(num), LaurentPolynomial::variable(vars, k)});
  }
  return out;
}

LaurentPolynomial p_star(const Seed& s, std::size_t i) {
  (void)unfrozen_position(s, i);
  Exponent e(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) e[j] = s.epsilon[i][j];
  return LaurentPolynomial::monomial(a_vars(s), std::move(e));
}

std::vector<LaurentPolynomial> mutate_cluster(const Seed& s, const std::vector<LaurentPolynomial>& cluster,
                                              std::size_t k) {
  (void)unfrozen_position(s, k);
  if (cluster.size() != s.size()) throw Error(ErrorCode::DimensionMismatch, "one cluster variable per index required");
  const auto& vars = cluster[k].vars();
  LaurentPolynomial plus = LaurentPolynomial::constant(vars, 1);
  LaurentPolynomial minus = LaurentPolynomial::constant(vars, 1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    const int e = s.epsilon[k][j];
    if (e > 0) plus *= pow(cluster[j], static_cast<unsigned>(e));
    if (e < 0) minus *= pow(cluster[j], static_cast<unsigned>(-e));
  }
  std::vector<LaurentPolynomial> out = cluster;
  out[k] = exact_div(plus + minus, cluster[k]);
  return out;
}

MonomialLattice::MonomialLattice(Seed seed) : seed_(std::move(seed)), rows_(seed_.unfrozen()) {
  const std::size_t n = rows_.size();
  const std::size_t m = seed_.size();
  std::vector<std::vector<Rational>> work(n, std::vector<Rational>(m));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < m; ++j) work[r][j] = seed_.epsilon[rows_[r]][j];

  // Row reduction; pivot columns of the echelon form are independent.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && work[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(work[piv], work[rank]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || work[r][col] == 0) continue;
      Rational f = work[r][col] / work[rank][col];
      for (std::size_t c = col; c < m; ++c) work[r][c] -= f * work[rank][c];
    }
    pivots_.push_back(col);
    ++rank;
  }
  if (!injective()) return;

  // Invert the square block B = M[:, pivots] by Gauss-Jordan on [B | I].
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = seed_.epsilon[rows_[r]][pivots_[c]];
    aug[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (aug[piv][col] == 0) ++piv;
    std::swap(aug[piv], aug[col]);
    Rational lead = aug[col][col];
    for (auto& v : aug[col]) v /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rational f = aug[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  inverse_.assign(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inverse_[r][c] = aug[r][n + c];
}

std::vector<int> MonomialLattice::tau(const std::vector<int>& b) const {
  if (b.size() != rows_.size()) throw Error(ErrorCode::DimensionMismatch, "X-exponent has wrong length");
  std::vector<int> a(seed_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[r] * seed_.epsilon[rows_[r]][j];
  return a;
}

std::optional<std::vector<int>> MonomialLattice::tau_inverse(const std::vector<int>& a) const {
  if (!injective()) throw Error(ErrorCode::RankDeficient, "tau is not injective for this seed");
  if (a.size() != seed_.size()) throw Error(ErrorCode::DimensionMismatch, "A-exponent has wrong length");
  const std::size_t n = rows_.size();
  // b * B = a_piv  =>  b = a_piv * B^{-1}
  std::vector<int> b(n);
  for (std::size_t c = 0; c < n; ++c) {
    Rational v = 0;
    for (std::size_t r = 0; r < n; ++r) v += Rational(a[pivots_[r]]) * inverse_[r][c];
    if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
    b[c] = static_cast<int>(boost::multiprecision::numerator(v));
  }
  if (tau(b) != a) return std::nullopt;
  return b;
}

std::string segment_var(const Segment& s) { return "A_" + std::to_string(s.i) + "_" + std::to_string(s.j); }

Chart a_chart(const Triangulation& t, ASpace space, std::span<const Segment> slot_order) {
  if (!t.complete()) throw Error(ErrorCode::IncompleteTriangulation, "charts need a complete triangulation");
  Chart c;
  c.kind = ChartKind::A;
  c.label = t;
  c.segments = resolve_slots(t, slot_order);
  if (space == ASpace::WithCoefficients) {
    for (const auto& e : boundary_edges(t.n_gon())) c.segments.push_back(e);
  }
  for (const auto& s : c.segments) c.vars.push_back(segment_var(s));
  return c;
}

Chart x_chart(const Triangulation& t, std::span<const Segment> slot_order) {
  if (!t.complete()) throw Error(ErrorCode::IncompleteTriangulation, "charts need a complete triangulation");
  Chart c;
  c.kind = ChartKind::X;
  c.label = t;
  c.segments = resolve_slots(t, slot_order);
  for (std::size_t k = 0; k < c.segments.size(); ++k) c.vars.push_back("X" + std::to_string(k + 1));
  return c;
}

Seed triangulation_seed(const Triangulation& t, std::span<const Segment> slot_order) {
  const Chart chart = a_chart(t, ASpace::WithCoefficients, slot_order);
  const std::size_t m = chart.segments.size();
  const std::size_t n = t.diagonals().size();
  auto index = [&](int a, int b) {
    Segment s{std::min(a, b), std::max(a, b)};
    auto it = std::find(chart.segments.begin(), chart.segments.end(), s);
    return static_cast<std::size_t>(it - chart.segments.begin());
  };
  std::vector<std::vector<int>> eps(m, std::vector<int>(m, 0));
  for (const auto& [a, b, c] : t.triangles()) {
    // Sides of the triangle in clockwise order, each pointing to the next.
    const std::array<std::size_t, 3> sides{index(a, b), index(b, c), index(c, a)};
    for (std::size_t k = 0; k < 3; ++k) {
      eps[sides[k]][sides[(k + 1) % 3]] += 1;
      eps[sides[(k + 1) % 3]][sides[k]] -= 1;
    }
  }
  std::vector<bool> frozen(m, false);
  for (std::size_t i = n; i < m; ++i) frozen[i] = true;
  std::vector<std::string> labels;
  for (const auto& s : chart.segments) labels.push_back("_" + std::to_string(s.i) + "_" + std::to_string(s.j));
  return make_seed(std::move(eps), std::move(frozen), {}, std::move(labels));
}

Flip flip(const Triangulation& t, const Segment& d) {
  if (!t.complete()) throw Error(ErrorCode::IncompleteTriangulation, "flips need a complete triangulation");
  if (!t.contains(d)) throw Error(ErrorCode::NotADiagonal, "flipped segment is not a diagonal of the triangulation");
  int inside = 0;
  int outside = 0;
  for (const auto& tri : t.triangles()) {
    bool has_i = std::find(tri.begin(), tri.end(), d.i) != tri.end();
    bool has_j = std::find(tri.begin(), tri.end(), d.j) != tri.end();
    if (!has_i || !has_j) continue;
    for (int v : tri) {
      if (v == d.i || v == d.j) continue;
      if (v > d.i && v < d.j) inside = v;
      else outside = v;
    }
  }
  Segment added{std::min(inside, outside), std::max(inside, outside)};
  std::vector<Segment> diags;
  for (const auto& x : t.diagonals())
    if (x != d) diags.push_back(x);
  diags.push_back(added);
  return Flip{Triangulation(t.n_gon(), std::move(diags)), d, added, {d.i, inside, d.j, outside}};
}

std::vector<Segment> flip_path(const Triangulation& from, const Triangulation& to) {
  if (from.n_gon() != to.n_gon()) throw Error(ErrorCode::SizeMismatch, "triangulations of different polygons");
  if (!from.complete() || !to.complete()) {
    throw Error(ErrorCode::IncompleteTriangulation, "flip paths need complete triangulations");
  }
  std::map<Triangulation, std::pair<Triangulation, Segment>> parent;
  std::deque<Triangulation> queue{from};
  parent.emplace(from, std::make_pair(from, Segment{}));
  while (!queue.empty()) {
    Triangulation cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    for (const auto& d : cur.diagonals()) {
      Flip f = flip(cur, d);
      if (parent.count(f.result)) continue;
      parent.emplace(f.result, std::make_pair(cur, d));
      queue.push_back(f.result);
    }
  }
  std::vector<Segment> path;
  Triangulation cur = to;
  while (cur != from) {
    const auto& [prev, removed] = parent.at(cur);
    path.push_back(removed);
    cur = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::size_t> mutation_word(const Triangulation& from, const Triangulation& to,
                                       std::vector<Segment>* final_slots) {
  std::vector<Segment> slots = from.diagonals();
  Triangulation cur = from;
  std::vector<std::size_t> word;
  for (const auto& d : flip_path(from, to)) {
    Flip f = flip(cur, d);
    auto it = std::find(slots.begin(), slots.end(), d);
    auto k = static_cast<std::size_t>(it - slots.begin());
    word.push_back(k);
    slots[k] = f.added;
    cur = f.result;
  }
  if (final_slots) *final_slots = slots;
  return word;
}

PluckerExpander::PluckerExpander(Triangulation t, ASpace space)
    : t_(std::move(t)), space_(space), chart_(a_chart(t_, space)), triangles_(t_.triangles()) {}

const LaurentPolynomial& PluckerExpander::expand(const Segment& raw) {
  const int n = t_.n_gon();
  const Segment s = make_segment(raw.i, raw.j, n);
  if (auto it = memo_.find(s); it != memo_.end()) return it->second;

  auto pos = std::find(chart_.segments.begin(), chart_.segments.end(), s);
  if (pos != chart_.segments.end()) {
    auto idx = static_cast<std::size_t>(pos - chart_.segments.begin());
    return memo_.emplace(s, LaurentPolynomial::variable(chart_.vars, idx)).first->second;
  }
  if (is_edge(s, n)) {
    // Only reachable in the reduced space, where edges are set to 1.
    return memo_.emplace(s, LaurentPolynomial::constant(chart_.vars, 1)).first->second;
  }

  // The triangle at vertex a that the chord {a, c} enters: its opposite side
  // {j, l} crosses the chord, and {c, j}, {c, l} cross strictly fewer
  // diagonals of the chart.
  const int a = s.i;
  const int c = s.j;
  for (const auto& tri : triangles_) {
    if (std::find(tri.begin(), tri.end(), a) == tri.end()) continue;
    std::array<int, 2> other{};
    std::size_t k = 0;
    for (int v : tri)
      if (v != a) other[k++] = v;
    const int j = other[0];
    const int l = other[1];
    const Segment opposite{std::min(j, l), std::max(j, l)};
    if (!crosses(opposite, s, n)) continue;

    // A_ac * A_jl = A_aj * A_cl + A_al * A_jc
    LaurentPolynomial aj = expand({a, j});
    LaurentPolynomial al = expand({a, l});
    LaurentPolynomial cl = expand({c, l});
    LaurentPolynomial jc = expand({j, c});
    LaurentPolynomial numer = aj * cl + al * jc;
    auto jl_pos = std::find(chart_.segments.begin(), chart_.segments.end(), opposite);
    Exponent shift(chart_.vars.size(), 0);
    shift[static_cast<std::size_t>(jl_pos - chart_.segments.begin())] = -1;
    return memo_.emplace(s, numer.shifted(shift)).first->second;
  }
  throw Error(ErrorCode::InternalInvariant, "no triangle of the chart is crossed by the segment");
}

LaurentPolynomial expand_A_variable(const Segment& diag, const Triangulation& t, ASpace space) {
  if (!t.complete()) throw Error(ErrorCode::IncompleteTriangulation, "charts need a complete triangulation");
  PluckerExpander ex(t, space);
  return ex.expand(diag);
}

LaurentPolynomial mutate_x_function(const LaurentPolynomial& f, const Seed& seed, std::size_t k) {
  const std::size_t kp = unfrozen_position(seed, k);
  const auto idx = seed.unfrozen();
  const auto vars = x_vars(seed);
  if (f.vars() != vars) throw Error(ErrorCode::DimensionMismatch, "function is not over this seed's X-chart");
  if (f.is_zero()) return f;

  // Old coordinates in new ones:
  //   X_k = X'_k^{-1},  X_i = X'_i * X'_k^{max(0, -e_ik)} * (1 + X'_k)^{e_ik}.
  struct Piece {
    Exponent mono;
    int power;
    BigInt coeff;
  };
  std::vector<Piece> pieces;
  int min_power = 0;
  for (const auto& [b, c] : f.terms()) {
    Exponent mono = b;
    int power = 0;
    int shift_k = -b[kp];
    for (std::size_t ip = 0; ip < idx.size(); ++ip) {
      if (ip == kp) continue;
      const int e = seed.epsilon[idx[ip]][k];
      power += b[ip] * e;
      shift_k += b[ip] * std::max(0, -e);
    }
    mono[kp] = shift_k;
    min_power = std::min(min_power, power);
    pieces.push_back({std::move(mono), power, c});
  }
  const LaurentPolynomial base = LaurentPolynomial::constant(vars, 1) + LaurentPolynomial::variable(vars, kp);
  std::map<int, LaurentPolynomial> powers;
  auto base_pow = [&](int p) -> const LaurentPolynomial& {
    auto it = powers.find(p);
    if (it != powers.end()) return it->second;
    return powers.emplace(p, pow(base, static_cast<unsigned>(p))).first->second;
  };
  LaurentPolynomial numer(vars);
  for (const auto& piece : pieces) {
    numer += base_pow(piece.power - min_power).shifted(piece.mono) * piece.coeff;
  }
  if (min_power == 0) return numer;
  return exact_div(numer, base_pow(-min_power));
}

LaurentPolynomial expand_in_X_chart(const LaurentPolynomial& f, const Seed& seed, std::span<const std::size_t> word) {
  LaurentPolynomial cur = f;
  Seed s = seed;
  for (std::size_t k : word) {
    cur = mutate_x_function(cur, s, k);
    s = mutate_seed(s, k);
  }
  return cur;
}

}  // namespace stasheff
