#include "stasheff/canonical_basis.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "stasheff/cluster_atlas.hpp"
#include "stasheff/error.hpp"

namespace stasheff {

namespace {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::int64_t t = 1; t <= k; ++t) out = out * (n - k + t) / t;
  return out;
}

}  // namespace

LaurentPolynomial graph_monomial_expansion(const WeightedGraph& g) {
  const int n = g.n_gon();
  PluckerExpander ex(snake_triangulation(n), ASpace::WithCoefficients);
  const auto& chart = ex.chart();
  LaurentPolynomial out = LaurentPolynomial::constant(chart.vars, 1);
  for (const auto& [i, j, w] : g.triplets()) {
    const Segment s{i, j};
    if (is_edge(s, n)) {
      auto it = std::find(chart.segments.begin(), chart.segments.end(), s);
      Exponent e(chart.vars.size(), 0);
      e[static_cast<std::size_t>(it - chart.segments.begin())] = static_cast<int>(w);
      out = out.shifted(e);
    } else {
      out *= pow(ex.expand(s), static_cast<unsigned>(w));
    }
  }
  return out;
}

LaurentPolynomial ia_laurent(const Lamination& l) {
  const Seed seed = triangulation_seed(snake_triangulation(l.n_gon()));
  const MonomialLattice lattice(seed);
  const LaurentPolynomial pulled_back = graph_monomial_expansion(l.graph());
  LaurentPolynomial out(x_vars(seed));
  for (const auto& [a, c] : pulled_back.terms()) {
    auto b = lattice.tau_inverse(a);
    if (!b) throw Error(ErrorCode::NotInImageLattice, "monomial is not a pull-back of an X-monomial");
    out.add_term(*b, c);
  }
  return out;
}

BigInt Expansion::coefficient(const Lamination& l) const {
  auto it = coeffs.find(l);
  return it == coeffs.end() ? BigInt(0) : it->second;
}

std::optional<std::array<int, 4>> find_crossing(const WeightedGraph& g, CrossingPolicy policy) {
  const int n = g.n_gon();
  std::vector<Segment> diags;
  for (const auto& [i, j, w] : g.triplets())
    if (w > 0 && is_diagonal(Segment{i, j}, n)) diags.push_back({i, j});
  std::optional<std::array<int, 4>> best;
  for (const auto& x : diags) {
    for (const auto& y : diags) {
      // x = {r, m}, y = {s, t} with r < s < m < t
      if (!(x.i < y.i && y.i < x.j && x.j < y.j)) continue;
      std::array<int, 4> cand{x.i, y.i, x.j, y.j};
      if (!best || (policy == CrossingPolicy::SmallestFirst ? cand < *best : cand > *best)) best = cand;
    }
  }
  return best;
}

Expansion product_expand(const std::vector<Lamination>& points, const ExpandOptions& options) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "product of no basis elements");
  const int n = points.front().n_gon();
  WeightedGraph total(n);
  for (const auto& l : points) {
    if (l.n_gon() != n) throw Error(ErrorCode::SizeMismatch, "points on different polygons");
    total += l.graph();
  }

  // Graphs are processed in decreasing crossing count; every move lowers the
  // count, so all contributions to a graph arrive before it is split.
  using Key = std::pair<std::int64_t, WeightedGraph>;
  std::map<Key, BigInt, std::greater<>> pending;
  pending.emplace(Key{crossing_count(total), total}, 1);
  Expansion out{n, points, {}};
  std::size_t processed = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    auto& [cc, g] = node.key();
    const BigInt& mult = node.mapped();
    if (++processed > options.node_budget) {
      throw Error(ErrorCode::BudgetExceeded, "expansion visited more than " + std::to_string(options.node_budget) +
                                                 " graphs");
    }
    const auto crossing = find_crossing(g, options.policy);
    if (!crossing) {
      out.coeffs[Lamination(g)] += mult;
      continue;
    }
    const auto [r, s, m, t] = *crossing;
    // A_rm A_st = A_rt A_sm + A_rs A_mt
    WeightedGraph base = g;
    base.add_weight(r, m, -1);
    base.add_weight(s, t, -1);
    WeightedGraph g1 = base;
    g1.add_weight(r, t, 1);
    g1.add_weight(s, m, 1);
    WeightedGraph g2 = std::move(base);
    g2.add_weight(r, s, 1);
    g2.add_weight(m, t, 1);
    for (auto* child : {&g1, &g2}) {
      const std::int64_t child_cc = crossing_count(*child);
      if (child_cc >= cc) throw Error(ErrorCode::InternalInvariant, "Plucker move did not reduce crossings");
      pending[Key{child_cc, std::move(*child)}] += mult;
    }
  }
  return out;
}

std::vector<Lamination> support(const std::vector<Lamination>& points, const ExpandOptions& options) {
  std::vector<Lamination> out;
  for (const auto& [l, c] : product_expand(points, options).coeffs) out.push_back(l);
  return out;
}

std::array<Lamination, 5> a2_points() {
  const Triangulation snake = snake_triangulation(5);
  auto at = [&](std::int64_t a13, std::int64_t a14) {
    return phi_inverse(make_coords(snake, std::vector<std::int64_t>{a13, a14}));
  };
  return {at(-1, 0), at(0, 1), at(1, 1), at(1, 0), at(0, -1)};
}

BigInt a2_coefficient(const std::array<std::int64_t, 5>& d, int i, std::int64_t b, std::int64_t c) {
  auto dd = [&](int k) { return d[static_cast<std::size_t>(cyclic_vertex(i + k, 5) - 1)]; };
  BigInt total = 0;
  for (std::int64_t k = 0; k <= dd(3); ++k) {
    total += binomial(dd(3), k) * binomial(dd(4) + k, dd(2) + dd(3) - dd(0) + b) *
             binomial(dd(2), dd(4) - dd(1) + c + k);
  }
  return total;
}

VerifyReport verify_positive_basis(const Expansion& f) {
  const int n_gon = f.n_gon;
  const Triangulation snake = snake_triangulation(n_gon);
  const Seed seed = triangulation_seed(snake);
  const auto vars = x_vars(seed);

  LaurentPolynomial sum(vars);
  for (const auto& [l, c] : f.coeffs) {
    if (c <= 0) return {false, std::nullopt, "non-positive coefficient in expansion"};
    sum += ia_laurent(l) * c;
  }
  LaurentPolynomial product = LaurentPolynomial::constant(vars, 1);
  for (const auto& l : f.points) product *= ia_laurent(l);
  if (sum != product) return {false, std::nullopt, "expansion does not reproduce the product"};
  if (!is_nonnegative(sum)) return {false, snake, "negative coefficient in the base chart"};

  if (n_gon - 3 > 3) return {};
  for (const auto& t : triangulations(n_gon)) {
    if (t == snake) continue;
    const auto word = mutation_word(snake, t);
    try {
      if (!is_nonnegative(expand_in_X_chart(sum, seed, word))) {
        return {false, t, "negative coefficient after re-expansion"};
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDivisible) throw;
      return {false, t, "not a Laurent polynomial in this chart"};
    }
  }
  return {};
}

}  // namespace stasheff
