#pragma once

// Sparse multivariate Laurent polynomials with arbitrary-precision integer
// coefficients, their tropicalizations and max-plus evaluation.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stasheff/numeric.hpp"

namespace stasheff {

using Exponent = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic.
/// Compatible with addition of exponents, which the division routine needs.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponent, BigInt, GradedLex>;

  LaurentPolynomial() = default;
  /// The zero polynomial over the given variables.
  explicit LaurentPolynomial(std::vector<std::string> vars);

  static LaurentPolynomial constant(std::vector<std::string> vars, const BigInt& c);
  static LaurentPolynomial monomial(std::vector<std::string> vars, Exponent e, const BigInt& c = 1);
  static LaurentPolynomial variable(std::vector<std::string> vars, std::size_t index, int power = 1);

  [[nodiscard]] const std::vector<std::string>& vars() const noexcept { return vars_; }
  [[nodiscard]] std::size_t num_vars() const noexcept { return vars_.size(); }
  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] BigInt coefficient(const Exponent& e) const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const BigInt& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const BigInt& c);

  /// Multiplies by the monomial x^e.
  [[nodiscard]] LaurentPolynomial shifted(const Exponent& e) const;

  bool operator==(const LaurentPolynomial& o) const = default;

  /// Per-variable minimum / maximum exponent; empty for the zero polynomial.
  [[nodiscard]] std::vector<int> min_exponents() const;
  [[nodiscard]] std::vector<int> max_exponents() const;

  /// Text form: terms "c*v1^e1*...*vk^ek" joined by " + " / " - ", highest first.
  [[nodiscard]] std::string to_string() const;
  /// Parses the text form over the given variables.
  static LaurentPolynomial parse(std::string_view text, std::vector<std::string> vars);

 private:
  void require_same_vars(const LaurentPolynomial& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

LaurentPolynomial pow(const LaurentPolynomial& f, unsigned k);

/// Q with f = Q * g. Throws NotDivisible when no Laurent quotient with integer
/// coefficients exists, DimensionMismatch for different variable lists.
LaurentPolynomial exact_div(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// True iff every stored coefficient is strictly positive (vacuous for zero).
bool is_positive(const LaurentPolynomial& f);
/// True iff no stored coefficient is negative.
bool is_nonnegative(const LaurentPolynomial& f);

/// A ratio of Laurent polynomials; no normalisation is attempted.
struct RationalFunction {
  LaurentPolynomial num;
  LaurentPolynomial den;

  /// num / den as a Laurent polynomial, or NotDivisible.
  [[nodiscard]] LaurentPolynomial to_laurent() const { return exact_div(num, den); }
  /// Cross-multiplied equality.
  [[nodiscard]] bool equals(const RationalFunction& o) const { return num * o.den == o.num * den; }
};

/// Evaluates f at the given images of its variables (one per variable of f).
/// The result is expressed over the variables of the images.
RationalFunction substitute(const LaurentPolynomial& f, const std::vector<RationalFunction>& images);
RationalFunction substitute(const RationalFunction& f, const std::vector<RationalFunction>& images);

/// Max-plus function max_k <form_k, x>; constants are always zero because
/// coefficients are discarded on tropicalization.
class TropicalFunction {
 public:
  TropicalFunction(std::size_t num_vars, std::set<Exponent> forms);

  [[nodiscard]] std::size_t num_vars() const noexcept { return num_vars_; }
  [[nodiscard]] const std::set<Exponent>& linear_forms() const noexcept { return forms_; }

  /// Throws DimensionMismatch.
  [[nodiscard]] Rational eval(const std::vector<Rational>& x) const;
  [[nodiscard]] std::int64_t eval(const std::vector<std::int64_t>& x) const;

  /// e.g. "max{3*x1+x2, -x1, 0}".
  [[nodiscard]] std::string to_string(const std::vector<std::string>& vars) const;

  bool operator==(const TropicalFunction&) const = default;

 private:
  std::size_t num_vars_;
  std::set<Exponent> forms_;
};

/// One linear form per exponent vector. Throws NotPositive unless every
/// coefficient is > 0, and for the zero polynomial (max over an empty set).
TropicalFunction tropicalize(const LaurentPolynomial& f);

/// Convenience wrapper around TropicalFunction::eval.
Rational eval_tropical(const TropicalFunction& t, const std::vector<Rational>& x);

}  // namespace stasheff
