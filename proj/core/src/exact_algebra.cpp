#include "stasheff/exact_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "stasheff/error.hpp"

namespace stasheff {

namespace {

long total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); }

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

Exponent sub_exponents(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

std::string monomial_text(const Exponent& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[k];
    if (e[k] != 1) out += '^' + std::to_string(e[k]);
  }
  return out;
}

}  // namespace

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  long da = total_degree(a);
  long db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

LaurentPolynomial::LaurentPolynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

LaurentPolynomial LaurentPolynomial::constant(std::vector<std::string> vars, const BigInt& c) {
  LaurentPolynomial p(std::move(vars));
  p.add_term(Exponent(p.num_vars(), 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(std::vector<std::string> vars, Exponent e, const BigInt& c) {
  LaurentPolynomial p(std::move(vars));
  if (e.size() != p.num_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "exponent length differs from variable count");
  }
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::vector<std::string> vars, std::size_t index, int power) {
  Exponent e(vars.size(), 0);
  if (index >= e.size()) throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
  e[index] = power;
  return monomial(std::move(vars), std::move(e));
}

BigInt LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponent& e, const BigInt& c) {
  if (e.size() != num_vars()) throw Error(ErrorCode::DimensionMismatch, "exponent length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPolynomial::require_same_vars(const LaurentPolynomial& o) const {
  if (vars_ != o.vars_) throw Error(ErrorCode::DimensionMismatch, "polynomials over different variables");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.require_same_vars(b);
  LaurentPolynomial out(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  return out;
}

LaurentPolynomial operator*(LaurentPolynomial a, const BigInt& c) {
  if (c == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [e, v] : a.terms_) v *= c;
  return a;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& e) const {
  if (e.size() != num_vars()) throw Error(ErrorCode::DimensionMismatch, "shift length differs from variable count");
  LaurentPolynomial out(vars_);
  for (const auto& [t, c] : terms_) out.terms_.emplace(add_exponents(t, e), c);
  return out;
}

std::vector<int> LaurentPolynomial::min_exponents() const {
  if (terms_.empty()) return {};
  std::vector<int> out = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < e.size(); ++k) out[k] = std::min(out[k], e[k]);
  return out;
}

std::vector<int> LaurentPolynomial::max_exponents() const {
  if (terms_.empty()) return {};
  std::vector<int> out = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < e.size(); ++k) out[k] = std::max(out[k], e[k]);
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_text(e, vars_);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text, std::vector<std::string> vars) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  LaurentPolynomial out(std::move(vars));
  if (s.empty() || s == "0") return out;

  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::SchemaViolation, "cannot parse polynomial '" + std::string(text) + "': " + why);
  };

  std::size_t pos = 0;
  auto parse_int = [&]() {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string digits = s.substr(start, pos - start);
    if (digits.empty() || digits == "-" || digits == "+") throw fail("expected integer");
    return digits;
  };

  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    BigInt coeff = 1;
    Exponent e(out.num_vars(), 0);
    bool any_factor = false;
    while (true) {
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff *= BigInt(parse_int());
      } else {
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        std::string name = s.substr(start, pos - start);
        if (name.empty()) throw fail("expected factor");
        auto it = std::find(out.vars_.begin(), out.vars_.end(), name);
        if (it == out.vars_.end()) throw fail("unknown variable " + name);
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          bool paren = pos < s.size() && s[pos] == '(';
          if (paren) ++pos;
          power = std::stoi(parse_int());
          if (paren) {
            if (pos >= s.size() || s[pos] != ')') throw fail("missing ')'");
            ++pos;
          }
        }
        e[static_cast<std::size_t>(it - out.vars_.begin())] += power;
      }
      any_factor = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any_factor) throw fail("empty term");
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') throw fail("unexpected character");
    out.add_term(e, coeff * sign);
  }
  return out;
}

LaurentPolynomial pow(const LaurentPolynomial& f, unsigned k) {
  LaurentPolynomial result = LaurentPolynomial::constant(f.vars(), 1);
  LaurentPolynomial base = f;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPolynomial exact_div(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.vars() != g.vars()) throw Error(ErrorCode::DimensionMismatch, "polynomials over different variables");
  if (g.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
  LaurentPolynomial quotient(f.vars());
  if (f.is_zero()) return quotient;

  // Any exact quotient has its exponents inside this box (degrees add under
  // multiplication in every variable), which bounds the long division.
  const auto fmin = f.min_exponents();
  const auto fmax = f.max_exponents();
  const auto gmin = g.min_exponents();
  const auto gmax = g.max_exponents();
  const auto& [glead, gcoeff] = *g.terms().rbegin();

  LaurentPolynomial rem = f;
  while (!rem.is_zero()) {
    const auto [rlead, rcoeff] = *rem.terms().rbegin();
    Exponent q = sub_exponents(rlead, glead);
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (q[k] < fmin[k] - gmin[k] || q[k] > fmax[k] - gmax[k]) {
        throw Error(ErrorCode::NotDivisible, "(" + f.to_string() + ") / (" + g.to_string() + ")");
      }
    }
    if (rcoeff % gcoeff != 0) {
      throw Error(ErrorCode::NotDivisible, "(" + f.to_string() + ") / (" + g.to_string() + ")");
    }
    BigInt c = rcoeff / gcoeff;
    quotient.add_term(q, c);
    rem -= g.shifted(q) * c;
  }
  return quotient;
}

bool is_positive(const LaurentPolynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.second > 0; });
}

bool is_nonnegative(const LaurentPolynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.second >= 0; });
}

namespace {

// Raises p to a non-negative power with a small cache keyed by exponent.
class PowerCache {
 public:
  explicit PowerCache(const LaurentPolynomial& base) : base_(base) {}
  const LaurentPolynomial& get(unsigned k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(k, pow(base_, k)).first->second;
  }

 private:
  LaurentPolynomial base_;
  std::map<unsigned, LaurentPolynomial> cache_;
};

}  // namespace

RationalFunction substitute(const LaurentPolynomial& f, const std::vector<RationalFunction>& images) {
  if (images.size() != f.num_vars()) throw Error(ErrorCode::DimensionMismatch, "one image per variable required");
  if (images.empty()) {
    // Constant polynomial with no variables: nothing to substitute.
    return {f, LaurentPolynomial::constant(f.vars(), 1)};
  }
  const auto& out_vars = images.front().num.vars();
  if (f.is_zero()) return {LaurentPolynomial(out_vars), LaurentPolynomial::constant(out_vars, 1)};

  const auto emin = f.min_exponents();
  const auto emax = f.max_exponents();
  std::vector<PowerCache> nums;
  std::vector<PowerCache> dens;
  for (const auto& im : images) {
    nums.emplace_back(im.num);
    dens.emplace_back(im.den);
  }
  // Common denominator D = prod num_i^{max(0,-min_i)} * den_i^{max(0,max_i)}.
  LaurentPolynomial den = LaurentPolynomial::constant(out_vars, 1);
  std::vector<int> neg(images.size());
  std::vector<int> posv(images.size());
  for (std::size_t k = 0; k < images.size(); ++k) {
    neg[k] = std::max(0, -emin[k]);
    posv[k] = std::max(0, emax[k]);
    den *= nums[k].get(static_cast<unsigned>(neg[k]));
    den *= dens[k].get(static_cast<unsigned>(posv[k]));
  }
  LaurentPolynomial num(out_vars);
  for (const auto& [e, c] : f.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(out_vars, c);
    for (std::size_t k = 0; k < images.size(); ++k) {
      int p = std::max(0, e[k]);
      int q = std::max(0, -e[k]);
      term *= nums[k].get(static_cast<unsigned>(p + neg[k] - q));
      term *= dens[k].get(static_cast<unsigned>(q + posv[k] - p));
    }
    num += term;
  }
  return {std::move(num), std::move(den)};
}

RationalFunction substitute(const RationalFunction& f, const std::vector<RationalFunction>& images) {
  RationalFunction top = substitute(f.num, images);
  RationalFunction bottom = substitute(f.den, images);
  return {top.num * bottom.den, top.den * bottom.num};
}

TropicalFunction::TropicalFunction(std::size_t num_vars, std::set<Exponent> forms)
    : num_vars_(num_vars), forms_(std::move(forms)) {
  if (forms_.empty()) throw Error(ErrorCode::NotPositive, "tropical function needs at least one form");
  for (const auto& f : forms_) {
    if (f.size() != num_vars_) {
      throw Error(ErrorCode::DimensionMismatch, "linear form length differs from variable count");
    }
  }
}

Rational TropicalFunction::eval(const std::vector<Rational>& x) const {
  if (x.size() != num_vars_) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from variable count");
  bool first = true;
  Rational best;
  for (const auto& f : forms_) {
    Rational v = 0;
    for (std::size_t k = 0; k < f.size(); ++k)
      if (f[k] != 0) v += x[k] * f[k];
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

std::int64_t TropicalFunction::eval(const std::vector<std::int64_t>& x) const {
  if (x.size() != num_vars_) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from variable count");
  bool first = true;
  std::int64_t best = 0;
  for (const auto& f : forms_) {
    std::int64_t v = 0;
    for (std::size_t k = 0; k < f.size(); ++k) v += x[k] * f[k];
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

std::string TropicalFunction::to_string(const std::vector<std::string>& vars) const {
  std::ostringstream os;
  os << "max{";
  bool first_form = true;
  for (auto it = forms_.rbegin(); it != forms_.rend(); ++it) {
    if (!first_form) os << ", ";
    first_form = false;
    std::string lin;
    for (std::size_t k = 0; k < it->size(); ++k) {
      int c = (*it)[k];
      if (c == 0) continue;
      if (!lin.empty()) lin += c > 0 ? "+" : "-";
      else if (c < 0) lin += "-";
      int mag = c < 0 ? -c : c;
      if (mag != 1) lin += std::to_string(mag) + "*";
      lin += vars.at(k);
    }
    os << (lin.empty() ? "0" : lin);
  }
  os << '}';
  return os.str();
}

TropicalFunction tropicalize(const LaurentPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::NotPositive, "the zero polynomial has no tropicalization");
  if (!is_positive(f)) {
    throw Error(ErrorCode::NotPositive, "tropicalization needs positive coefficients: " + f.to_string());
  }
  std::set<Exponent> forms;
  for (const auto& [e, c] : f.terms()) forms.insert(e);
  return TropicalFunction(f.num_vars(), std::move(forms));
}

Rational eval_tropical(const TropicalFunction& t, const std::vector<Rational>& x) { return t.eval(x); }

}  // namespace stasheff
