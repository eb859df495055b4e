#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace stasheff {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt floor_div(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;
  if (num % den != 0 && num < 0) --quot;
  return quot;
}

inline BigInt ceil_div(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;
  if (num % den != 0 && num > 0) ++quot;
  return quot;
}

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const Rational& v) { return v.str(); }
inline std::string to_string(std::int64_t v) { return std::to_string(v); }

}  // namespace stasheff
