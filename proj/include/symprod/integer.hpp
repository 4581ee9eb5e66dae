#pragma once

// Exact integer and rational scalars shared by every module, plus the two
// exception types the library throws.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symprod {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Caller supplied something outside the documented domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exactness guarantee (integral division, unimodularity, solvability)
/// did not hold. Always indicates a defect, never bad input.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline std::uint64_t binomial_u64(unsigned n, unsigned k) {
  return binomial(n, k).convert_to<std::uint64_t>();
}

/// a / b, throwing IntegralityError unless b divides a.
inline Integer exact_div(const Integer& a, const Integer& b, std::string_view what) {
  if (b == 0) throw IntegralityError(std::string(what) + ": division by zero");
  Integer q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) {
    throw IntegralityError(std::string(what) + ": " + a.str() + " is not divisible by " + b.str());
  }
  return q;
}

/// Rounds toward negative infinity.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Integer to_integer(const Rational& x, std::string_view what) {
  if (boost::multiprecision::denominator(x) != 1) {
    throw IntegralityError(std::string(what) + ": non-integral value " + x.str());
  }
  return boost::multiprecision::numerator(x);
}

inline bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

inline int sign_of(const Integer& x) { return x.sign(); }

}  // namespace symprod
