#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace loopcalc {

using Integer = boost::multiprecision::cpp_int;

// gcd(0, m) = m, so 0 is the identity ("free").
inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

// Representative of c in {0, ..., modulus-1}; identity when modulus == 0.
inline Integer reduce_mod(const Integer& c, const Integer& modulus) {
  if (modulus == 0) return c;
  Integer r = c % modulus;
  if (r < 0) r += modulus;
  return r;
}

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in degree/exponent arithmetic");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in degree/exponent arithmetic");
  return r;
}

inline bool is_odd(std::int64_t v) { return (v % 2) != 0; }

}  // namespace loopcalc
