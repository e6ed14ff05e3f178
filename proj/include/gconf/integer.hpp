#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace gconf {

using Integer = boost::multiprecision::cpp_int;

inline bool is_unit(const Integer& v) { return v == 1 || v == -1; }

inline Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_value(a) / gcd(a, b) * abs_value(b);
}

/// Quotient rounded to the nearest integer, so that |a - q*b| <= |b|/2.
inline Integer nearest_quotient(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  Integer r = a - q * b;
  Integer twice = 2 * abs_value(r);
  if (twice > abs_value(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace gconf
