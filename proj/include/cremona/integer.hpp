#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cremona {

/// Exact integer used for every count, degree, exponent and matrix entry.
using Integer = boost::multiprecision::cpp_int;

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline std::string to_string(const Integer& a) { return a.str(); }

/// Parses an optionally signed decimal literal; throws Error on anything else.
Integer parse_integer(const std::string& text);

}  // namespace cremona
