#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace jordkit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// "p/q", or "p" when integral.
inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace jordkit
