#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "weingarten/errors.hpp"

namespace weingarten {

/// Exact arbitrary-precision rational. The symbolic layer never holds
/// floating-point coefficients.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Prints "p" or "p/q" with q > 0.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "3", "-2", "1/2", "-7/4". Whitespace is not accepted.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("bad rational literal '" + text + "'");
  }
}

}  // namespace weingarten
