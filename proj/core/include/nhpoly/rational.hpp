#ifndef NHPOLY_RATIONAL_HPP
#define NHPOLY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "nhpoly/errors.hpp"

namespace nhpoly {

using BigInt = boost::multiprecision::cpp_int;
// Always stored in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

// Parses "p", "-p", "p/q" (whitespace-free). Throws ParseError.
Rational parse_rational(const std::string& text);

// Correctly rounded fixed-point decimal with `digits` fraction digits,
// round half away from zero. "-0.000..." is normalized to "0.000...".
std::string decimal_string(const Rational& value, unsigned digits);

// Renders "p" or "p/q".
std::string rational_string(const Rational& value);

}  // namespace nhpoly

#endif
