#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kpairs {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Integer& v) { return v.str(); }

// Throws std::invalid_argument on anything but an optionally signed run of digits.
Integer parse_integer(const std::string& text);

// C(top, k) for any integer top, via the falling-factorial definition.
Integer generalized_binomial(const Integer& top, unsigned k);

}  // namespace kpairs
