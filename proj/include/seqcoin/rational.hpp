#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace seqcoin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 10^exponent as an arbitrary-precision integer.
BigInt pow10(unsigned exponent);

/// Exact value of a double (every finite double is a dyadic rational).
Rational rational_from_double(double value);

/// Canonical decimal form, e.g. 1/2 -> "0.5", 1/20 -> "0.05".
/// Requires a denominator of the form 2^a * 5^b.
std::string decimal_string(const Rational& value);

/// Plain fraction form, e.g. "1/8", "21/4", "3".
std::string fraction_string(const Rational& value);

}  // namespace seqcoin
