#include "seqcoin/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "seqcoin/errors.hpp"

namespace seqcoin {

BigInt pow10(unsigned exponent) {
  BigInt result = 1;
  BigInt base = 10;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("value is not finite");
  // Decompose into mantissa * 2^exp with an integer mantissa.
  int exp = 0;
  double mantissa = std::frexp(value, &exp);
  mantissa = std::ldexp(mantissa, 53);
  exp -= 53;
  BigInt numerator{static_cast<long long>(mantissa)};
  Rational result{numerator};
  if (exp > 0) {
    result *= Rational{BigInt{1} << exp};
  } else if (exp < 0) {
    result /= Rational{BigInt{1} << -exp};
  }
  return result;
}

std::string decimal_string(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt num = numerator(value);
  BigInt den = denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;

  BigInt whole = num / den;
  BigInt rem = num % den;
  std::string out = negative ? "-" : "";
  out += whole.convert_to<std::string>();
  if (rem == 0) return out;

  // Count the factors of 2 and 5 in the denominator; anything else means
  // the value has no finite decimal expansion.
  BigInt d = den;
  unsigned twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) throw DomainError("rational has no finite decimal expansion");

  unsigned digits = std::max(twos, fives);
  BigInt scaled = rem * pow10(digits) / den;
  std::string frac = scaled.convert_to<std::string>();
  if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  out += ".";
  out += frac;
  return out;
}

std::string fraction_string(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::string out = numerator(value).convert_to<std::string>();
  if (denominator(value) != 1) {
    out += "/";
    out += denominator(value).convert_to<std::string>();
  }
  return out;
}

}  // namespace seqcoin
