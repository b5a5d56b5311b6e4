#include "seqcoin/types.hpp"

#include <cctype>
#include <charconv>

#include "seqcoin/errors.hpp"

namespace seqcoin {

namespace {

bool has_finite_decimal(const Rational& value) {
  BigInt d = boost::multiprecision::denominator(value);
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

}  // namespace

std::string_view to_string(Decision decision) {
  switch (decision) {
    case Decision::kYes: return "YES";
    case Decision::kNo: return "NO";
    case Decision::kUndecided: return "UNDECIDED";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kYes: return "YES";
    case Verdict::kNo: return "NO";
    case Verdict::kContinue: return "CONTINUE";
  }
  return "?";
}

std::string_view decision_meaning(Decision decision) {
  switch (decision) {
    case Decision::kYes: return "p<q";
    case Decision::kNo: return "p>q";
    case Decision::kUndecided: return "";
  }
  return "";
}

Rational parse_probability(std::string_view text) {
  if (text.empty()) throw ParseError("empty probability");
  std::size_t pos = 0;
  std::string int_digits;
  std::string frac_digits;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    int_digits += text[pos++];
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      frac_digits += text[pos++];
    }
    if (frac_digits.empty()) {
      throw ParseError("malformed decimal '" + std::string(text) + "': no digits after the point");
    }
  }
  if (pos != text.size() || (int_digits.empty() && frac_digits.empty())) {
    throw ParseError("malformed decimal '" + std::string(text) + "'");
  }

  BigInt whole = int_digits.empty() ? BigInt{0} : BigInt{int_digits};
  BigInt frac = frac_digits.empty() ? BigInt{0} : BigInt{frac_digits};
  BigInt scale = pow10(static_cast<unsigned>(frac_digits.size()));
  Rational value{whole * scale + frac, scale};
  if (!(value > 0 && value < 1)) {
    throw DomainError("probability '" + std::string(text) +
                      "' out of range: must lie strictly inside (0,1)");
  }
  return value;
}

Probability::Probability(Rational value, std::string text)
    : value_(std::move(value)), text_(std::move(text)) {}

Probability Probability::from_decimal(std::string_view text) {
  return Probability{parse_probability(text), std::string(text)};
}

Probability Probability::from_rational(Rational value) {
  if (!(value > 0 && value < 1)) {
    throw DomainError("probability out of range: must lie strictly inside (0,1)");
  }
  std::string text =
      has_finite_decimal(value) ? decimal_string(value) : fraction_string(value);
  return Probability{std::move(value), std::move(text)};
}

Probability Probability::from_double(double value) {
  if (!(value > 0.0 && value < 1.0)) {
    throw DomainError("probability out of range: must lie strictly inside (0,1)");
  }
  return from_rational(rational_from_double(value));
}

Probability Probability::complement() const {
  return from_rational(Rational{1} - value_);
}

Confidence Confidence::from_decimal(std::string_view text) {
  Rational value = parse_probability(text);
  return Confidence{value.convert_to<double>(), std::string(text)};
}

Confidence Confidence::from_value(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta out of range: must lie strictly inside (0,1)");
  }
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), delta);
  (void)ec;
  return Confidence{delta, std::string(buf, ptr)};
}

ExactThreshold::ExactThreshold(Rational q, std::uint64_t samples, int eps_log2)
    : q_(std::move(q)), samples_(samples), eps_log2_(eps_log2) {
  if (samples == 0) throw DomainError("threshold needs a positive sample count");
  if (eps_log2 < 1) throw DomainError("epsilon exponent must be >= 1");
  Rational k{BigInt{samples}};
  Rational eps_k = k / Rational{BigInt{1} << eps_log2};
  lower_ = q_ * k - eps_k;
  upper_ = q_ * k + eps_k;
}

Verdict decide_round(std::uint64_t heads, const ExactThreshold& threshold) {
  if (heads > threshold.samples()) {
    throw DomainError("head count exceeds the round's sample count");
  }
  Rational x{BigInt{heads}};
  if (x <= threshold.lower()) return Verdict::kYes;
  if (x >= threshold.upper()) return Verdict::kNo;
  return Verdict::kContinue;
}

std::string RoundOutcome::epsilon_string() const {
  return fraction_string(Rational{BigInt{1}, BigInt{1} << index});
}

}  // namespace seqcoin
