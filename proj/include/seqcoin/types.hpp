#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqcoin/rational.hpp"

namespace seqcoin {

/// Terminal outcome of a full run. kUndecided is only ever produced by
/// budget exhaustion, never by the threshold rule itself.
enum class Decision { kYes, kNo, kUndecided };

/// Outcome of a single round.
enum class Verdict { kYes, kNo, kContinue };

std::string_view to_string(Decision decision);
std::string_view to_string(Verdict verdict);

/// "p<q" for YES, "p>q" for NO, empty for UNDECIDED.
std::string_view decision_meaning(Decision decision);

/// Parses a finite decimal in the open interval (0,1) into an exact
/// rational with a power-of-ten denominator. Throws ParseError on
/// malformed text and DomainError when the value is out of range.
Rational parse_probability(std::string_view text);

/// A probability strictly inside (0,1), kept as an exact rational plus
/// the decimal text it was constructed from.
class Probability {
 public:
  static Probability from_decimal(std::string_view text);
  static Probability from_rational(Rational value);
  static Probability from_double(double value);

  const Rational& value() const { return value_; }
  const std::string& text() const { return text_; }

  /// Exact 1 - value, e.g. for mirror-symmetry transformations.
  Probability complement() const;

  friend bool operator==(const Probability&, const Probability&) = default;

 private:
  Probability(Rational value, std::string text);

  Rational value_;
  std::string text_;
};

/// A failure probability delta strictly inside (0,1). Sample-size
/// formulas evaluate in double precision, so delta is held as a double.
class Confidence {
 public:
  static Confidence from_decimal(std::string_view text);
  static Confidence from_value(double delta);

  double delta() const { return delta_; }
  const std::string& text() const { return text_; }

 private:
  Confidence(double delta, std::string text) : delta_(delta), text_(std::move(text)) {}

  double delta_;
  std::string text_;
};

/// Decision thresholds q*k - eps*k and q*k + eps*k for one round, held as
/// exact rationals. The inclusive boundaries can land exactly on integers
/// (q=1/2, i=1 gives 0 and k), where floating point would flip verdicts.
class ExactThreshold {
 public:
  /// eps = 1/2^eps_log2.
  ExactThreshold(Rational q, std::uint64_t samples, int eps_log2);

  const Rational& q() const { return q_; }
  std::uint64_t samples() const { return samples_; }
  int eps_log2() const { return eps_log2_; }
  const Rational& lower() const { return lower_; }
  const Rational& upper() const { return upper_; }

 private:
  Rational q_;
  std::uint64_t samples_;
  int eps_log2_;
  Rational lower_;
  Rational upper_;
};

/// YES iff heads <= q*k - eps*k, NO iff heads >= q*k + eps*k, both
/// inclusive; CONTINUE otherwise. Throws DomainError when heads exceeds
/// the round's sample count.
Verdict decide_round(std::uint64_t heads, const ExactThreshold& threshold);

/// One completed round of the sequential test.
struct RoundOutcome {
  int index = 0;  // 1-based round index i; eps = 1/2^i
  std::uint64_t samples = 0;
  std::uint64_t heads = 0;
  Verdict verdict = Verdict::kContinue;

  std::string epsilon_string() const;  // "1/2", "1/4", ...

  friend bool operator==(const RoundOutcome&, const RoundOutcome&) = default;
};

/// Input echo attached to a Transcript.
struct RunParams {
  std::string q;
  std::string delta;
  std::optional<std::uint64_t> budget;
  std::string source;

  friend bool operator==(const RunParams&, const RunParams&) = default;
};

/// Complete record of one run: every round in order, the final decision,
/// and the total number of flips consumed.
struct Transcript {
  std::vector<RoundOutcome> rounds;
  Decision decision = Decision::kUndecided;
  std::uint64_t total_flips = 0;
  RunParams params;

  std::uint64_t iterations() const { return rounds.size(); }

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

}  // namespace seqcoin
