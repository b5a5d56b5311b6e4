#include "seqcoin/schedule.hpp"

#include <cmath>
#include <string>

#include "seqcoin/errors.hpp"

namespace seqcoin {

namespace {

constexpr double kPiSquared = 9.869604401089358;

// Largest double below 2^64; anything at or above it cannot be a k.
constexpr double kMaxRepresentable = 18446744073709549568.0;

std::uint64_t ceil_to_u64(double value, const char* what) {
  double up = std::ceil(value);
  if (!(up < kMaxRepresentable)) {
    throw BudgetOverflowError(std::string(what) + " overflows 64 bits");
  }
  if (up < 1.0) up = 1.0;
  return static_cast<std::uint64_t>(up);
}

}  // namespace

std::uint64_t coinflipper_round_size(int round, const Confidence& delta) {
  if (round < 1) throw DomainError("round index must be >= 1");
  if (round > kMaxRound) {
    throw BudgetOverflowError("round " + std::to_string(round) + " exceeds the cap of " +
                              std::to_string(kMaxRound));
  }
  // 1/(2 eps^2) = 4^i / 2
  double inv_two_eps_sq = std::ldexp(1.0, 2 * round - 1);
  double log_term = std::log(kPiSquared * static_cast<double>(round) *
                             static_cast<double>(round) / (6.0 * delta.delta()));
  return ceil_to_u64(inv_two_eps_sq * log_term, "round sample size");
}

std::uint64_t fixed_sample_size(double epsilon, const Confidence& delta) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("epsilon out of range: must lie strictly inside (0,1)");
  }
  double value = std::log(1.0 / delta.delta()) / (2.0 * epsilon * epsilon);
  return ceil_to_u64(value, "fixed sample size");
}

double hoeffding_tail(std::uint64_t samples, double epsilon) {
  if (samples == 0) throw DomainError("sample count must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("epsilon out of range: must lie strictly inside (0,1)");
  }
  return std::exp(-2.0 * static_cast<double>(samples) * epsilon * epsilon);
}

Rational RoundPlan::epsilon() const {
  return Rational{BigInt{1}, BigInt{1} << index};
}

RoundPlan make_round_plan(int round, const Confidence& delta) {
  return RoundPlan{round, coinflipper_round_size(round, delta)};
}

}  // namespace seqcoin
