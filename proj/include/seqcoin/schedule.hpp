#pragma once

#include <cstdint>

#include "seqcoin/rational.hpp"
#include "seqcoin/types.hpp"

namespace seqcoin {

/// Rounds beyond this raise BudgetOverflowError; at 2^-30 precision the
/// sample count already approaches the 64-bit limit.
inline constexpr int kMaxRound = 30;

/// Sample size for round i of the sequential test:
///   k = ceil( ln(pi^2 i^2 / (6 delta)) / (2 eps^2) ),  eps = 1/2^i.
/// The ln(1/delta) of the fixed-sample size is inflated so a union bound
/// over all rounds still sums to delta. Evaluated in double precision,
/// then rounded up; see the numerics note in the README.
std::uint64_t coinflipper_round_size(int round, const Confidence& delta);

/// Fixed sample size for a known gap: k = ceil( ln(1/delta) / (2 eps^2) ).
std::uint64_t fixed_sample_size(double epsilon, const Confidence& delta);

/// Additive Chernoff-Hoeffding tail bound e^(-2 k eps^2) on
/// Pr(X >= pk + eps k) for X ~ Binomial(k, p). Always in (0,1).
double hoeffding_tail(std::uint64_t samples, double epsilon);

/// Per-round parameters of the sequential schedule.
struct RoundPlan {
  int index;               // i >= 1
  std::uint64_t samples;   // k

  Rational epsilon() const;  // exact 1/2^i
};

RoundPlan make_round_plan(int round, const Confidence& delta);

}  // namespace seqcoin
