#pragma once

#include <cstdint>

#include "seqcoin/sources.hpp"
#include "seqcoin/types.hpp"

namespace seqcoin {

struct BaselineResult {
  Decision decision = Decision::kUndecided;  // always kYes or kNo
  std::uint64_t heads = 0;
  std::uint64_t flips = 0;  // exactly fixed_sample_size(epsilon, delta)
};

/// Fixed-sample tester for the known-gap promise p in {q-eps, q+eps}:
/// flips exactly k = fixed_sample_size(eps, delta) coins and returns YES
/// iff X <= q*k (exact rational comparison, tie goes to YES).
/// Requires eps in (0, min{q, 1-q}); the comparison against q is exact.
BaselineResult run_known_gap(BernoulliSource& source, const Probability& q,
                             const Probability& epsilon,
                             const Confidence& delta);

}  // namespace seqcoin
