#pragma once

#include <cstdint>
#include <random>

namespace seqcoin {

/// SplitMix64 finalizer; bijective mixing of a 64-bit word.
std::uint64_t mix64(std::uint64_t x);

/// Engine seed for one Monte Carlo trial. Trials seeded this way are
/// reproducible from (master_seed, trial_index) alone and statistically
/// independent of each other, so the harness can run them in any order.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

/// Uniform double in [0,1) with 53 random bits.
double uniform01(std::mt19937_64& rng);

/// Exact Binomial(n, p) draw. Uses geometric-gap inversion when
/// n*min(p,1-p) < 10 and the BTRS transformed-rejection sampler
/// (Hoermann 1993) otherwise, so the cost of a draw is O(n*p) small or
/// O(1) large rather than O(n). Requires 0 < p < 1.
std::uint64_t binomial_draw(std::mt19937_64& rng, std::uint64_t n, double p);

}  // namespace seqcoin
