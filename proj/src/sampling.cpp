#include "seqcoin/sampling.hpp"

#include <cmath>

#include "seqcoin/errors.hpp"

namespace seqcoin {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return mix64(master_seed + 0x9E3779B97F4A7C15ull * (trial_index + 1));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

// Counts successes among n Bernoulli(p) flips by skipping over the
// geometric gaps between successes; expected cost O(n*p + 1).
std::uint64_t binomial_by_inversion(std::mt19937_64& rng, std::uint64_t n, double p) {
  const double log_q = std::log1p(-p);
  std::uint64_t count = 0;
  std::uint64_t remaining = n;
  while (true) {
    double gap = std::floor(std::log(uniform01(rng)) / log_q);
    if (!(gap < static_cast<double>(remaining))) return count;
    std::uint64_t skip = static_cast<std::uint64_t>(gap) + 1;
    if (skip > remaining) return count;
    remaining -= skip;
    ++count;
  }
}

// ln(k!) minus its Stirling approximation (k+1/2)ln(k+1) - (k+1) + ln(2 pi)/2.
double stirling_tail(double k) {
  static const double kTable[] = {
      0.0810614667953272,  0.0413406959554092,  0.0276779256849983,
      0.02079067210376509, 0.0166446911898211,  0.0138761288230707,
      0.0118967099458917,  0.0104112652619720,  0.00925546218271273,
      0.00833056343336287};
  if (k <= 9.0) return kTable[static_cast<int>(k)];
  double kp1sq = (k + 1.0) * (k + 1.0);
  return (1.0 / 12 - (1.0 / 360 - 1.0 / 1260 / kp1sq) / kp1sq) / (k + 1.0);
}

// BTRS transformed-rejection sampler (Hoermann 1993), valid for
// p <= 0.5 and n*p >= 10. Expected uniforms per draw is about 2.6.
std::uint64_t binomial_btrs(std::mt19937_64& rng, std::uint64_t n, double p) {
  const double nd = static_cast<double>(n);
  const double stddev = std::sqrt(nd * p * (1.0 - p));
  const double b = 1.15 + 2.53 * stddev;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = nd * p + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double r = p / (1.0 - p);
  const double alpha = (2.83 + 5.1 / b) * stddev;
  const double m = std::floor((nd + 1.0) * p);
  while (true) {
    double u = uniform01(rng) - 0.5;
    double v = uniform01(rng);
    double us = 0.5 - std::fabs(u);
    double k = std::floor((2.0 * a / us + b) * u + c);
    if (k < 0.0 || k > nd) continue;
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(k);
    v = std::log(v * alpha / (a / (us * us) + b));
    double bound = (m + 0.5) * std::log((m + 1.0) / (r * (nd - m + 1.0))) +
                   (nd + 1.0) * std::log((nd - m + 1.0) / (nd - k + 1.0)) +
                   (k + 0.5) * std::log(r * (nd - k + 1.0) / (k + 1.0)) +
                   stirling_tail(m) + stirling_tail(nd - m) -
                   stirling_tail(k) - stirling_tail(nd - k);
    if (v <= bound) return static_cast<std::uint64_t>(k);
  }
}

}  // namespace

std::uint64_t binomial_draw(std::mt19937_64& rng, std::uint64_t n, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("binomial p out of range: must lie strictly inside (0,1)");
  }
  if (n == 0) return 0;
  if (p > 0.5) return n - binomial_draw(rng, n, 1.0 - p);
  if (static_cast<double>(n) * p < 10.0) return binomial_by_inversion(rng, n, p);
  return binomial_btrs(rng, n, p);
}

}  // namespace seqcoin
