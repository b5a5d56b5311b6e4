#include "seqcoin/predict.hpp"

#include <cmath>

#include "seqcoin/errors.hpp"
#include "seqcoin/schedule.hpp"

namespace seqcoin {

int difficulty(const Rational& p, const Rational& q) {
  if (p == q) throw DomainError("difficulty undefined: p = q");
  Rational gap = p > q ? p - q : q - p;
  // Smallest d >= 1 with gap >= 2^-d, found by exact comparison.
  int d = 1;
  Rational power{BigInt{1}, BigInt{2}};
  while (gap < power) {
    power /= 2;
    ++d;
  }
  return d;
}

int difficulty(const Probability& p, const Probability& q) {
  return difficulty(p.value(), q.value());
}

double iteration_bound(int d) {
  if (d < 1) throw DomainError("difficulty must be >= 1");
  return static_cast<double>(d) + 1.2;
}

SeriesConstants series_constants(int terms) {
  if (terms < 1) throw DomainError("series needs at least one term");
  SeriesConstants out;
  for (int j = 1; j <= terms; ++j) {
    // (1/6)^(4^(j-1)); exponent grows fast enough that terms past the
    // fourth vanish below double precision.
    double base = std::pow(1.0 / 6.0, std::pow(4.0, j - 1));
    double four_j = std::pow(4.0, j);
    out.c1 += base;
    out.c2 += four_j * base;
    if (j >= 2) out.c3 += four_j * base * std::log(static_cast<double>(j));
  }
  return out;
}

double flips_upper_bound(int d, const Confidence& delta, int tail_terms) {
  if (d < 1) throw DomainError("difficulty must be >= 1");
  if (tail_terms < 0) throw DomainError("tail_terms must be >= 0");
  double total = 0;
  for (int i = 1; i <= d + 1; ++i) {
    total += static_cast<double>(coinflipper_round_size(i, delta));
  }
  for (int j = 1; j <= tail_terms; ++j) {
    double weight = std::pow(1.0 / 6.0, std::pow(4.0, j - 1));
    total += weight * static_cast<double>(coinflipper_round_size(d + j + 1, delta));
  }
  return total;
}

DifficultyReport predict_report(const Probability& p, const Probability& q,
                                const Confidence& delta, int tail_terms) {
  DifficultyReport report;
  report.d = difficulty(p, q);
  Rational gap = p.value() > q.value() ? p.value() - q.value() : q.value() - p.value();
  report.gap = gap.convert_to<double>();
  report.iteration_bound = iteration_bound(report.d);
  report.flips_upper_bound = flips_upper_bound(report.d, delta, tail_terms);
  report.series = series_constants(4);
  return report;
}

}  // namespace seqcoin
