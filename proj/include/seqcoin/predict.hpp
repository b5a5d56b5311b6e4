#pragma once

#include "seqcoin/rational.hpp"
#include "seqcoin/types.hpp"

namespace seqcoin {

/// Difficulty d = ceil(log2(1 / |p-q|)) >= 1. The gap is compared against
/// powers of two exactly, since a floating log2 misrounds at gaps that
/// are exact powers of two. Throws DomainError when p = q.
int difficulty(const Rational& p, const Rational& q);
int difficulty(const Probability& p, const Probability& q);

/// Upper bound d + 1.2 on the expected number of iterations.
double iteration_bound(int d);

/// The three series constants of the expectation analysis, truncated at
/// `terms` terms. Convergence is doubly exponential: 4 terms land within
/// 1e-12 of the limits (the next term involves (1/6)^256).
///   c1 = sum_{j>=1} (1/6)^(4^(j-1))              ~ 0.167438
///   c2 = sum_{j>=1} 4^j (1/6)^(4^(j-1))          ~ 0.679012
///   c3 = sum_{j>=2} 4^j (1/6)^(4^(j-1)) ln j     ~ 0.00855737
struct SeriesConstants {
  double c1 = 0;
  double c2 = 0;
  double c3 = 0;
};

SeriesConstants series_constants(int terms);

/// Rigorous upper bound on the expected total flips at difficulty d:
/// every round up to d+1 counted in full, later rounds weighted by the
/// (1/6)^(4^(j-1)) probability of still being live:
///   sum_{i=1}^{d+1} k_i  +  sum_{j=1}^{tail_terms} (1/6)^(4^(j-1)) k_{d+j+1}.
/// Nondecreasing and convergent in tail_terms.
double flips_upper_bound(int d, const Confidence& delta, int tail_terms);

/// Bundle of all calculators for one (p, q, delta) instance.
struct DifficultyReport {
  int d = 0;
  double gap = 0;
  double iteration_bound = 0;
  double flips_upper_bound = 0;
  SeriesConstants series;
};

DifficultyReport predict_report(const Probability& p, const Probability& q,
                                const Confidence& delta, int tail_terms = 4);

}  // namespace seqcoin
