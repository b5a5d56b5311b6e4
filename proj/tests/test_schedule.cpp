#include "seqcoin/schedule.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "seqcoin/errors.hpp"

using namespace seqcoin;

namespace {

Confidence conf(double delta) { return Confidence::from_value(delta); }

}  // namespace

// Expected values verified against a high-precision (60-digit) evaluation
// of ceil(ln(pi^2 i^2 / (6 delta)) * 4^i / 2); all are >1e-2 away from the
// nearest integer before the ceiling.
TEST_CASE("coinflipper_round_size derived table") {
  CHECK(coinflipper_round_size(1, conf(0.05)) == 7);
  CHECK(coinflipper_round_size(2, conf(0.05)) == 40);
  CHECK(coinflipper_round_size(1, conf(0.5)) == 3);
  CHECK(coinflipper_round_size(2, conf(0.5)) == 21);
  CHECK(coinflipper_round_size(3, conf(0.1)) == 160);
  CHECK(coinflipper_round_size(4, conf(0.1)) == 714);
}

TEST_CASE("coinflipper_round_size domain") {
  CHECK_THROWS_AS(coinflipper_round_size(0, conf(0.1)), DomainError);
  CHECK_THROWS_AS(coinflipper_round_size(-3, conf(0.1)), DomainError);
  CHECK_THROWS_AS(coinflipper_round_size(kMaxRound + 1, conf(0.1)), BudgetOverflowError);
  CHECK(coinflipper_round_size(kMaxRound, conf(0.5)) > 0);  // cap itself is fine
}

TEST_CASE("fixed_sample_size derived table") {
  CHECK(fixed_sample_size(0.1, conf(0.05)) == 150);
  CHECK(fixed_sample_size(0.5, conf(std::exp(-2.0))) == 4);  // exact integer ceiling
  CHECK(fixed_sample_size(0.5, conf(0.5)) == 2);
  CHECK(fixed_sample_size(0.25, conf(0.5)) == 6);
  CHECK(fixed_sample_size(0.1, conf(0.1)) == 116);
  CHECK_THROWS_AS(fixed_sample_size(0.0, conf(0.1)), DomainError);
  CHECK_THROWS_AS(fixed_sample_size(1.0, conf(0.1)), DomainError);
}

TEST_CASE("hoeffding_tail evaluates e^(-2 k eps^2)") {
  CHECK(hoeffding_tail(100, 0.1) == doctest::Approx(0.13533528323661270).epsilon(1e-12));
  CHECK(hoeffding_tail(3, 0.5) == doctest::Approx(0.22313016014842982).epsilon(1e-12));
  for (double eps : {0.01, 0.2, 0.7, 0.99}) {
    double tail = hoeffding_tail(1, eps);
    CHECK(tail > 0.0);
    CHECK(tail < 1.0);
  }
  CHECK_THROWS_AS(hoeffding_tail(0, 0.1), DomainError);
}

TEST_CASE("schedule satisfies the union-bound inequality 2 k eps^2 >= ln(pi^2 i^2 / (6 delta))") {
  const double pi_sq = 9.869604401089358;
  for (double delta : {0.5, 0.1, 0.01, 1e-6}) {
    for (int i = 1; i <= kMaxRound; ++i) {
      double k = static_cast<double>(coinflipper_round_size(i, conf(delta)));
      double lhs = k * std::ldexp(1.0, 1 - 2 * i);  // 2 k eps^2, exact scaling
      double rhs = std::log(pi_sq * i * i / (6.0 * delta));
      // 1e-12 relative slack: the ceiling argument incurs one rounded
      // multiply, so the inequality can slip by ~1 ulp at large i.
      CHECK(lhs >= rhs * (1.0 - 1e-12));
    }
  }
}

TEST_CASE("round size is monotone in i and in delta") {
  for (double delta : {0.5, 0.1, 0.01, 1e-6}) {
    std::uint64_t prev = 0;
    for (int i = 1; i <= 20; ++i) {
      std::uint64_t k = coinflipper_round_size(i, conf(delta));
      CHECK(k >= prev);
      CHECK(k >= 1);
      prev = k;
    }
  }
  for (int i : {1, 2, 5, 10}) {
    CHECK(coinflipper_round_size(i, conf(0.5)) <= coinflipper_round_size(i, conf(0.1)));
    CHECK(coinflipper_round_size(i, conf(0.1)) <= coinflipper_round_size(i, conf(0.01)));
  }
}

TEST_CASE("inflated schedule is never smaller than the fixed-sample size") {
  for (double delta : {0.5, 0.1, 0.01, 1e-6}) {
    for (int i = 1; i <= 20; ++i) {
      double eps = std::ldexp(1.0, -i);
      CHECK(coinflipper_round_size(i, conf(delta)) >= fixed_sample_size(eps, conf(delta)));
    }
  }
}

TEST_CASE("hoeffding_tail dominates the exact binomial tail for small k") {
  // Brute-force oracle: Pr(X >= pk + eps k) by pmf summation.
  for (std::uint64_t k = 1; k <= 16; ++k) {
    std::vector<double> choose(k + 1);
    choose[0] = 1;
    for (std::uint64_t x = 1; x <= k; ++x) {
      choose[x] = choose[x - 1] * static_cast<double>(k - x + 1) / static_cast<double>(x);
    }
    for (double p : {0.1, 0.3, 0.5, 0.7}) {
      for (double eps : {0.05, 0.15, 0.25, 0.4}) {
        double cut = (p + eps) * static_cast<double>(k);
        double tail = 0;
        for (std::uint64_t x = 0; x <= k; ++x) {
          if (static_cast<double>(x) >= cut - 1e-9) {
            tail += choose[x] * std::pow(p, double(x)) * std::pow(1 - p, double(k - x));
          }
        }
        CHECK(tail <= hoeffding_tail(k, eps) + 1e-12);
      }
    }
  }
}

TEST_CASE("round plan carries the exact epsilon") {
  RoundPlan plan = make_round_plan(3, conf(0.1));
  CHECK(plan.index == 3);
  CHECK(plan.samples == 160);
  CHECK(plan.epsilon() == Rational{1, 8});
}
