#include "seqcoin/montecarlo.hpp"

#include <cmath>

#include "doctest.h"
#include "seqcoin/errors.hpp"
#include "seqcoin/schedule.hpp"

using namespace seqcoin;
using namespace seqcoin::montecarlo;

namespace {

TrialConfig basic_config() {
  TrialConfig config;
  config.p = 0.75;
  config.p_text = "0.75";
  config.q = "0.5";
  config.delta = "0.1";
  config.trials = 2000;
  config.master_seed = 7;
  return config;
}

}  // namespace

TEST_CASE("wilson_upper closed form") {
  // z(0.99) = 2.3263...; all values verified against an independent
  // evaluation of the Wilson formula.
  CHECK(wilson_upper(0, 100, 0.99) == doctest::Approx(0.0513384).epsilon(1e-4));
  CHECK(wilson_upper(50, 100, 0.99) == doctest::Approx(0.6132922).epsilon(1e-4));
  CHECK(wilson_upper(100, 100, 0.99) == doctest::Approx(1.0));
  CHECK(wilson_upper(100, 100, 0.5) == doctest::Approx(1.0));
  CHECK_THROWS_AS(wilson_upper(5, 0, 0.99), DomainError);
  CHECK_THROWS_AS(wilson_upper(5, 4, 0.99), DomainError);
  CHECK_THROWS_AS(wilson_upper(1, 10, 1.0), DomainError);
}

TEST_CASE("wilson_upper dominates the point estimate") {
  for (std::uint64_t n : {10ull, 100ull, 2000ull}) {
    for (std::uint64_t x = 0; x <= n; x += n / 10) {
      double upper = wilson_upper(x, n, 0.99);
      CHECK(upper >= static_cast<double>(x) / static_cast<double>(n));
      CHECK(upper <= 1.0);
    }
  }
}

TEST_CASE("run_trials is deterministic across worker counts and matches the serial reference") {
  TrialConfig config = basic_config();
  TrialStats one = run_trials(config, 1);
  TrialStats eight = run_trials(config, 8);
  TrialStats serial = run_trials_serial(config);
  CHECK(one == eight);
  CHECK(one == serial);
}

TEST_CASE("trial statistics are internally consistent") {
  TrialConfig config = basic_config();
  TrialStats stats = run_trials(config);
  CHECK(stats.trials == config.trials);
  CHECK(stats.wrong + stats.undecided <= stats.trials);
  CHECK(stats.decisions() + stats.undecided == stats.trials);
  CHECK(stats.d == 2);
  CHECK(stats.iteration_bound == doctest::Approx(3.2));
  CHECK(stats.error_rate_wilson_hi >= stats.error_rate);
  CHECK(stats.mean_iterations > 0);
  CHECK(stats.mean_flips >= stats.mean_iterations);  // every round flips at least once

  // The guarantees themselves, with sampling slack.
  CHECK(stats.error_rate_wilson_hi <= 0.1);
  CHECK(stats.mean_iterations <= stats.iteration_bound + 2 * stats.sem_iterations);
  CHECK(stats.mean_flips <= stats.flips_upper_bound + 2 * stats.sem_flips);
}

TEST_CASE("single-trial aggregation is degenerate") {
  TrialConfig config = basic_config();
  config.trials = 1;
  TrialStats stats = run_trials(config);
  CHECK(stats.sem_iterations == 0.0);
  CHECK(stats.sem_flips == 0.0);
  CHECK(stats.mean_iterations == std::floor(stats.mean_iterations));
}

TEST_CASE("p = q requires a budget and reports undecided trials") {
  TrialConfig config;
  config.p = 0.5;
  config.q = "0.5";
  config.delta = "0.05";
  config.trials = 100;
  config.master_seed = 3;
  CHECK_THROWS_AS(run_trials(config), DomainError);

  // Budget below the first round size: every trial is undecided.
  config.budget = 5;
  TrialStats stats = run_trials(config);
  CHECK(stats.undecided == 100);
  CHECK(stats.decisions() == 0);
  CHECK(stats.no_decisions);
  CHECK(stats.error_rate == 0.0);
  CHECK(stats.error_rate_wilson_hi == 1.0);
  CHECK(stats.d == 0);
  CHECK(std::isnan(stats.iteration_bound));
  CHECK(std::isnan(stats.flips_upper_bound));

  // A looser budget still conserves trials.
  config.budget = 10000;
  TrialStats loose = run_trials(config);
  CHECK(loose.decisions() + loose.undecided == loose.trials);
  CHECK(loose.mean_flips <= 10000.0);
}

TEST_CASE("baseline trials consume a constant number of flips") {
  TrialConfig config;
  config.p = 0.4;
  config.q = "0.5";
  config.delta = "0.1";
  config.trials = 500;
  config.master_seed = 11;
  config.algorithm = Algorithm::kBaseline;
  config.epsilon = "0.1";
  TrialStats stats = run_trials(config);
  CHECK(stats.undecided == 0);
  CHECK(stats.mean_flips == doctest::Approx(116.0));
  CHECK(stats.sem_flips == 0.0);
  CHECK(stats.mean_iterations == doctest::Approx(1.0));

  config.epsilon = "0.6";
  CHECK_THROWS_AS(run_trials(config), DomainError);
  config.epsilon = "";
  CHECK_THROWS_AS(run_trials(config), DomainError);
}

TEST_CASE("config validation") {
  TrialConfig config = basic_config();
  config.trials = 0;
  CHECK_THROWS_AS(run_trials(config), DomainError);
  config = basic_config();
  config.p = 1.5;
  CHECK_THROWS_AS(run_trials(config), DomainError);
  config = basic_config();
  config.q = "haha";
  CHECK_THROWS_AS(run_trials(config), ParseError);
}

TEST_CASE("sweep preserves grid order and aborts on bad configs") {
  TrialConfig a = basic_config();
  a.trials = 300;
  TrialConfig b = a;
  b.master_seed = 8;
  std::vector<TrialStats> rows = sweep({a, b});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == run_trials(a));
  CHECK(rows[1] == run_trials(b));
  CHECK(rows[0].mean_flips != rows[1].mean_flips);  // different seeds

  TrialConfig bad = a;
  bad.trials = 0;
  CHECK_THROWS_AS(sweep({a, bad}), DomainError);
  CHECK_THROWS_AS(sweep({}), DomainError);
}

TEST_CASE("mean flips do not shrink as delta tightens") {
  std::vector<TrialConfig> grid;
  for (const char* delta : {"0.2", "0.1", "0.05"}) {
    TrialConfig config = basic_config();
    config.delta = delta;
    config.trials = 4000;
    grid.push_back(config);
  }
  std::vector<TrialStats> rows = sweep(grid);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].mean_flips + 2 * rows[i].sem_flips + 2 * rows[i - 1].sem_flips >=
          rows[i - 1].mean_flips);
  }
}
