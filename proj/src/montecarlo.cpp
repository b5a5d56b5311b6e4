#include "seqcoin/montecarlo.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "seqcoin/baseline.hpp"
#include "seqcoin/coinflipper.hpp"
#include "seqcoin/errors.hpp"
#include "seqcoin/predict.hpp"
#include "seqcoin/sources.hpp"

namespace seqcoin {
namespace montecarlo {

namespace {

enum : std::uint8_t { kTrialYes, kTrialNo, kTrialUndecided };

struct ValidatedConfig {
  Probability q;
  Confidence delta;
  std::optional<Probability> epsilon;
  int cmp = 0;  // sign of p - q, exact
};

ValidatedConfig validate(const TrialConfig& config) {
  if (config.trials == 0) throw DomainError("trials must be >= 1");
  if (!(config.p > 0.0 && config.p < 1.0)) {
    throw DomainError("p out of range: must lie strictly inside (0,1)");
  }
  ValidatedConfig v{Probability::from_decimal(config.q),
                    Confidence::from_decimal(config.delta), std::nullopt, 0};
  Rational p_exact = rational_from_double(config.p);
  v.cmp = p_exact < v.q.value() ? -1 : (p_exact > v.q.value() ? 1 : 0);
  if (v.cmp == 0 && !config.budget) {
    throw DomainError("p = q never terminates: a budget is required");
  }
  if (config.algorithm == Algorithm::kBaseline) {
    if (config.epsilon.empty()) throw DomainError("baseline requires an epsilon");
    v.epsilon = Probability::from_decimal(config.epsilon);
    Rational max_eps = std::min(v.q.value(), Rational{1} - v.q.value());
    if (!(v.epsilon->value() < max_eps)) {
      throw DomainError("epsilon out of range: must be < min{q, 1-q}");
    }
  }
  return v;
}

// One trial; never throws (faults are reported back by message so the
// OpenMP region stays exception-free).
void run_one(const TrialConfig& config, const ValidatedConfig& v, std::uint64_t t,
             std::uint8_t& decision, std::uint64_t& iterations, std::uint64_t& flips,
             std::string& fault) {
  try {
    SyntheticSource source = derive_trial_source(config.master_seed, t, config.p);
    if (config.algorithm == Algorithm::kCoinFlipper) {
      Transcript tr = run_coinflipper(source, v.q, v.delta, config.budget);
      decision = tr.decision == Decision::kYes
                     ? kTrialYes
                     : (tr.decision == Decision::kNo ? kTrialNo : kTrialUndecided);
      iterations = tr.iterations();
      flips = tr.total_flips;
    } else {
      BaselineResult r = run_known_gap(source, v.q, *v.epsilon, v.delta);
      decision = r.decision == Decision::kYes ? kTrialYes : kTrialNo;
      iterations = 1;
      flips = r.flips;
    }
  } catch (const std::exception& e) {
    fault = e.what();
  }
}

TrialStats aggregate(const TrialConfig& config, const ValidatedConfig& v,
                     const std::vector<std::uint8_t>& decisions,
                     const std::vector<std::uint64_t>& iterations,
                     const std::vector<std::uint64_t>& flips,
                     const std::vector<std::string>& faults) {
  const std::uint64_t n = config.trials;
  for (std::uint64_t t = 0; t < n; ++t) {
    if (!faults[t].empty()) {
      throw Error("trial " + std::to_string(t) + ": " + faults[t]);
    }
  }

  TrialStats stats;
  stats.trials = n;
  double sum_it = 0, sum_it2 = 0, sum_fl = 0, sum_fl2 = 0;
  for (std::uint64_t t = 0; t < n; ++t) {
    if (decisions[t] == kTrialUndecided) {
      ++stats.undecided;
    } else if ((v.cmp < 0 && decisions[t] == kTrialNo) ||
               (v.cmp > 0 && decisions[t] == kTrialYes)) {
      ++stats.wrong;
    }
    double it = static_cast<double>(iterations[t]);
    double fl = static_cast<double>(flips[t]);
    sum_it += it;
    sum_it2 += it * it;
    sum_fl += fl;
    sum_fl2 += fl * fl;
  }

  const double nd = static_cast<double>(n);
  stats.mean_iterations = sum_it / nd;
  stats.mean_flips = sum_fl / nd;
  if (n > 1) {
    double var_it = std::max(0.0, (sum_it2 - nd * stats.mean_iterations * stats.mean_iterations) / (nd - 1));
    double var_fl = std::max(0.0, (sum_fl2 - nd * stats.mean_flips * stats.mean_flips) / (nd - 1));
    stats.sem_iterations = std::sqrt(var_it / nd);
    stats.sem_flips = std::sqrt(var_fl / nd);
  }

  std::uint64_t decided = stats.decisions();
  stats.no_decisions = decided == 0;
  stats.error_rate = decided == 0 ? 0.0 : static_cast<double>(stats.wrong) / static_cast<double>(decided);
  stats.error_rate_wilson_hi =
      decided == 0 ? 1.0 : wilson_upper(stats.wrong, decided, config.wilson_confidence);

  if (v.cmp != 0) {
    Probability p = Probability::from_double(config.p);
    stats.d = difficulty(p, v.q);
    stats.iteration_bound = iteration_bound(stats.d);
    stats.flips_upper_bound = flips_upper_bound(stats.d, v.delta, 4);
  } else {
    stats.d = 0;
    stats.iteration_bound = std::numeric_limits<double>::quiet_NaN();
    stats.flips_upper_bound = std::numeric_limits<double>::quiet_NaN();
  }
  return stats;
}

}  // namespace

TrialStats run_trials(const TrialConfig& config, int workers) {
  ValidatedConfig v = validate(config);
  const std::uint64_t n = config.trials;
  std::vector<std::uint8_t> decisions(n, kTrialUndecided);
  std::vector<std::uint64_t> iterations(n, 0), flips(n, 0);
  std::vector<std::string> faults(n);

  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::int64_t t = 0; t < count; ++t) {
    run_one(config, v, static_cast<std::uint64_t>(t), decisions[t], iterations[t],
            flips[t], faults[t]);
  }
  return aggregate(config, v, decisions, iterations, flips, faults);
}

TrialStats run_trials_serial(const TrialConfig& config) {
  ValidatedConfig v = validate(config);
  const std::uint64_t n = config.trials;
  std::vector<std::uint8_t> decisions(n, kTrialUndecided);
  std::vector<std::uint64_t> iterations(n, 0), flips(n, 0);
  std::vector<std::string> faults(n);

  for (std::uint64_t t = 0; t < n; ++t) {
    run_one(config, v, t, decisions[t], iterations[t], flips[t], faults[t]);
  }
  return aggregate(config, v, decisions, iterations, flips, faults);
}

double wilson_upper(std::uint64_t successes, std::uint64_t n, double confidence) {
  if (n == 0) throw DomainError("wilson_upper needs n >= 1");
  if (successes > n) throw DomainError("successes exceed the trial count");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw DomainError("confidence out of range: must lie strictly inside (0,1)");
  }
  const double z = boost::math::quantile(boost::math::normal_distribution<double>{}, confidence);
  const double nd = static_cast<double>(n);
  const double phat = static_cast<double>(successes) / nd;
  const double z2 = z * z;
  const double center = phat + z2 / (2.0 * nd);
  const double half = z * std::sqrt(phat * (1.0 - phat) / nd + z2 / (4.0 * nd * nd));
  return std::min(1.0, (center + half) / (1.0 + z2 / nd));
}

std::vector<TrialStats> sweep(const std::vector<TrialConfig>& grid, int workers) {
  if (grid.empty()) throw DomainError("sweep needs at least one config");
  std::vector<TrialStats> results;
  results.reserve(grid.size());
  for (const TrialConfig& config : grid) {
    results.push_back(run_trials(config, workers));
  }
  return results;
}

}  // namespace montecarlo
}  // namespace seqcoin
