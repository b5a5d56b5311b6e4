#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seqcoin/types.hpp"

namespace seqcoin {
namespace montecarlo {

enum class Algorithm { kCoinFlipper, kBaseline };

struct TrialConfig {
  double p = 0.5;                 // sampling probability of heads
  std::string p_text;             // decimal echo for reports
  std::string q;                  // decimal text, parsed exactly
  std::string delta;              // decimal text
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
  std::optional<std::uint64_t> budget;
  Algorithm algorithm = Algorithm::kCoinFlipper;
  std::string epsilon;            // decimal text, baseline only
  double wilson_confidence = 0.99;
};

/// Aggregates over one batch of trials. A trial is "wrong" when p < q but
/// it decided NO, or p > q but it decided YES. error_rate is wrong over
/// decided trials only; no_decisions flags the 0/0 case.
struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t wrong = 0;
  std::uint64_t undecided = 0;
  double error_rate = 0;
  bool no_decisions = false;
  double error_rate_wilson_hi = 0;
  double mean_iterations = 0;
  double sem_iterations = 0;
  double mean_flips = 0;
  double sem_flips = 0;
  int d = 0;                      // 0 when p = q
  double iteration_bound = 0;     // NaN when p = q
  double flips_upper_bound = 0;   // NaN when p = q

  std::uint64_t decisions() const { return trials - undecided; }

  friend bool operator==(const TrialStats&, const TrialStats&) = default;
};

/// Runs config.trials independent trials, each on a source derived from
/// (master_seed, trial_index). The trial loop is OpenMP-parallel, but
/// every aggregate is a deterministic function of the config alone:
/// per-trial outcomes land in arrays indexed by trial and are reduced
/// serially in index order, so any worker count gives identical stats.
/// workers = 0 means use the OpenMP default.
TrialStats run_trials(const TrialConfig& config, int workers = 0);

/// Single-threaded reference implementation with the same contract,
/// kept for testing the parallel kernel against.
TrialStats run_trials_serial(const TrialConfig& config);

/// Wilson score upper confidence bound on a proportion at the given
/// one-sided level. Always within [successes/n, 1].
double wilson_upper(std::uint64_t successes, std::uint64_t n, double confidence);

/// run_trials over each config in order. The first failing config aborts
/// the sweep; partial results are discarded.
std::vector<TrialStats> sweep(const std::vector<TrialConfig>& grid, int workers = 0);

}  // namespace montecarlo
}  // namespace seqcoin
