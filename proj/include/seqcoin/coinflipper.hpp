#pragma once

#include <cstdint>
#include <optional>

#include "seqcoin/schedule.hpp"
#include "seqcoin/sources.hpp"
#include "seqcoin/types.hpp"

namespace seqcoin {

/// Runs the sequential test: rounds i = 1, 2, 3, ... with eps = 1/2^i and
/// k = coinflipper_round_size(i, delta), stopping at the first YES/NO
/// verdict. The comparison thresholds are evaluated in exact rational
/// arithmetic.
///
/// The budget is checked before each round starts, so a round is never
/// truncated and total_flips <= budget always. When the next round would
/// exceed the budget the run stops with Decision::kUndecided and the
/// rounds executed so far.
///
/// SourceExhaustedError and BudgetOverflowError (round index past
/// kMaxRound) propagate with the partial transcript attached.
Transcript run_coinflipper(BernoulliSource& source, const Probability& q,
                           const Confidence& delta,
                           std::optional<std::uint64_t> budget = std::nullopt);

/// Incremental form of run_coinflipper: flips are fed one at a time and
/// verdicts fall on exactly the same symbol as the batch run.
class StreamingRun {
 public:
  StreamingRun(const Probability& q, const Confidence& delta,
               std::optional<std::uint64_t> budget = std::nullopt);

  /// Feeds one flip. Returns the decision once the run terminates;
  /// nullopt while more symbols are needed. Throws UseAfterDecisionError
  /// if called after a terminal decision.
  std::optional<Decision> feed(bool heads);

  bool finished() const { return finished_; }
  Decision decision() const { return transcript_.decision; }

  /// Transcript of the run so far; complete once finished() is true.
  const Transcript& transcript() const { return transcript_; }

 private:
  void begin_round_or_stop();

  Probability q_;
  Confidence delta_;
  std::optional<std::uint64_t> budget_;
  bool finished_ = false;
  int round_ = 0;
  std::uint64_t round_samples_ = 0;
  std::uint64_t fed_ = 0;
  std::uint64_t heads_ = 0;
  Transcript transcript_;
};

}  // namespace seqcoin
