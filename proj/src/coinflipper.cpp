#include "seqcoin/coinflipper.hpp"

#include <utility>

#include "seqcoin/errors.hpp"

namespace seqcoin {

namespace {

RunParams make_params(const Probability& q, const Confidence& delta,
                      std::optional<std::uint64_t> budget, std::string source) {
  return RunParams{q.text(), delta.text(), budget, std::move(source)};
}

Decision decision_of(Verdict verdict) {
  return verdict == Verdict::kYes ? Decision::kYes : Decision::kNo;
}

}  // namespace

Transcript run_coinflipper(BernoulliSource& source, const Probability& q,
                           const Confidence& delta,
                           std::optional<std::uint64_t> budget) {
  Transcript transcript;
  transcript.params = make_params(q, delta, budget, source.describe());
  transcript.decision = Decision::kUndecided;

  for (int round = 1;; ++round) {
    std::uint64_t k;
    try {
      k = coinflipper_round_size(round, delta);
    } catch (BudgetOverflowError& err) {
      err.partial = transcript;
      throw;
    }
    // A round is never truncated: stop before starting one that would
    // push total_flips past the budget.
    if (budget && transcript.total_flips + k > *budget) return transcript;

    FlipBatchResult batch;
    try {
      batch = source.flip_batch(k);
    } catch (SourceExhaustedError& err) {
      err.partial = transcript;
      throw;
    }
    transcript.total_flips += batch.flips_consumed;

    ExactThreshold threshold{q.value(), k, round};
    Verdict verdict = decide_round(batch.heads, threshold);
    transcript.rounds.push_back(RoundOutcome{round, k, batch.heads, verdict});
    if (verdict != Verdict::kContinue) {
      transcript.decision = decision_of(verdict);
      return transcript;
    }
  }
}

StreamingRun::StreamingRun(const Probability& q, const Confidence& delta,
                           std::optional<std::uint64_t> budget)
    : q_(q), delta_(delta), budget_(budget) {
  transcript_.params = make_params(q, delta, budget, "streaming");
  transcript_.decision = Decision::kUndecided;
  begin_round_or_stop();
}

void StreamingRun::begin_round_or_stop() {
  ++round_;
  std::uint64_t k;
  try {
    k = coinflipper_round_size(round_, delta_);
  } catch (BudgetOverflowError& err) {
    err.partial = transcript_;
    throw;
  }
  if (budget_ && transcript_.total_flips + k > *budget_) {
    finished_ = true;  // decision stays UNDECIDED
    return;
  }
  round_samples_ = k;
  fed_ = 0;
  heads_ = 0;
}

std::optional<Decision> StreamingRun::feed(bool heads) {
  if (finished_) {
    throw UseAfterDecisionError("flip fed after the run reached decision " +
                                std::string(to_string(transcript_.decision)));
  }
  heads_ += heads ? 1 : 0;
  ++fed_;
  ++transcript_.total_flips;
  if (fed_ < round_samples_) return std::nullopt;

  ExactThreshold threshold{q_.value(), round_samples_, round_};
  Verdict verdict = decide_round(heads_, threshold);
  transcript_.rounds.push_back(RoundOutcome{round_, round_samples_, heads_, verdict});
  if (verdict != Verdict::kContinue) {
    transcript_.decision = decision_of(verdict);
    finished_ = true;
    return transcript_.decision;
  }
  begin_round_or_stop();
  if (finished_) return transcript_.decision;
  return std::nullopt;
}

}  // namespace seqcoin
