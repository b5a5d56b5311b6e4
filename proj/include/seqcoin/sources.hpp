#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "seqcoin/sampling.hpp"

namespace seqcoin {

struct FlipBatchResult {
  std::uint64_t heads = 0;
  std::uint64_t flips_consumed = 0;
};

/// A stateful stream of coin flips. Single consumer: a source instance is
/// owned by exactly one run and never shared between concurrent trials.
class BernoulliSource {
 public:
  virtual ~BernoulliSource() = default;

  /// Consumes exactly k flips and returns the number of heads among them.
  /// Recorded sources throw SourceExhaustedError when fewer than k
  /// symbols remain.
  virtual FlipBatchResult flip_batch(std::uint64_t k) = 0;

  /// Human-readable descriptor, e.g. "synthetic(p=0.3,seed=42)".
  virtual std::string describe() const = 0;
};

/// Pseudo-random coin with fixed heads probability p. Batches draw the
/// head count directly from Binomial(k, p); flip_one() keeps the
/// per-flip path for equivalence tests.
class SyntheticSource final : public BernoulliSource {
 public:
  SyntheticSource(double p, std::uint64_t seed);

  FlipBatchResult flip_batch(std::uint64_t k) override;
  bool flip_one();
  std::string describe() const override;

  double p() const { return p_; }

 private:
  double p_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

/// Fixed sequence of flips decoded from text (H/T, aliases 1/0,
/// whitespace ignored).
class RecordedSource final : public BernoulliSource {
 public:
  RecordedSource(std::vector<std::uint8_t> flips, std::string origin);

  static RecordedSource from_text(std::string_view text, std::string origin);
  static RecordedSource from_stream(std::istream& in, std::string origin);
  static RecordedSource from_file(const std::string& path);

  FlipBatchResult flip_batch(std::uint64_t k) override;
  std::string describe() const override;

  std::uint64_t remaining() const { return flips_.size() - position_; }

 private:
  std::vector<std::uint8_t> flips_;
  std::size_t position_ = 0;
  std::string origin_;
};

/// Decodes a flip stream; throws StreamFormatError with the byte offset
/// of the first invalid character.
std::vector<std::uint8_t> parse_flip_text(std::string_view text);

/// Source for trial `trial_index` of a Monte Carlo batch. Deterministic
/// in (master_seed, trial_index), independent across indices.
SyntheticSource derive_trial_source(std::uint64_t master_seed,
                                    std::uint64_t trial_index, double p);

}  // namespace seqcoin
