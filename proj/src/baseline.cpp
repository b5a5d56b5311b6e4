#include "seqcoin/baseline.hpp"

#include "seqcoin/errors.hpp"
#include "seqcoin/schedule.hpp"

namespace seqcoin {

BaselineResult run_known_gap(BernoulliSource& source, const Probability& q,
                             const Probability& epsilon, const Confidence& delta) {
  // The known-gap setting requires eps < min{q, 1-q}; checked exactly.
  Rational max_eps = std::min(q.value(), Rational{1} - q.value());
  if (!(epsilon.value() < max_eps)) {
    throw DomainError("epsilon " + epsilon.text() + " out of range: must be < min{q, 1-q} = " +
                      decimal_string(max_eps));
  }

  std::uint64_t k = fixed_sample_size(epsilon.value().convert_to<double>(), delta);
  FlipBatchResult batch = source.flip_batch(k);

  // YES iff X <= q*k, tie included; the comparison is exact.
  Rational boundary = q.value() * Rational{BigInt{k}};
  Decision decision =
      Rational{BigInt{batch.heads}} <= boundary ? Decision::kYes : Decision::kNo;
  return BaselineResult{decision, batch.heads, batch.flips_consumed};
}

}  // namespace seqcoin
