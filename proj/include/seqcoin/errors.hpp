#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "seqcoin/types.hpp"

namespace seqcoin {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed text input (probabilities, flip streams, flags).
struct ParseError : Error {
  using Error::Error;
};

/// Structurally valid input outside the admissible domain
/// (value out of range, p = q, heads > k).
struct DomainError : Error {
  using Error::Error;
};

/// The sample-size schedule left the representable range: the round index
/// exceeded the configured cap, or k itself overflows 64 bits.
struct BudgetOverflowError : Error {
  explicit BudgetOverflowError(const std::string& what) : Error(what) {}

  /// Rounds completed before the overflow, when thrown from a run.
  std::optional<Transcript> partial;
};

/// A recorded source ran out of symbols mid-batch.
struct SourceExhaustedError : Error {
  SourceExhaustedError(const std::string& what, std::uint64_t remaining_symbols)
      : Error(what), remaining(remaining_symbols) {}

  std::uint64_t remaining;
  std::optional<Transcript> partial;
};

/// A streaming run was fed a symbol after reaching a terminal decision.
struct UseAfterDecisionError : Error {
  using Error::Error;
};

/// A recorded flip stream contained a byte other than H/T/1/0/whitespace.
struct StreamFormatError : Error {
  StreamFormatError(const std::string& what, std::uint64_t offset)
      : Error(what), byte_offset(offset) {}

  std::uint64_t byte_offset;
};

}  // namespace seqcoin
