#include "seqcoin/sources.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "seqcoin/errors.hpp"

namespace seqcoin {

SyntheticSource::SyntheticSource(double p, std::uint64_t seed)
    : p_(p), seed_(seed), rng_(mix64(seed)) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("synthetic p out of range: must lie strictly inside (0,1)");
  }
}

FlipBatchResult SyntheticSource::flip_batch(std::uint64_t k) {
  if (k == 0) throw DomainError("batch size must be >= 1");
  return FlipBatchResult{binomial_draw(rng_, k, p_), k};
}

bool SyntheticSource::flip_one() {
  return uniform01(rng_) < p_;
}

std::string SyntheticSource::describe() const {
  std::ostringstream out;
  out << "synthetic(p=" << p_ << ",seed=" << seed_ << ")";
  return out.str();
}

RecordedSource::RecordedSource(std::vector<std::uint8_t> flips, std::string origin)
    : flips_(std::move(flips)), origin_(std::move(origin)) {}

RecordedSource RecordedSource::from_text(std::string_view text, std::string origin) {
  return RecordedSource{parse_flip_text(text), std::move(origin)};
}

RecordedSource RecordedSource::from_stream(std::istream& in, std::string origin) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return from_text(text, std::move(origin));
}

RecordedSource RecordedSource::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open flip stream file: " + path);
  return from_stream(in, "recorded(" + path + ")");
}

FlipBatchResult RecordedSource::flip_batch(std::uint64_t k) {
  if (k == 0) throw DomainError("batch size must be >= 1");
  if (k > remaining()) {
    throw SourceExhaustedError("recorded source exhausted: " + std::to_string(k) +
                                   " flips requested, " + std::to_string(remaining()) +
                                   " remain",
                               remaining());
  }
  std::uint64_t heads = 0;
  for (std::uint64_t i = 0; i < k; ++i) heads += flips_[position_++];
  return FlipBatchResult{heads, k};
}

std::string RecordedSource::describe() const {
  return origin_;
}

std::vector<std::uint8_t> parse_flip_text(std::string_view text) {
  std::vector<std::uint8_t> flips;
  flips.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'H':
      case '1':
        flips.push_back(1);
        break;
      case 'T':
      case '0':
        flips.push_back(0);
        break;
      case ' ':
      case '\t':
      case '\n':
      case '\r':
      case '\v':
      case '\f':
        break;
      default:
        throw StreamFormatError("invalid flip symbol at byte offset " + std::to_string(i) +
                                    " (expected H, T, 1, 0, or whitespace)",
                                i);
    }
  }
  return flips;
}

SyntheticSource derive_trial_source(std::uint64_t master_seed,
                                    std::uint64_t trial_index, double p) {
  return SyntheticSource{p, trial_seed(master_seed, trial_index)};
}

}  // namespace seqcoin
