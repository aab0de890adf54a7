#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "pec/bit_block.hpp"
#include "pec/source_models.hpp"

namespace pec {

/// Keeps the first t bits of an m-bit ciphertext. The only compressor whose
/// preimage sets are trivially enumerable, which is what makes the second
/// exhaustive strategy runnable at desk scale.
struct TruncationCompressor {
  std::size_t t = 0;
  std::size_t m = 0;

  TruncationCompressor(std::size_t kept_bits, std::size_t width);
  BitBlock operator()(const BitBlock& y) const;
};

BitBlock truncate_compress(const BitBlock& y, std::size_t t);

/// Outcome of one exhaustive decoding attempt.
struct ExhaustiveRun {
  std::uint64_t queries_made = 0;
  bool recovered = false;
  int strategy = 0;
  std::optional<BitBlock> answer;
};

using BlockOracle = std::function<BitBlock(const BitBlock&)>;
using MembershipTest = std::function<bool(const BitBlock&)>;

/// Strategy 1: walk the plaintext support in decreasing probability order
/// (ties by ascending block value), encrypt each candidate, and stop at the
/// first whose compressed ciphertext matches c. With a collision-free
/// compressor the expected query count over the distribution equals its
/// guessing entropy.
ExhaustiveRun exhaustive_strategy1(const BitBlock& c, const FiniteDistribution& dist,
                                   const BlockOracle& enc_oracle,
                                   const std::function<BitBlock(const BitBlock&)>& compressor);

/// Strategy 2: enumerate the preimage set of c (all completions of the kept
/// prefix, ascending), decrypt each, and stop at the first decryption inside
/// the distribution support.
ExhaustiveRun exhaustive_strategy2(const BitBlock& c, const BlockOracle& dec_oracle,
                                   const TruncationCompressor& compressor,
                                   const MembershipTest& membership);

/// Monte-Carlo estimate, over `trials` random toy-cipher keys, of the
/// probability that any two of the N support ciphertexts share a t-bit
/// prefix. Support is the first N values of the m-bit block space.
double collision_probability(std::size_t m, std::size_t support_size, std::size_t t,
                             std::size_t trials, std::uint64_t seed);

/// Birthday approximation 1 - exp(-N(N-1)/2^{t+1}) of the same probability.
double birthday_bound(std::size_t support_size, std::size_t t);

}  // namespace pec
