#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pec/bit_block.hpp"
#include "pec/chain_modes.hpp"
#include "pec/rng.hpp"

namespace pec {

/// Per-bit entropy of a Bernoulli(p) symbol in bits; 0 at p in {0, 1}.
double binary_entropy(double p);

/// i.i.d. Bernoulli(p) bit source. p is restricted to [0, 0.5]; sources with
/// larger p are equivalent up to complementing the bits.
class BernoulliSource {
 public:
  BernoulliSource(double p, std::uint64_t seed);

  double p() const { return p_; }

  /// n blocks of m i.i.d. bits each; deterministic for a given seed.
  PlaintextSequence sample_blocks(std::size_t n, std::size_t m);

 private:
  double p_;
  SplitMix64 rng_;
};

/// Explicit finite distribution over equal-width blocks.
class FiniteDistribution {
 public:
  FiniteDistribution(std::vector<std::pair<BitBlock, double>> support);

  static FiniteDistribution uniform(std::size_t count, std::size_t width);

  /// One "hex-block probability" pair per line; width inferred from the hex.
  static FiniteDistribution load_file(const std::string& path);
  void save_file(const std::string& path) const;

  const std::vector<std::pair<BitBlock, double>>& support() const { return support_; }
  std::size_t block_width() const { return support_.front().first.width(); }
  bool contains(const BitBlock& block) const;

  BitBlock sample(SplitMix64& rng) const;

 private:
  std::vector<std::pair<BitBlock, double>> support_;
  std::vector<double> cumulative_;
};

/// Expected number of guesses to hit a sample when guessing outcomes in
/// descending probability order: sum of i * p_(i) with p sorted descending.
double guessing_entropy(const FiniteDistribution& dist);

}  // namespace pec
