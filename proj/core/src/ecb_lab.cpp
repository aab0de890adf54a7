#include "pec/ecb_lab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "pec/toy_cipher.hpp"

namespace pec {

TruncationCompressor::TruncationCompressor(std::size_t kept_bits, std::size_t width)
    : t(kept_bits), m(width) {
  if (t < 1 || t > m) throw std::invalid_argument("truncation requires 1 <= t <= m");
}

BitBlock TruncationCompressor::operator()(const BitBlock& y) const {
  if (y.width() != m) throw std::invalid_argument("truncation: block width mismatch");
  return y.prefix(t);
}

BitBlock truncate_compress(const BitBlock& y, std::size_t t) {
  return TruncationCompressor(t, y.width())(y);
}

ExhaustiveRun exhaustive_strategy1(const BitBlock& c, const FiniteDistribution& dist,
                                   const BlockOracle& enc_oracle,
                                   const std::function<BitBlock(const BitBlock&)>& compressor) {
  // Descending probability, ties by ascending block value, so the walk order
  // is deterministic.
  std::vector<const std::pair<BitBlock, double>*> order;
  order.reserve(dist.support().size());
  for (const auto& entry : dist.support()) order.push_back(&entry);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    if (a->second != b->second) return a->second > b->second;
    return a->first.lex_less(b->first);
  });

  ExhaustiveRun run;
  run.strategy = 1;
  for (const auto* entry : order) {
    ++run.queries_made;
    if (compressor(enc_oracle(entry->first)) == c) {
      run.recovered = true;
      run.answer = entry->first;
      return run;
    }
  }
  return run;  // support exhausted; possible only under compressor collisions
}

ExhaustiveRun exhaustive_strategy2(const BitBlock& c, const BlockOracle& dec_oracle,
                                   const TruncationCompressor& compressor,
                                   const MembershipTest& membership) {
  if (c.width() != compressor.t) throw std::invalid_argument("strategy2: compressed width");
  const std::size_t free_bits = compressor.m - compressor.t;
  if (free_bits > 30) throw std::invalid_argument("strategy2: preimage set too large");

  ExhaustiveRun run;
  run.strategy = 2;
  const std::uint64_t count = 1ull << free_bits;
  for (std::uint64_t suffix = 0; suffix < count; ++suffix) {
    BitBlock candidate(compressor.m);
    for (std::size_t i = 0; i < compressor.t; ++i) candidate.set(i, c.get(i));
    for (std::size_t i = 0; i < free_bits; ++i) {
      candidate.set(compressor.t + i, (suffix >> (free_bits - 1 - i)) & 1);
    }
    ++run.queries_made;
    const BitBlock plain = dec_oracle(candidate);
    if (membership(plain)) {
      run.recovered = true;
      run.answer = plain;
      return run;
    }
  }
  return run;
}

double collision_probability(std::size_t m, std::size_t support_size, std::size_t t,
                             std::size_t trials, std::uint64_t seed) {
  if (t < 1 || t > m) throw std::invalid_argument("collision_probability: bad t");
  if (trials == 0) throw std::invalid_argument("collision_probability: trials == 0");
  if (m < 64 && support_size > (1ull << m)) {
    throw std::invalid_argument("collision_probability: support larger than block space");
  }
  SplitMix64 rng(seed);
  std::size_t collisions = 0;
  std::unordered_set<std::uint64_t> prefixes;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const ToyFeistel cipher(rng.next_u64(), m);
    prefixes.clear();
    bool hit = false;
    for (std::size_t v = 0; v < support_size && !hit; ++v) {
      const BitBlock y = cipher.forward(BitBlock::from_uint(v, m));
      hit = !prefixes.insert(y.prefix(t).to_uint()).second;
    }
    if (hit) ++collisions;
  }
  return static_cast<double>(collisions) / static_cast<double>(trials);
}

double birthday_bound(std::size_t support_size, std::size_t t) {
  const double pairs =
      0.5 * static_cast<double>(support_size) * static_cast<double>(support_size - 1);
  return 1.0 - std::exp(-pairs * std::exp2(-static_cast<double>(t)));
}

}  // namespace pec
