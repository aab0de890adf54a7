#pragma once

#include <array>
#include <cstdint>

#include "pec/cipher.hpp"

namespace pec {

/// Small-block keyed permutation for exhaustive experiments (4..32-bit blocks).
///
/// The construction is an 8-round Feistel network, which is a bijection for
/// any round function. The exact recipe is fixed so results are bit-identical
/// everywhere:
///   - a block is read as an m-bit integer, first bit most significant;
///   - the left half holds the top a = ceil(m/2) bits, the right half the
///     remaining b = m - a bits;
///   - the key (up to 8 bytes, big-endian, zero padded) seeds a SplitMix64
///     stream whose first 8 outputs are the round keys;
///   - round i maps (L, R) to (R, L xor F_i(R)) with
///     F_i(R) = mix64(R xor rk[i]) truncated to a bits.
///
/// This is a test oracle, not a secure cipher.
class ToyFeistel : public BlockPermutation {
 public:
  static constexpr std::size_t kMinBits = 4;
  static constexpr std::size_t kMaxBits = 32;
  static constexpr std::size_t kMaxKeyBytes = 8;
  static constexpr int kRounds = 8;

  ToyFeistel(std::uint64_t key, std::size_t block_bits);

  std::size_t width() const override { return block_bits_; }
  BitBlock forward(const BitBlock& block) const override;
  BitBlock inverse(const BitBlock& block) const override;

  std::uint32_t forward_value(std::uint32_t x) const;
  std::uint32_t inverse_value(std::uint32_t x) const;

  /// Packs up to 8 key bytes big-endian into the integer key.
  static std::uint64_t pack_key(std::span<const std::uint8_t> bytes);

 private:
  std::uint32_t round_fn(std::uint32_t right, int round) const;

  std::size_t block_bits_;
  std::size_t left_bits_;   // a = ceil(m/2)
  std::size_t right_bits_;  // b = m - a
  std::array<std::uint64_t, kRounds> round_keys_;
};

}  // namespace pec
