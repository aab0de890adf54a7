#include "pec/toy_cipher.hpp"

#include <stdexcept>

#include "pec/rng.hpp"

namespace pec {

ToyFeistel::ToyFeistel(std::uint64_t key, std::size_t block_bits) : block_bits_(block_bits) {
  if (block_bits < kMinBits || block_bits > kMaxBits) {
    throw std::invalid_argument("toy cipher block width must be in [4, 32]");
  }
  left_bits_ = (block_bits + 1) / 2;
  right_bits_ = block_bits - left_bits_;
  SplitMix64 schedule(key ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(block_bits)));
  for (auto& rk : round_keys_) rk = schedule.next_u64();
}

std::uint64_t ToyFeistel::pack_key(std::span<const std::uint8_t> bytes) {
  if (bytes.size() > kMaxKeyBytes) {
    throw std::invalid_argument("toy cipher key must be at most 8 bytes");
  }
  std::uint64_t k = 0;
  for (auto b : bytes) k = (k << 8) | b;
  k <<= 8 * (kMaxKeyBytes - bytes.size());
  return k;
}

std::uint32_t ToyFeistel::round_fn(std::uint32_t right, int round) const {
  const std::uint64_t mixed = mix64(static_cast<std::uint64_t>(right) ^ round_keys_[round]);
  const std::uint32_t mask_a =
      left_bits_ == 32 ? 0xffffffffu : ((1u << left_bits_) - 1u);
  return static_cast<std::uint32_t>(mixed) & mask_a;
}

std::uint32_t ToyFeistel::forward_value(std::uint32_t x) const {
  for (int i = 0; i < kRounds; ++i) {
    const std::uint32_t left = x >> right_bits_;
    const std::uint32_t right =
        x & (right_bits_ == 0 ? 0u : ((1u << right_bits_) - 1u));
    x = (right << left_bits_) | (left ^ round_fn(right, i));
  }
  return x;
}

std::uint32_t ToyFeistel::inverse_value(std::uint32_t x) const {
  for (int i = kRounds - 1; i >= 0; --i) {
    const std::uint32_t right = x >> left_bits_;
    const std::uint32_t left_mixed =
        x & (left_bits_ == 32 ? 0xffffffffu : ((1u << left_bits_) - 1u));
    const std::uint32_t left = left_mixed ^ round_fn(right, i);
    x = (left << right_bits_) | right;
  }
  return x;
}

BitBlock ToyFeistel::forward(const BitBlock& block) const {
  check_width(block);
  return BitBlock::from_uint(forward_value(static_cast<std::uint32_t>(block.to_uint())),
                             block_bits_);
}

BitBlock ToyFeistel::inverse(const BitBlock& block) const {
  check_width(block);
  return BitBlock::from_uint(inverse_value(static_cast<std::uint32_t>(block.to_uint())),
                             block_bits_);
}

}  // namespace pec
