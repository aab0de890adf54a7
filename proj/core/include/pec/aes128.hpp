#pragma once

#include <array>
#include <cstdint>

#include "pec/cipher.hpp"

namespace pec {

/// AES-128 per FIPS 197 (straightforward table-free byte implementation).
class Aes128 : public BlockPermutation {
 public:
  static constexpr std::size_t kBlockBits = 128;
  static constexpr std::size_t kKeyBytes = 16;

  explicit Aes128(const std::array<std::uint8_t, kKeyBytes>& key);

  std::size_t width() const override { return kBlockBits; }
  BitBlock forward(const BitBlock& block) const override;
  BitBlock inverse(const BitBlock& block) const override;

  void encrypt_block(const std::uint8_t in[16], std::uint8_t out[16]) const;
  void decrypt_block(const std::uint8_t in[16], std::uint8_t out[16]) const;

 private:
  std::array<std::uint8_t, 176> round_keys_;  // 11 round keys of 16 bytes
};

}  // namespace pec
