#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pec/bit_block.hpp"

namespace pec {

/// Appends bits MSB-first into a growing byte buffer.
class BitWriter {
 public:
  void put_bit(bool v);
  void put_block(const BitBlock& b);
  void put_bytes(std::span<const std::uint8_t> bytes);  // bit position must be byte aligned

  std::size_t bit_count() const { return bit_count_; }
  /// Pads the final partial byte with zeros and returns the buffer.
  std::vector<std::uint8_t> finish();

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bit_count_ = 0;
};

/// Reads bits MSB-first from a byte buffer.
class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  bool get_bit();
  BitBlock get_block(std::size_t width);

  std::size_t bits_consumed() const { return pos_; }
  std::size_t bits_remaining() const { return bytes_.size() * 8 - pos_; }
  /// True when every bit from the current position to the end is zero.
  bool remainder_is_zero() const;

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace pec
