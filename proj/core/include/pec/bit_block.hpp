#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pec {

class SplitMix64;

/// Fixed-width sequence of m bits, the unit every cipher and code in this
/// library operates on.
///
/// Bit order is fixed once and for all: bit 0 is the most significant bit of
/// byte 0, bit 7 the least significant bit of byte 0, bit 8 the MSB of byte 1,
/// and so on. Unused bits in the final byte are kept at zero, so equality and
/// serialization reduce to byte comparisons.
class BitBlock {
 public:
  BitBlock() = default;
  explicit BitBlock(std::size_t width) : width_(width), bytes_((width + 7) / 8, 0) {}

  static BitBlock from_bytes(std::span<const std::uint8_t> bytes, std::size_t width);
  static BitBlock from_hex(const std::string& hex);  // width = 4 * digits
  static BitBlock from_uint(std::uint64_t value, std::size_t width);  // width <= 64
  static BitBlock random(std::size_t width, SplitMix64& rng);

  std::size_t width() const { return width_; }
  bool empty() const { return width_ == 0; }
  std::size_t byte_size() const { return bytes_.size(); }
  std::span<const std::uint8_t> bytes() const { return bytes_; }

  int get(std::size_t i) const {
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
  }
  void set(std::size_t i, bool v) {
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - (i & 7)));
    if (v) {
      bytes_[i >> 3] |= mask;
    } else {
      bytes_[i >> 3] &= static_cast<std::uint8_t>(~mask);
    }
  }
  void flip(std::size_t i) { set(i, !get(i)); }

  BitBlock& operator^=(const BitBlock& other);
  friend BitBlock operator^(BitBlock lhs, const BitBlock& rhs) { return lhs ^= rhs; }

  bool operator==(const BitBlock& other) const = default;
  /// Lexicographic order on the bit sequence (equal widths required).
  bool lex_less(const BitBlock& other) const;

  std::size_t popcount() const;

  /// First t bits, in block bit order.
  BitBlock prefix(std::size_t t) const;
  /// Bits [offset, offset+len).
  BitBlock slice(std::size_t offset, std::size_t len) const;
  /// Concatenation of equal-width blocks into one long block.
  static BitBlock concat(const std::vector<BitBlock>& blocks);
  /// Inverse of concat: split into chunks of `width` bits each.
  std::vector<BitBlock> split(std::size_t width) const;

  std::uint64_t to_uint() const;  // width <= 64
  std::string to_hex() const;     // width must be a multiple of 4

 private:
  void clear_pad_bits();

  std::size_t width_ = 0;
  std::vector<std::uint8_t> bytes_;
};

std::size_t hamming_distance(const BitBlock& a, const BitBlock& b);

}  // namespace pec
