#include "pec/bit_block.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "pec/rng.hpp"

namespace pec {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument("invalid hex digit");
}

}  // namespace

void BitBlock::clear_pad_bits() {
  const std::size_t rem = width_ & 7;
  if (rem != 0 && !bytes_.empty()) {
    bytes_.back() &= static_cast<std::uint8_t>(0xffu << (8 - rem));
  }
}

BitBlock BitBlock::from_bytes(std::span<const std::uint8_t> bytes, std::size_t width) {
  if (bytes.size() != (width + 7) / 8) {
    throw std::invalid_argument("byte count does not match bit width");
  }
  BitBlock b(width);
  std::copy(bytes.begin(), bytes.end(), b.bytes_.begin());
  b.clear_pad_bits();
  return b;
}

BitBlock BitBlock::from_hex(const std::string& hex) {
  BitBlock b(hex.size() * 4);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const std::uint8_t nibble = static_cast<std::uint8_t>(hex_digit(hex[i]));
    b.bytes_[i / 2] |= static_cast<std::uint8_t>((i % 2 == 0) ? nibble << 4 : nibble);
  }
  return b;
}

BitBlock BitBlock::from_uint(std::uint64_t value, std::size_t width) {
  if (width > 64) throw std::invalid_argument("from_uint supports width <= 64");
  if (width < 64 && (value >> width) != 0) {
    throw std::invalid_argument("value does not fit in width");
  }
  BitBlock b(width);
  for (std::size_t i = 0; i < width; ++i) {
    b.set(i, (value >> (width - 1 - i)) & 1);
  }
  return b;
}

BitBlock BitBlock::random(std::size_t width, SplitMix64& rng) {
  BitBlock b(width);
  for (auto& byte : b.bytes_) byte = static_cast<std::uint8_t>(rng.next_u64() >> 56);
  b.clear_pad_bits();
  return b;
}

BitBlock& BitBlock::operator^=(const BitBlock& other) {
  if (width_ != other.width_) {
    throw std::invalid_argument("XOR requires equal widths");
  }
  for (std::size_t i = 0; i < bytes_.size(); ++i) bytes_[i] ^= other.bytes_[i];
  return *this;
}

bool BitBlock::lex_less(const BitBlock& other) const {
  if (width_ != other.width_) {
    throw std::invalid_argument("lex_less requires equal widths");
  }
  // Pad bits are zero, so byte order equals bit order.
  return bytes_ < other.bytes_;
}

std::size_t BitBlock::popcount() const {
  std::size_t n = 0;
  for (auto byte : bytes_) n += static_cast<std::size_t>(std::popcount(byte));
  return n;
}

BitBlock BitBlock::prefix(std::size_t t) const { return slice(0, t); }

BitBlock BitBlock::slice(std::size_t offset, std::size_t len) const {
  if (offset + len > width_) throw std::out_of_range("slice out of range");
  BitBlock out(len);
  for (std::size_t i = 0; i < len; ++i) out.set(i, get(offset + i));
  return out;
}

BitBlock BitBlock::concat(const std::vector<BitBlock>& blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.width();
  BitBlock out(total);
  std::size_t pos = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.width(); ++i) out.set(pos++, b.get(i));
  }
  return out;
}

std::vector<BitBlock> BitBlock::split(std::size_t width) const {
  if (width == 0 || width_ % width != 0) {
    throw std::invalid_argument("split width must divide block width");
  }
  std::vector<BitBlock> out;
  out.reserve(width_ / width);
  for (std::size_t off = 0; off < width_; off += width) {
    out.push_back(slice(off, width));
  }
  return out;
}

std::uint64_t BitBlock::to_uint() const {
  if (width_ > 64) throw std::invalid_argument("to_uint supports width <= 64");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width_; ++i) v = (v << 1) | static_cast<std::uint64_t>(get(i));
  return v;
}

std::string BitBlock::to_hex() const {
  if (width_ % 4 != 0) throw std::invalid_argument("to_hex requires width % 4 == 0");
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(width_ / 4);
  for (std::size_t i = 0; i < width_ / 4; ++i) {
    const std::uint8_t byte = bytes_[i / 2];
    out.push_back(digits[(i % 2 == 0) ? (byte >> 4) : (byte & 0xf)]);
  }
  return out;
}

std::size_t hamming_distance(const BitBlock& a, const BitBlock& b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("hamming_distance requires equal widths");
  }
  std::size_t n = 0;
  auto ab = a.bytes();
  auto bb = b.bytes();
  for (std::size_t i = 0; i < ab.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(static_cast<std::uint8_t>(ab[i] ^ bb[i])));
  }
  return n;
}

}  // namespace pec
