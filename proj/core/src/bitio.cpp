#include "pec/bitio.hpp"

#include <stdexcept>

namespace pec {

void BitWriter::put_bit(bool v) {
  if (bit_count_ % 8 == 0) bytes_.push_back(0);
  if (v) bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - (bit_count_ & 7)));
  ++bit_count_;
}

void BitWriter::put_block(const BitBlock& b) {
  for (std::size_t i = 0; i < b.width(); ++i) put_bit(b.get(i) != 0);
}

void BitWriter::put_bytes(std::span<const std::uint8_t> bytes) {
  if (bit_count_ % 8 != 0) throw std::logic_error("put_bytes requires byte alignment");
  bytes_.insert(bytes_.end(), bytes.begin(), bytes.end());
  bit_count_ += bytes.size() * 8;
}

std::vector<std::uint8_t> BitWriter::finish() { return std::move(bytes_); }

bool BitReader::get_bit() {
  if (pos_ >= bytes_.size() * 8) throw std::out_of_range("bit stream exhausted");
  const bool v = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1;
  ++pos_;
  return v;
}

BitBlock BitReader::get_block(std::size_t width) {
  BitBlock b(width);
  for (std::size_t i = 0; i < width; ++i) b.set(i, get_bit());
  return b;
}

bool BitReader::remainder_is_zero() const {
  for (std::size_t i = pos_; i < bytes_.size() * 8; ++i) {
    if ((bytes_[i >> 3] >> (7 - (i & 7))) & 1) return false;
  }
  return true;
}

}  // namespace pec
