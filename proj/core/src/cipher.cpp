#include "pec/cipher.hpp"

#include <array>
#include <fstream>
#include <stdexcept>

#include "pec/aes128.hpp"
#include "pec/toy_cipher.hpp"

namespace pec {

std::string family_name(CipherFamily family) {
  switch (family) {
    case CipherFamily::aes128:
      return "aes128";
    case CipherFamily::toy_feistel:
      return "toy";
  }
  throw std::logic_error("unknown cipher family");
}

CipherFamily family_from_name(const std::string& name) {
  if (name == "aes128") return CipherFamily::aes128;
  if (name == "toy") return CipherFamily::toy_feistel;
  throw std::invalid_argument("unknown cipher family: " + name);
}

void CipherKey::validate() const {
  switch (family) {
    case CipherFamily::aes128:
      if (bytes.size() != Aes128::kKeyBytes) {
        throw std::invalid_argument("aes128 requires a 16-byte key");
      }
      if (block_bits != Aes128::kBlockBits) {
        throw std::invalid_argument("aes128 operates on 128-bit blocks");
      }
      break;
    case CipherFamily::toy_feistel:
      if (bytes.empty() || bytes.size() > ToyFeistel::kMaxKeyBytes) {
        throw std::invalid_argument("toy cipher key must be 1..8 bytes");
      }
      if (block_bits < ToyFeistel::kMinBits || block_bits > ToyFeistel::kMaxBits) {
        throw std::invalid_argument("toy cipher block width must be in [4, 32]");
      }
      break;
  }
}

void BlockPermutation::check_width(const BitBlock& block) const {
  if (block.width() != width()) {
    throw std::invalid_argument("block width does not match cipher width");
  }
}

std::unique_ptr<BlockPermutation> make_block_cipher(const CipherKey& key) {
  key.validate();
  switch (key.family) {
    case CipherFamily::aes128: {
      std::array<std::uint8_t, Aes128::kKeyBytes> k;
      std::copy(key.bytes.begin(), key.bytes.end(), k.begin());
      return std::make_unique<Aes128>(k);
    }
    case CipherFamily::toy_feistel:
      return std::make_unique<ToyFeistel>(ToyFeistel::pack_key(key.bytes), key.block_bits);
  }
  throw std::logic_error("unknown cipher family");
}

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

CipherKey load_key_file(const std::string& path, CipherFamily family, std::size_t block_bits) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open key file: " + path);
  std::string hex;
  in >> hex;
  if (hex.empty() || hex.size() % 2 != 0) {
    throw std::runtime_error("key file must hold an even number of hex digits");
  }
  CipherKey key;
  key.family = family;
  key.block_bits = block_bits;
  key.bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_digit(hex[i]);
    const int lo = hex_digit(hex[i + 1]);
    if (hi < 0 || lo < 0) throw std::runtime_error("invalid hex in key file");
    key.bytes.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
  }
  key.validate();
  return key;
}

void save_key_file(const std::string& path, const CipherKey& key) {
  key.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write key file: " + path);
  static const char* digits = "0123456789abcdef";
  for (auto b : key.bytes) {
    out << digits[b >> 4] << digits[b & 0xf];
  }
  out << '\n';
}

}  // namespace pec
