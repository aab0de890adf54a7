#include "pec/chain_modes.hpp"

#include <fstream>
#include <stdexcept>

namespace pec {

std::string mode_name(ChainMode mode) {
  switch (mode) {
    case ChainMode::ecb:
      return "ecb";
    case ChainMode::cbc:
      return "cbc";
    case ChainMode::ofb:
      return "ofb";
    case ChainMode::cfb:
      return "cfb";
  }
  throw std::logic_error("unknown mode");
}

ChainMode mode_from_name(const std::string& name) {
  if (name == "ecb") return ChainMode::ecb;
  if (name == "cbc") return ChainMode::cbc;
  if (name == "ofb") return ChainMode::ofb;
  if (name == "cfb") return ChainMode::cfb;
  throw std::invalid_argument("unknown mode: " + name);
}

void validate_sequence(const PlaintextSequence& blocks, std::size_t expected_width) {
  if (blocks.empty()) throw std::invalid_argument("sequence must hold at least one block");
  for (const auto& b : blocks) {
    if (b.width() != expected_width) {
      throw std::invalid_argument("sequence blocks must share the cipher width");
    }
  }
}

void ChainedCiphertext::validate() const {
  if (blocks.empty()) throw std::invalid_argument("ciphertext must hold at least one block");
  const std::size_t m = blocks.front().width();
  for (const auto& b : blocks) {
    if (b.width() != m) throw std::invalid_argument("ciphertext blocks must share one width");
  }
  if (mode == ChainMode::ecb) {
    if (iv.has_value()) throw std::invalid_argument("ECB ciphertext carries no IV");
  } else {
    if (!iv.has_value() || iv->width() != m) {
      throw std::invalid_argument("chained ciphertext requires one IV of block width");
    }
  }
}

ChainedCiphertext ecb_encrypt(const BlockPermutation& cipher, const PlaintextSequence& plain) {
  validate_sequence(plain, cipher.width());
  ChainedCiphertext ct;
  ct.mode = ChainMode::ecb;
  ct.blocks.reserve(plain.size());
  for (const auto& x : plain) ct.blocks.push_back(cipher.forward(x));
  return ct;
}

PlaintextSequence ecb_decrypt(const BlockPermutation& cipher, const ChainedCiphertext& ct) {
  ct.validate();
  if (ct.mode != ChainMode::ecb) throw std::invalid_argument("mode mismatch: expected ECB");
  PlaintextSequence plain;
  plain.reserve(ct.blocks.size());
  for (const auto& y : ct.blocks) plain.push_back(cipher.inverse(y));
  return plain;
}

ChainedCiphertext cbc_encrypt(const BlockPermutation& cipher, const PlaintextSequence& plain,
                              const BitBlock& iv) {
  validate_sequence(plain, cipher.width());
  if (iv.width() != cipher.width()) throw std::invalid_argument("IV width mismatch");
  ChainedCiphertext ct;
  ct.mode = ChainMode::cbc;
  ct.iv = iv;
  ct.blocks.reserve(plain.size());
  BitBlock prev = iv;  // Y_0 := IV
  for (const auto& x : plain) {
    prev = cipher.forward(x ^ prev);
    ct.blocks.push_back(prev);
  }
  return ct;
}

PlaintextSequence cbc_decrypt(const BlockPermutation& cipher, const ChainedCiphertext& ct) {
  ct.validate();
  if (ct.mode != ChainMode::cbc) throw std::invalid_argument("mode mismatch: expected CBC");
  PlaintextSequence plain;
  plain.reserve(ct.blocks.size());
  const BitBlock* prev = &*ct.iv;
  for (const auto& y : ct.blocks) {
    plain.push_back(cipher.inverse(y) ^ *prev);
    prev = &y;
  }
  return plain;
}

ChainedCiphertext ofb_encrypt(const BlockPermutation& cipher, const PlaintextSequence& plain,
                              const BitBlock& iv) {
  validate_sequence(plain, cipher.width());
  if (iv.width() != cipher.width()) throw std::invalid_argument("IV width mismatch");
  ChainedCiphertext ct;
  ct.mode = ChainMode::ofb;
  ct.iv = iv;
  ct.blocks.reserve(plain.size());
  BitBlock keystream = iv;
  for (const auto& x : plain) {
    keystream = cipher.forward(keystream);
    ct.blocks.push_back(x ^ keystream);
  }
  return ct;
}

PlaintextSequence ofb_decrypt(const BlockPermutation& cipher, const ChainedCiphertext& ct) {
  ct.validate();
  if (ct.mode != ChainMode::ofb) throw std::invalid_argument("mode mismatch: expected OFB");
  PlaintextSequence plain;
  plain.reserve(ct.blocks.size());
  BitBlock keystream = *ct.iv;
  for (const auto& y : ct.blocks) {
    keystream = cipher.forward(keystream);
    plain.push_back(y ^ keystream);
  }
  return plain;
}

ChainedCiphertext cfb_encrypt(const BlockPermutation& cipher, const PlaintextSequence& plain,
                              const BitBlock& iv) {
  validate_sequence(plain, cipher.width());
  if (iv.width() != cipher.width()) throw std::invalid_argument("IV width mismatch");
  ChainedCiphertext ct;
  ct.mode = ChainMode::cfb;
  ct.iv = iv;
  ct.blocks.reserve(plain.size());
  BitBlock feedback = iv;  // Y_0 := IV
  for (const auto& x : plain) {
    feedback = x ^ cipher.forward(feedback);
    ct.blocks.push_back(feedback);
  }
  return ct;
}

PlaintextSequence cfb_decrypt(const BlockPermutation& cipher, const ChainedCiphertext& ct) {
  ct.validate();
  if (ct.mode != ChainMode::cfb) throw std::invalid_argument("mode mismatch: expected CFB");
  PlaintextSequence plain;
  plain.reserve(ct.blocks.size());
  const BitBlock* feedback = &*ct.iv;
  for (const auto& y : ct.blocks) {
    plain.push_back(y ^ cipher.forward(*feedback));
    feedback = &y;
  }
  return plain;
}

ChainedCiphertext mode_encrypt(ChainMode mode, const BlockPermutation& cipher,
                               const PlaintextSequence& plain,
                               const std::optional<BitBlock>& iv) {
  if (mode == ChainMode::ecb) return ecb_encrypt(cipher, plain);
  if (!iv.has_value()) throw std::invalid_argument("chained modes require an IV");
  switch (mode) {
    case ChainMode::cbc:
      return cbc_encrypt(cipher, plain, *iv);
    case ChainMode::ofb:
      return ofb_encrypt(cipher, plain, *iv);
    case ChainMode::cfb:
      return cfb_encrypt(cipher, plain, *iv);
    default:
      throw std::logic_error("unreachable");
  }
}

PlaintextSequence mode_decrypt(const BlockPermutation& cipher, const ChainedCiphertext& ct) {
  switch (ct.mode) {
    case ChainMode::ecb:
      return ecb_decrypt(cipher, ct);
    case ChainMode::cbc:
      return cbc_decrypt(cipher, ct);
    case ChainMode::ofb:
      return ofb_decrypt(cipher, ct);
    case ChainMode::cfb:
      return cfb_decrypt(cipher, ct);
  }
  throw std::logic_error("unknown mode");
}

namespace {

void require_byte_width(std::size_t block_bits) {
  if (block_bits % 8 != 0) {
    throw std::invalid_argument("file I/O requires a whole number of bytes per block");
  }
}

void write_blocks(std::ofstream& out, const std::vector<BitBlock>& blocks) {
  for (const auto& b : blocks) {
    out.write(reinterpret_cast<const char*>(b.bytes().data()),
              static_cast<std::streamsize>(b.byte_size()));
  }
}

std::vector<std::uint8_t> read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

}  // namespace

void write_ciphertext_file(const std::string& path, const ChainedCiphertext& ct) {
  ct.validate();
  require_byte_width(ct.block_width());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  if (ct.iv.has_value()) {
    out.write(reinterpret_cast<const char*>(ct.iv->bytes().data()),
              static_cast<std::streamsize>(ct.iv->byte_size()));
  }
  write_blocks(out, ct.blocks);
}

ChainedCiphertext read_ciphertext_file(const std::string& path, ChainMode mode,
                                       std::size_t block_bits) {
  require_byte_width(block_bits);
  const auto data = read_all(path);
  const std::size_t block_bytes = block_bits / 8;
  const std::size_t iv_bytes = (mode == ChainMode::ecb) ? 0 : block_bytes;
  if (data.size() < iv_bytes + block_bytes || (data.size() - iv_bytes) % block_bytes != 0) {
    throw std::runtime_error("ciphertext file length is not a whole number of blocks");
  }
  ChainedCiphertext ct;
  ct.mode = mode;
  std::size_t off = 0;
  if (iv_bytes > 0) {
    ct.iv = BitBlock::from_bytes({data.data(), block_bytes}, block_bits);
    off = block_bytes;
  }
  while (off < data.size()) {
    ct.blocks.push_back(BitBlock::from_bytes({data.data() + off, block_bytes}, block_bits));
    off += block_bytes;
  }
  return ct;
}

void write_plaintext_file(const std::string& path, const PlaintextSequence& blocks) {
  if (blocks.empty()) throw std::invalid_argument("empty sequence");
  require_byte_width(blocks.front().width());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  write_blocks(out, blocks);
}

PlaintextSequence read_plaintext_file(const std::string& path, std::size_t block_bits) {
  require_byte_width(block_bits);
  const auto data = read_all(path);
  const std::size_t block_bytes = block_bits / 8;
  if (data.empty() || data.size() % block_bytes != 0) {
    throw std::runtime_error("plaintext file length is not a whole number of blocks");
  }
  PlaintextSequence blocks;
  for (std::size_t off = 0; off < data.size(); off += block_bytes) {
    blocks.push_back(BitBlock::from_bytes({data.data() + off, block_bytes}, block_bits));
  }
  return blocks;
}

}  // namespace pec
