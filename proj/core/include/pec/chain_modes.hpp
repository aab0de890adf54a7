#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pec/bit_block.hpp"
#include "pec/cipher.hpp"

namespace pec {

enum class ChainMode : std::uint8_t { ecb = 0, cbc = 1, ofb = 2, cfb = 3 };

std::string mode_name(ChainMode mode);
ChainMode mode_from_name(const std::string& name);

/// n >= 1 blocks of uniform width.
using PlaintextSequence = std::vector<BitBlock>;

void validate_sequence(const PlaintextSequence& blocks, std::size_t expected_width);

/// Output of a mode of operation: ECB carries no IV, all other modes carry
/// exactly one IV of block width.
struct ChainedCiphertext {
  ChainMode mode = ChainMode::ecb;
  std::optional<BitBlock> iv;
  std::vector<BitBlock> blocks;

  std::size_t block_width() const { return blocks.empty() ? 0 : blocks.front().width(); }
  void validate() const;
};

ChainedCiphertext ecb_encrypt(const BlockPermutation& cipher, const PlaintextSequence& plain);
PlaintextSequence ecb_decrypt(const BlockPermutation& cipher, const ChainedCiphertext& ct);

ChainedCiphertext cbc_encrypt(const BlockPermutation& cipher, const PlaintextSequence& plain,
                              const BitBlock& iv);
PlaintextSequence cbc_decrypt(const BlockPermutation& cipher, const ChainedCiphertext& ct);

ChainedCiphertext ofb_encrypt(const BlockPermutation& cipher, const PlaintextSequence& plain,
                              const BitBlock& iv);
PlaintextSequence ofb_decrypt(const BlockPermutation& cipher, const ChainedCiphertext& ct);

ChainedCiphertext cfb_encrypt(const BlockPermutation& cipher, const PlaintextSequence& plain,
                              const BitBlock& iv);
PlaintextSequence cfb_decrypt(const BlockPermutation& cipher, const ChainedCiphertext& ct);

/// Dispatch on mode; `iv` is ignored for ECB and required otherwise.
ChainedCiphertext mode_encrypt(ChainMode mode, const BlockPermutation& cipher,
                               const PlaintextSequence& plain,
                               const std::optional<BitBlock>& iv);
PlaintextSequence mode_decrypt(const BlockPermutation& cipher, const ChainedCiphertext& ct);

/// Raw binary file layout: IV first (absent for ECB), then the ciphertext
/// blocks, in the library-wide bit order. Block width must be a whole number
/// of bytes for file I/O.
void write_ciphertext_file(const std::string& path, const ChainedCiphertext& ct);
ChainedCiphertext read_ciphertext_file(const std::string& path, ChainMode mode,
                                       std::size_t block_bits);

void write_plaintext_file(const std::string& path, const PlaintextSequence& blocks);
PlaintextSequence read_plaintext_file(const std::string& path, std::size_t block_bits);

}  // namespace pec
