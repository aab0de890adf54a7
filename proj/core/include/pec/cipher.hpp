#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pec/bit_block.hpp"

namespace pec {

enum class CipherFamily : std::uint8_t {
  aes128,      // 128-bit blocks, 16-byte key (FIPS 197)
  toy_feistel  // 4..32-bit blocks, up to 8-byte key; exhaustive-test cipher
};

std::string family_name(CipherFamily family);
CipherFamily family_from_name(const std::string& name);

/// Keying material plus the family and block width it is meant for.
struct CipherKey {
  CipherFamily family = CipherFamily::aes128;
  std::vector<std::uint8_t> bytes;
  std::size_t block_bits = 128;

  void validate() const;  // throws std::invalid_argument on mismatch
};

/// A keyed bijection on m-bit blocks. Implementations are immutable after
/// construction and safe to share across threads.
class BlockPermutation {
 public:
  virtual ~BlockPermutation() = default;
  virtual std::size_t width() const = 0;
  virtual BitBlock forward(const BitBlock& block) const = 0;
  virtual BitBlock inverse(const BitBlock& block) const = 0;

 protected:
  void check_width(const BitBlock& block) const;
};

/// Instantiates the cipher named by the key. Throws on invalid keys.
std::unique_ptr<BlockPermutation> make_block_cipher(const CipherKey& key);

/// Key files hold one hex-encoded key per file (trailing whitespace ignored).
CipherKey load_key_file(const std::string& path, CipherFamily family, std::size_t block_bits);
void save_key_file(const std::string& path, const CipherKey& key);

}  // namespace pec
