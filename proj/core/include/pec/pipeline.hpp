#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pec/bit_block.hpp"
#include "pec/chain_modes.hpp"
#include "pec/syndrome_codec.hpp"

namespace pec {

/// Serialized keyless compression of a chained ciphertext.
///
/// Binary layout (bit-exact):
///   magic "PEC1" | version u8 = 1 | mode u8 (1=CBC, 2=OFB, 3=CFB) |
///   m u32 LE | n u64 LE | rate_num u32 LE | rate_den u32 LE |
///   codec digest 32 bytes | payload bit-packed MSB-first, zero-padded to a
///   byte boundary at the end only.
///
/// Payload order per mode:
///   CBC: syndrome of IV, syndromes of blocks 1..n-1, block n raw.
///   OFB: IV raw, one aggregate syndrome over all n*m ciphertext bits.
///   CFB: IV raw, syndromes of blocks 1..n.
struct CompressedStream {
  ChainMode mode = ChainMode::cbc;
  std::uint32_t m = 0;
  std::uint64_t n = 0;
  std::uint32_t rate_num = 0;
  std::uint32_t rate_den = 1;
  Digest256 codec_digest{};
  BitBlock iv_bits;  // CBC: IV syndrome; OFB/CFB: raw IV
  std::vector<BitBlock> block_syndromes;
  std::optional<BitBlock> raw_tail;  // CBC only

  /// Syndrome width per ciphertext block, m * rate (exact by construction).
  std::size_t syndrome_bits() const;
  /// Total payload size in bits (excluding the fixed header).
  std::size_t payload_bits() const;

  void validate() const;
  std::vector<std::uint8_t> serialize() const;
  static CompressedStream deserialize(std::span<const std::uint8_t> bytes);

  static constexpr std::size_t kHeaderBytes = 58;
};

/// Joint decompression-decryption outcome. Blocks are indexed 0..n-1;
/// unrecovered blocks are zero-filled with block_ok false. When a syndrome
/// decode fails, failed_block_index names the first plaintext block (in
/// decode order) whose recovery was blocked, and decoding halts, leaving
/// every block downstream of the failure unrecovered.
struct PecResult {
  PlaintextSequence plaintext;
  std::vector<bool> block_ok;
  std::optional<std::size_t> failed_block_index;

  bool fully_ok() const { return !failed_block_index.has_value(); }
};

/// Keyless compressors (Slepian-Wolf syndromes of the ciphertext blocks).
/// CBC and CFB use a codec of the block width m; OFB uses a codec over the
/// concatenated n*m ciphertext bits.
CompressedStream compress_cbc(const ChainedCiphertext& ct, const SyndromeCodec& codec);
CompressedStream compress_ofb(const ChainedCiphertext& ct, const SyndromeCodec& codec_nm);
CompressedStream compress_cfb(const ChainedCiphertext& ct, const SyndromeCodec& codec);
CompressedStream compress(const ChainedCiphertext& ct, const SyndromeCodec& codec);

/// Joint decompression and decryption. `p` is the plaintext source bit
/// probability; it parameterizes the decoder's correlation channel. The
/// codec digest must match the one recorded in the stream.
/// CBC reconstructs serially right to left, CFB left to right, OFB decodes
/// one aggregate frame after regenerating the keystream from the raw IV.
PecResult decode_cbc(const CompressedStream& cs, const BlockPermutation& cipher,
                     const SyndromeCodec& codec, double p);
PecResult decode_ofb(const CompressedStream& cs, const BlockPermutation& cipher,
                     const SyndromeCodec& codec_nm, double p);
PecResult decode_cfb(const CompressedStream& cs, const BlockPermutation& cipher,
                     const SyndromeCodec& codec, double p);
PecResult decode(const CompressedStream& cs, const BlockPermutation& cipher,
                 const SyndromeCodec& codec, double p);

/// Asymptotically required compression rate for an i.i.d. Bernoulli(p) bit
/// source: the per-bit entropy H_b(p), independent of the block width.
double required_rate(double p, std::size_t m);

/// Ratio of input to output length for the CBC scheme at finite n:
/// (n+1)*m*b / (n*m*R + m*b) with b bits per source symbol; tends to b/R.
double compression_factor(std::uint64_t n, std::size_t m, double rate,
                          double alphabet_bits = 1.0);

}  // namespace pec
