#include "pec/pipeline.hpp"

#include <cstring>
#include <stdexcept>

#include "pec/bitio.hpp"
#include "pec/source_models.hpp"

namespace pec {

namespace {

constexpr char kMagic[4] = {'P', 'E', 'C', '1'};
constexpr std::uint8_t kVersion = 1;

void put_u32_le(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64_le(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32_le(const std::uint8_t* p) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

std::uint64_t get_u64_le(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

void check_codec_match(const CompressedStream& cs, const SyndromeCodec& codec) {
  if (codec.digest() != cs.codec_digest) {
    throw std::invalid_argument("decode: codec digest does not match the stream");
  }
  if (codec.rate_num() != cs.rate_num || codec.rate_den() != cs.rate_den) {
    throw std::invalid_argument("decode: codec rate does not match the stream");
  }
}

BitBlock keystream_concat(const BlockPermutation& cipher, const BitBlock& iv, std::uint64_t n,
                          std::vector<BitBlock>& blocks_out) {
  blocks_out.clear();
  blocks_out.reserve(n);
  BitBlock k = iv;
  for (std::uint64_t i = 0; i < n; ++i) {
    k = cipher.forward(k);
    blocks_out.push_back(k);
  }
  return BitBlock::concat(blocks_out);
}

}  // namespace

std::size_t CompressedStream::syndrome_bits() const {
  return static_cast<std::size_t>(m) * rate_num / rate_den;
}

std::size_t CompressedStream::payload_bits() const {
  switch (mode) {
    case ChainMode::cbc:
      // n syndromes (IV + blocks 1..n-1) plus the raw tail.
      return static_cast<std::size_t>(n) * syndrome_bits() + m;
    case ChainMode::ofb:
      return m + static_cast<std::size_t>(n) * syndrome_bits();
    case ChainMode::cfb:
      return m + static_cast<std::size_t>(n) * syndrome_bits();
    default:
      throw std::logic_error("compressed stream has no ECB form");
  }
}

void CompressedStream::validate() const {
  if (mode != ChainMode::cbc && mode != ChainMode::ofb && mode != ChainMode::cfb) {
    throw std::invalid_argument("compressed stream mode must be CBC, OFB, or CFB");
  }
  if (m == 0 || n == 0) throw std::invalid_argument("compressed stream dimensions");
  if (rate_num == 0 || rate_num >= rate_den) {
    throw std::invalid_argument("compressed stream rate must satisfy 0 < R < 1");
  }
  if ((static_cast<std::uint64_t>(m) * rate_num) % rate_den != 0) {
    throw std::invalid_argument("rate does not divide the block width");
  }
  const std::size_t sw = syndrome_bits();
  switch (mode) {
    case ChainMode::cbc:
      if (iv_bits.width() != sw) throw std::invalid_argument("CBC stream: IV syndrome width");
      if (block_syndromes.size() != n - 1) {
        throw std::invalid_argument("CBC stream must carry n-1 block syndromes");
      }
      if (!raw_tail.has_value() || raw_tail->width() != m) {
        throw std::invalid_argument("CBC stream must carry one raw tail block");
      }
      break;
    case ChainMode::ofb:
      if (iv_bits.width() != m) throw std::invalid_argument("OFB stream: raw IV width");
      if (block_syndromes.size() != 1 ||
          block_syndromes[0].width() != static_cast<std::size_t>(n) * sw) {
        throw std::invalid_argument("OFB stream must carry one aggregate syndrome");
      }
      if (raw_tail.has_value()) throw std::invalid_argument("OFB stream carries no raw tail");
      break;
    case ChainMode::cfb:
      if (iv_bits.width() != m) throw std::invalid_argument("CFB stream: raw IV width");
      if (block_syndromes.size() != n) {
        throw std::invalid_argument("CFB stream must carry n block syndromes");
      }
      if (raw_tail.has_value()) throw std::invalid_argument("CFB stream carries no raw tail");
      break;
    default:
      break;
  }
  for (const auto& s : block_syndromes) {
    if (mode != ChainMode::ofb && s.width() != sw) {
      throw std::invalid_argument("block syndrome width mismatch");
    }
  }
}

std::vector<std::uint8_t> CompressedStream::serialize() const {
  validate();
  std::vector<std::uint8_t> header;
  header.reserve(kHeaderBytes);
  header.insert(header.end(), kMagic, kMagic + 4);
  header.push_back(kVersion);
  header.push_back(static_cast<std::uint8_t>(mode));
  put_u32_le(header, m);
  put_u64_le(header, n);
  put_u32_le(header, rate_num);
  put_u32_le(header, rate_den);
  header.insert(header.end(), codec_digest.begin(), codec_digest.end());

  BitWriter bits;
  bits.put_bytes(header);
  bits.put_block(iv_bits);
  for (const auto& s : block_syndromes) bits.put_block(s);
  if (raw_tail.has_value()) bits.put_block(*raw_tail);
  return bits.finish();
}

CompressedStream CompressedStream::deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderBytes) throw std::runtime_error("stream too short");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw std::runtime_error("bad magic");
  if (bytes[4] != kVersion) throw std::runtime_error("unsupported version");

  CompressedStream cs;
  const std::uint8_t mode_byte = bytes[5];
  if (mode_byte < 1 || mode_byte > 3) throw std::runtime_error("bad mode byte");
  cs.mode = static_cast<ChainMode>(mode_byte);
  cs.m = get_u32_le(bytes.data() + 6);
  cs.n = get_u64_le(bytes.data() + 10);
  cs.rate_num = get_u32_le(bytes.data() + 18);
  cs.rate_den = get_u32_le(bytes.data() + 22);
  std::copy(bytes.begin() + 26, bytes.begin() + 58, cs.codec_digest.begin());

  if (cs.m == 0 || cs.n == 0 || cs.rate_num == 0 || cs.rate_num >= cs.rate_den ||
      (static_cast<std::uint64_t>(cs.m) * cs.rate_num) % cs.rate_den != 0) {
    throw std::runtime_error("bad stream header fields");
  }

  const std::size_t payload = cs.payload_bits();
  const std::size_t expected_bytes = kHeaderBytes + (payload + 7) / 8;
  if (bytes.size() != expected_bytes) {
    throw std::runtime_error("stream length does not match header");
  }

  BitReader reader(bytes.subspan(kHeaderBytes));
  const std::size_t sw = cs.syndrome_bits();
  switch (cs.mode) {
    case ChainMode::cbc:
      cs.iv_bits = reader.get_block(sw);
      for (std::uint64_t i = 0; i + 1 < cs.n; ++i) {
        cs.block_syndromes.push_back(reader.get_block(sw));
      }
      cs.raw_tail = reader.get_block(cs.m);
      break;
    case ChainMode::ofb:
      cs.iv_bits = reader.get_block(cs.m);
      cs.block_syndromes.push_back(reader.get_block(static_cast<std::size_t>(cs.n) * sw));
      break;
    case ChainMode::cfb:
      cs.iv_bits = reader.get_block(cs.m);
      for (std::uint64_t i = 0; i < cs.n; ++i) {
        cs.block_syndromes.push_back(reader.get_block(sw));
      }
      break;
    default:
      break;
  }
  if (!reader.remainder_is_zero()) throw std::runtime_error("nonzero padding bits");
  cs.validate();
  return cs;
}

CompressedStream compress_cbc(const ChainedCiphertext& ct, const SyndromeCodec& codec) {
  ct.validate();
  if (ct.mode != ChainMode::cbc) throw std::invalid_argument("compress_cbc: mode mismatch");
  if (codec.n_vars() != ct.block_width()) {
    throw std::invalid_argument("compress_cbc: codec width must equal the block width");
  }
  CompressedStream cs;
  cs.mode = ChainMode::cbc;
  cs.m = static_cast<std::uint32_t>(ct.block_width());
  cs.n = ct.blocks.size();
  cs.rate_num = codec.rate_num();
  cs.rate_den = codec.rate_den();
  cs.codec_digest = codec.digest();
  cs.iv_bits = codec.encode(*ct.iv);
  for (std::size_t i = 0; i + 1 < ct.blocks.size(); ++i) {
    cs.block_syndromes.push_back(codec.encode(ct.blocks[i]));
  }
  cs.raw_tail = ct.blocks.back();
  return cs;
}

CompressedStream compress_ofb(const ChainedCiphertext& ct, const SyndromeCodec& codec_nm) {
  ct.validate();
  if (ct.mode != ChainMode::ofb) throw std::invalid_argument("compress_ofb: mode mismatch");
  const std::size_t total = ct.block_width() * ct.blocks.size();
  if (codec_nm.n_vars() != total) {
    throw std::invalid_argument("compress_ofb: codec width must equal n*m");
  }
  CompressedStream cs;
  cs.mode = ChainMode::ofb;
  cs.m = static_cast<std::uint32_t>(ct.block_width());
  cs.n = ct.blocks.size();
  cs.rate_num = codec_nm.rate_num();
  cs.rate_den = codec_nm.rate_den();
  cs.codec_digest = codec_nm.digest();
  cs.iv_bits = *ct.iv;
  cs.block_syndromes.push_back(codec_nm.encode(BitBlock::concat(ct.blocks)));
  return cs;
}

CompressedStream compress_cfb(const ChainedCiphertext& ct, const SyndromeCodec& codec) {
  ct.validate();
  if (ct.mode != ChainMode::cfb) throw std::invalid_argument("compress_cfb: mode mismatch");
  if (codec.n_vars() != ct.block_width()) {
    throw std::invalid_argument("compress_cfb: codec width must equal the block width");
  }
  CompressedStream cs;
  cs.mode = ChainMode::cfb;
  cs.m = static_cast<std::uint32_t>(ct.block_width());
  cs.n = ct.blocks.size();
  cs.rate_num = codec.rate_num();
  cs.rate_den = codec.rate_den();
  cs.codec_digest = codec.digest();
  cs.iv_bits = *ct.iv;
  for (const auto& y : ct.blocks) cs.block_syndromes.push_back(codec.encode(y));
  return cs;
}

CompressedStream compress(const ChainedCiphertext& ct, const SyndromeCodec& codec) {
  switch (ct.mode) {
    case ChainMode::cbc:
      return compress_cbc(ct, codec);
    case ChainMode::ofb:
      return compress_ofb(ct, codec);
    case ChainMode::cfb:
      return compress_cfb(ct, codec);
    default:
      throw std::invalid_argument("compress: ECB ciphertext is not compressible here");
  }
}

PecResult decode_cbc(const CompressedStream& cs, const BlockPermutation& cipher,
                     const SyndromeCodec& codec, double p) {
  cs.validate();
  if (cs.mode != ChainMode::cbc) throw std::invalid_argument("decode_cbc: mode mismatch");
  check_codec_match(cs, codec);
  if (cipher.width() != cs.m) throw std::invalid_argument("decode_cbc: cipher width");

  const std::size_t n = static_cast<std::size_t>(cs.n);
  PecResult result;
  result.plaintext.assign(n, BitBlock(cs.m));
  result.block_ok.assign(n, false);

  // Right to left: the raw tail seeds the chain of side information.
  BitBlock x_tilde = cipher.inverse(*cs.raw_tail);
  for (std::size_t j = n - 1; j-- > 0;) {
    // Recover ciphertext block j from its syndrome; it both reveals
    // plaintext j+1 and, decrypted, becomes the next side information.
    const DecodeResult r = codec.decode(cs.block_syndromes[j], x_tilde, p);
    if (!r.ok) {
      result.failed_block_index = j + 1;
      return result;
    }
    result.plaintext[j + 1] = r.estimate ^ x_tilde;
    result.block_ok[j + 1] = true;
    x_tilde = cipher.inverse(r.estimate);
  }
  const DecodeResult r = codec.decode(cs.iv_bits, x_tilde, p);
  if (!r.ok) {
    result.failed_block_index = 0;
    return result;
  }
  result.plaintext[0] = r.estimate ^ x_tilde;
  result.block_ok[0] = true;
  return result;
}

PecResult decode_ofb(const CompressedStream& cs, const BlockPermutation& cipher,
                     const SyndromeCodec& codec_nm, double p) {
  cs.validate();
  if (cs.mode != ChainMode::ofb) throw std::invalid_argument("decode_ofb: mode mismatch");
  check_codec_match(cs, codec_nm);
  if (cipher.width() != cs.m) throw std::invalid_argument("decode_ofb: cipher width");
  const std::size_t n = static_cast<std::size_t>(cs.n);
  if (codec_nm.n_vars() != static_cast<std::size_t>(cs.m) * n) {
    throw std::invalid_argument("decode_ofb: codec width must equal n*m");
  }

  PecResult result;
  result.plaintext.assign(n, BitBlock(cs.m));
  result.block_ok.assign(n, false);

  std::vector<BitBlock> keystream_blocks;
  const BitBlock keystream = keystream_concat(cipher, cs.iv_bits, cs.n, keystream_blocks);
  const DecodeResult r = codec_nm.decode(cs.block_syndromes[0], keystream, p);
  if (!r.ok) {
    result.failed_block_index = 0;
    return result;
  }
  const std::vector<BitBlock> y = r.estimate.split(cs.m);
  for (std::size_t j = 0; j < n; ++j) {
    result.plaintext[j] = y[j] ^ keystream_blocks[j];
    result.block_ok[j] = true;
  }
  return result;
}

PecResult decode_cfb(const CompressedStream& cs, const BlockPermutation& cipher,
                     const SyndromeCodec& codec, double p) {
  cs.validate();
  if (cs.mode != ChainMode::cfb) throw std::invalid_argument("decode_cfb: mode mismatch");
  check_codec_match(cs, codec);
  if (cipher.width() != cs.m) throw std::invalid_argument("decode_cfb: cipher width");

  const std::size_t n = static_cast<std::size_t>(cs.n);
  PecResult result;
  result.plaintext.assign(n, BitBlock(cs.m));
  result.block_ok.assign(n, false);

  // Left to right: each recovered ciphertext block is encrypted into the
  // keystream block that side-informs the next decode.
  BitBlock k_tilde = cipher.forward(cs.iv_bits);
  for (std::size_t j = 0; j < n; ++j) {
    const DecodeResult r = codec.decode(cs.block_syndromes[j], k_tilde, p);
    if (!r.ok) {
      result.failed_block_index = j;
      return result;
    }
    result.plaintext[j] = k_tilde ^ r.estimate;
    result.block_ok[j] = true;
    if (j + 1 < n) k_tilde = cipher.forward(r.estimate);
  }
  return result;
}

PecResult decode(const CompressedStream& cs, const BlockPermutation& cipher,
                 const SyndromeCodec& codec, double p) {
  switch (cs.mode) {
    case ChainMode::cbc:
      return decode_cbc(cs, cipher, codec, p);
    case ChainMode::ofb:
      return decode_ofb(cs, cipher, codec, p);
    case ChainMode::cfb:
      return decode_cfb(cs, cipher, codec, p);
    default:
      throw std::invalid_argument("decode: bad mode");
  }
}

double required_rate(double p, std::size_t /*m*/) { return binary_entropy(p); }

double compression_factor(std::uint64_t n, std::size_t m, double rate, double alphabet_bits) {
  if (n == 0 || m == 0 || rate <= 0.0 || alphabet_bits <= 0.0) {
    throw std::invalid_argument("compression_factor: bad arguments");
  }
  const double nm = static_cast<double>(n) * static_cast<double>(m);
  const double mb = static_cast<double>(m) * alphabet_bits;
  return (static_cast<double>(n + 1) * mb) / (nm * rate + mb);
}

}  // namespace pec
