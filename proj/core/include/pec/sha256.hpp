#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace pec {

using Digest256 = std::array<std::uint8_t, 32>;

/// SHA-256 (FIPS 180-4). Used to fingerprint codec matrices in serialized
/// containers; self-contained so the library has no crypto dependency.
Digest256 sha256(std::span<const std::uint8_t> data);
Digest256 sha256(const std::string& data);

std::string digest_hex(const Digest256& d);

}  // namespace pec
