#pragma once

#include <cstdint>

namespace pec {

/// SplitMix64 (Steele, Lea, Flood 2014): the project-wide deterministic RNG.
///
/// Every Monte-Carlo experiment in this library is seeded through this
/// generator so results are bit-identical across platforms and runs. The
/// update and output functions below are pure 64-bit integer arithmetic and
/// are fixed; do not change them without regenerating every pinned test value.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  /// Uniform integer in [0, n) by rejection sampling; n >= 1.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::uint64_t state_;
};

/// Stateless output function of SplitMix64; handy for mixing values.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent per-stream seed, e.g. one per Monte-Carlo trial.
/// Results are then independent of how trials are sharded across threads.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
}

}  // namespace pec
