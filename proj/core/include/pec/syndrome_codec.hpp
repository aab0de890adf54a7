#pragma once

#include <cstdint>
#include <vector>

#include "pec/bit_block.hpp"
#include "pec/parity_check.hpp"

namespace pec {

enum class DecodeAlgo : std::uint8_t {
  belief_propagation,  // tanh-rule message passing, the reference decoder
  ml_exhaustive        // exact coset enumeration; small components only
};

struct DecodeResult {
  BitBlock estimate;   // decoded word on success, last hard decision on failure
  bool ok = false;     // false = decode failure (caller treats as frame error)
  int iterations = 0;  // message-passing iterations consumed (0 for ML)
};

/// Syndrome source codec over a sparse parity-check matrix: encoding maps an
/// n_vars-bit word to its n_checks-bit syndrome s = H*y; decoding recovers the
/// word in the coset of s closest to the side-information under BSC(p).
/// Immutable after construction; decode calls are pure and thread-safe.
class SyndromeCodec {
 public:
  explicit SyndromeCodec(ParityCheckMatrix matrix, int max_iterations = 100,
                         DecodeAlgo algo = DecodeAlgo::belief_propagation);

  std::size_t n_vars() const { return matrix_.n_vars(); }
  std::size_t n_checks() const { return matrix_.n_checks(); }

  /// Compression rate n_checks / n_vars as a reduced fraction.
  std::uint32_t rate_num() const { return rate_num_; }
  std::uint32_t rate_den() const { return rate_den_; }
  double rate() const { return static_cast<double>(n_checks()) / static_cast<double>(n_vars()); }

  int max_iterations() const { return max_iterations_; }
  DecodeAlgo algo() const { return algo_; }
  const ParityCheckMatrix& matrix() const { return matrix_; }
  const Digest256& digest() const { return matrix_.digest(); }

  /// s_c = XOR of y over the variables adjacent to check c.
  BitBlock encode(const BitBlock& y) const;

  /// Decodes with the codec's configured algorithm.
  DecodeResult decode(const BitBlock& syndrome, const BitBlock& side_info, double p) const;

  /// Belief propagation against BSC(p) side information. LLRs start at
  /// (1-2z_v)*ln((1-p)/p); check messages carry the syndrome bit sign; a hard
  /// decision is re-checked every iteration and the decoder stops as soon as
  /// every check is satisfied.
  DecodeResult bp_decode(const BitBlock& syndrome, const BitBlock& side_info, double p) const;

  /// Direct-sum codec: `copies` independent copies of this codec's matrix
  /// side by side, decoding copies*n_vars-bit words.
  SyndromeCodec replicate(std::size_t copies) const;

 private:
  ParityCheckMatrix matrix_;
  int max_iterations_;
  DecodeAlgo algo_;
  std::uint32_t rate_num_ = 0;
  std::uint32_t rate_den_ = 0;

  // Tanner graph edges in CSR form, by check and by variable.
  std::vector<std::uint32_t> check_ptr_;
  std::vector<std::uint32_t> edge_var_;
  std::vector<std::uint32_t> var_ptr_;
  std::vector<std::uint32_t> var_edge_;
};

/// Exact maximum-likelihood decoding by coset enumeration: among all y with
/// H*y = s, returns the one likeliest to have produced z over BSC(p), i.e.
/// the one closest to z in Hamming distance, ties broken lexicographically.
/// Works per connected component of the Tanner graph; any component with more
/// than 24 variables is rejected (enumeration cost guard). Fails only when
/// the syndrome is infeasible (possible for corrupted syndromes when H has
/// dependent rows).
DecodeResult ml_decode_bruteforce(const ParityCheckMatrix& matrix, const BitBlock& syndrome,
                                  const BitBlock& side_info, double p);

}  // namespace pec
