#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pec/cipher.hpp"
#include "pec/syndrome_codec.hpp"

namespace pec {

/// Monte-Carlo frame-error-rate estimate with an exact one-sided 95%
/// Clopper-Pearson upper bound.
struct FerEstimate {
  std::uint64_t failures = 0;
  std::uint64_t trials = 0;
  double point = 0.0;
  double upper95 = 1.0;
  bool aborted = false;  // early-abort threshold hit; counts cover fewer trials
};

struct FerOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  /// Abort once failures exceed this count (< 0 disables). Used by threshold
  /// searches: past the bound the exact count no longer matters.
  std::int64_t abort_after_failures = -1;
};

/// Codec-level FER over BSC(p): per trial a uniform word y is drawn, each bit
/// flipped with probability p into the side information z, and the decoder
/// must reproduce y exactly from (H*y, z). Trials are seeded individually, so
/// results do not depend on the thread count.
FerEstimate fer_estimate(const SyndromeCodec& codec, double p, std::uint64_t trials,
                         std::uint64_t seed, const FerOptions& opts = {});

/// Pipeline-level per-block FER: full CBC streams of Bernoulli(p) plaintext
/// are encrypted (fresh uniform IV per stream), compressed, and jointly
/// decoded; failures are counted per attempted block decode. Agrees with the
/// codec-level estimate because ciphertext blocks are marginally uniform.
struct PipelineFerEstimate {
  std::uint64_t block_failures = 0;
  std::uint64_t blocks_attempted = 0;
  std::uint64_t streams = 0;
  double point = 0.0;
  double upper95 = 1.0;
};

PipelineFerEstimate fer_estimate_pipeline(const SyndromeCodec& codec,
                                          const BlockPermutation& cipher, double p,
                                          std::size_t blocks_per_stream, std::uint64_t streams,
                                          std::uint64_t seed, unsigned threads = 0);

/// Largest p on the 0.001 grid in [0, 0.5] whose 95% upper confidence bound
/// on FER stays at or below target_fer, found by bisection; 0 when even
/// p = 0.001 fails the target.
double max_p_search(const SyndromeCodec& codec, double target_fer, std::uint64_t trials,
                    std::uint64_t seed, unsigned threads = 0);

/// Published operating points the benchmark compares against: maximum source
/// bit probability p for which codes of the two families reach the target FER
/// at widths 128 and 1024, with the per-bit source entropy at that p.
struct ReferenceRow {
  std::size_t m;
  double rate;          // compression rate (syndrome bits per source bit)
  const char* dist_id;  // degree distribution family
  double target_fer;
  double p_reference;
  double entropy_reference;
};

const std::vector<ReferenceRow>& reference_rows();

struct TableRow {
  ReferenceRow ref;
  bool measured = false;  // false = skipped (long-running row without --long)
  double p_measured = 0.0;
  double entropy_measured = 0.0;
  std::uint64_t trials = 0;
};

struct TablesConfig {
  std::uint64_t trials = 20000;      // per grid point at target FER 1e-3
  std::uint64_t long_trials = 200000;  // per grid point at target FER 1e-4
  std::uint64_t seed = 1;
  bool include_long_rows = false;  // run the 1e-4 rows too
  unsigned threads = 0;
  std::function<void(const std::string&)> log;  // optional progress sink
};

/// Reproduces the full reference table with freshly constructed codes.
std::vector<TableRow> reproduce_tables(const TablesConfig& cfg);

std::string render_table_markdown(const std::vector<TableRow>& rows);
std::string render_table_csv(const std::vector<TableRow>& rows);

/// Code used by the table rows: a PEG construction with n_checks = m * rate
/// (rate 0.5 or 0.75) from the named distribution family.
SyndromeCodec make_reference_codec(std::size_t m, double rate, std::uint64_t seed);

}  // namespace pec
