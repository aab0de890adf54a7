#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pec/sha256.hpp"

namespace pec {

/// Sparse binary parity-check matrix, stored as per-check variable index
/// lists. Invariants: indices in range, no duplicate edges, every variable
/// covered by at least one check.
class ParityCheckMatrix {
 public:
  ParityCheckMatrix() = default;
  ParityCheckMatrix(std::size_t n_vars, std::vector<std::vector<std::uint32_t>> check_vars);

  std::size_t n_vars() const { return n_vars_; }
  std::size_t n_checks() const { return check_vars_.size(); }
  std::size_t n_edges() const { return n_edges_; }

  const std::vector<std::uint32_t>& vars_of_check(std::size_t c) const { return check_vars_[c]; }
  const std::vector<std::uint32_t>& checks_of_var(std::size_t v) const { return var_checks_[v]; }

  std::size_t max_check_degree() const;
  std::size_t max_var_degree() const;

  /// Girth of the Tanner graph (shortest cycle length, always even);
  /// returns 0 for a forest.
  std::size_t girth() const;

  /// Block-diagonal matrix made of `copies` shifted copies of `base`.
  static ParityCheckMatrix direct_sum(const ParityCheckMatrix& base, std::size_t copies);

  /// Canonical alist text (MacKay's format, unpadded index lists, 1-based).
  /// The SHA-256 of this exact text is the matrix digest used in containers.
  std::string to_alist() const;
  static ParityCheckMatrix from_alist(const std::string& text);

  void save_alist_file(const std::string& path) const;
  static ParityCheckMatrix load_alist_file(const std::string& path);

  const Digest256& digest() const { return digest_; }

  bool operator==(const ParityCheckMatrix& other) const {
    return n_vars_ == other.n_vars_ && check_vars_ == other.check_vars_;
  }

 private:
  void build_var_adjacency();

  std::size_t n_vars_ = 0;
  std::size_t n_edges_ = 0;
  std::vector<std::vector<std::uint32_t>> check_vars_;
  std::vector<std::vector<std::uint32_t>> var_checks_;
  Digest256 digest_{};
};

}  // namespace pec
