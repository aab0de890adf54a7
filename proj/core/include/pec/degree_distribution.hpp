#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pec {

/// Edge-perspective degree distribution pair of an irregular LDPC ensemble:
/// lambda[i] = fraction of edges attached to variable nodes of that degree,
/// rho likewise for check nodes.
struct DegreeDistribution {
  std::string id;  // short name used in codec descriptors ("r05", "r075", ...)
  std::vector<std::pair<int, double>> lambda;  // (degree, edge fraction)
  std::vector<std::pair<int, double>> rho;

  void validate() const;  // fractions in (0,1], sums == 1 +- 1e-9, degrees >= 2

  /// Design code rate 1 - (sum rho_j / j) / (sum lambda_i / i).
  double design_rate() const;

  /// Mean variable-node degree 1 / (sum lambda_i / i).
  double average_variable_degree() const;

  /// The two distributions used by the compression benchmarks. "r05" targets
  /// compression rate 0.5, "r075" compression rate 0.75. Note that r075's
  /// design code rate evaluates to ~0.273 rather than 0.25; see design_rate()
  /// and the README discussion of this published-table quirk.
  static DegreeDistribution rate_half();
  static DegreeDistribution rate_three_quarters();
  static DegreeDistribution regular(int var_degree, int check_degree);
  static DegreeDistribution by_id(const std::string& id);
};

}  // namespace pec
