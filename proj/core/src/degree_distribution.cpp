#include "pec/degree_distribution.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace pec {

namespace {

void validate_side(const std::vector<std::pair<int, double>>& side, const char* what) {
  if (side.empty()) throw std::invalid_argument(std::string(what) + " distribution is empty");
  double sum = 0.0;
  std::set<int> seen;
  for (const auto& [degree, fraction] : side) {
    if (degree < 2) throw std::invalid_argument(std::string(what) + " degrees must be >= 2");
    if (!(fraction > 0.0 && fraction <= 1.0)) {
      throw std::invalid_argument(std::string(what) + " fractions must lie in (0, 1]");
    }
    if (!seen.insert(degree).second) {
      throw std::invalid_argument(std::string(what) + " has a duplicate degree");
    }
    sum += fraction;
  }
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument(std::string(what) + " fractions must sum to 1");
  }
}

double inverse_mean(const std::vector<std::pair<int, double>>& side) {
  double s = 0.0;
  for (const auto& [degree, fraction] : side) s += fraction / degree;
  return s;
}

}  // namespace

void DegreeDistribution::validate() const {
  validate_side(lambda, "lambda");
  validate_side(rho, "rho");
}

double DegreeDistribution::design_rate() const {
  validate();
  return 1.0 - inverse_mean(rho) / inverse_mean(lambda);
}

double DegreeDistribution::average_variable_degree() const { return 1.0 / inverse_mean(lambda); }

DegreeDistribution DegreeDistribution::rate_half() {
  return DegreeDistribution{
      "r05",
      {{2, 0.3317}, {3, 0.2376}, {6, 0.4307}},
      {{6, 0.6535}, {7, 0.3465}},
  };
}

DegreeDistribution DegreeDistribution::rate_three_quarters() {
  return DegreeDistribution{
      "r075",
      {{2, 0.4249}, {3, 0.0311}, {5, 0.5440}},
      {{4, 0.8187}, {5, 0.1813}},
  };
}

DegreeDistribution DegreeDistribution::regular(int var_degree, int check_degree) {
  return DegreeDistribution{
      "regular" + std::to_string(var_degree) + "_" + std::to_string(check_degree),
      {{var_degree, 1.0}},
      {{check_degree, 1.0}},
  };
}

DegreeDistribution DegreeDistribution::by_id(const std::string& id) {
  if (id == "r05") return rate_half();
  if (id == "r075") return rate_three_quarters();
  throw std::invalid_argument("unknown degree distribution id: " + id);
}

}  // namespace pec
