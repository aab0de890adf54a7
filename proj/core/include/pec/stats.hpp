#pragma once

#include <cstdint>

namespace pec {

/// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double incomplete_gamma_upper(double a, double x);

/// Survival function of the chi-square distribution with df degrees of freedom.
double chi_square_sf(double x, double df);

/// One-sided Clopper-Pearson exact confidence bounds for a binomial
/// proportion with `failures` successes out of `trials`.
double clopper_pearson_upper(std::uint64_t failures, std::uint64_t trials,
                             double confidence = 0.95);
double clopper_pearson_lower(std::uint64_t failures, std::uint64_t trials,
                             double confidence = 0.95);

}  // namespace pec
