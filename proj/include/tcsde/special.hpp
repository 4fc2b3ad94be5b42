#pragma once

namespace tcsde {

/// Gamma function for positive arguments. Thin wrapper over the libm
/// implementation, which is accurate to a few ulp in the range used here.
double gamma_fn(double x);

/// One-parameter Mittag-Leffler function E_beta(z) = sum_n z^n / Gamma(n*beta + 1)
/// for beta in (0, 1], evaluated by direct series summation with term-ratio
/// stopping. Accurate to better than 1e-10 inside the convergence budget
/// |z| <= max_abs_z; throws std::domain_error outside it and
/// std::runtime_error if the series loses too many digits to cancellation.
double mittag_leffler(double beta, double z, double max_abs_z = 40.0);

}  // namespace tcsde
