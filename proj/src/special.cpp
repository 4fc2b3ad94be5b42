#include "tcsde/special.hpp"

#include <cmath>
#include <stdexcept>

namespace tcsde {

double gamma_fn(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma_fn: argument must be positive");
  }
  return std::tgamma(x);
}

double mittag_leffler(double beta, double z, double max_abs_z) {
  if (!(beta > 0.0) || beta > 1.0) {
    throw std::domain_error("mittag_leffler: beta must be in (0, 1]");
  }
  if (std::abs(z) > max_abs_z) {
    throw std::domain_error("mittag_leffler: |z| exceeds convergence budget");
  }

  constexpr int kMaxTerms = 800;
  constexpr double kRelTol = 1e-14;

  double sum = 1.0;  // n = 0 term
  double max_term = 1.0;
  double zn = 1.0;
  for (int n = 1; n < kMaxTerms; ++n) {
    zn *= z;
    const double term = zn * std::exp(-std::lgamma(n * beta + 1.0));
    sum += term;
    max_term = std::max(max_term, std::abs(term));
    if (std::abs(term) < kRelTol * std::max(1.0, std::abs(sum))) {
      // Alternating-series cancellation check: the largest intermediate
      // term bounds the digits lost.
      if (max_term > 1e12 * std::max(std::abs(sum), 1e-300)) {
        throw std::runtime_error(
            "mittag_leffler: series cancellation exceeds accuracy target");
      }
      return sum;
    }
  }
  throw std::runtime_error("mittag_leffler: series did not converge");
}

}  // namespace tcsde
