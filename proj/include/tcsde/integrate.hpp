#pragma once

#include <vector>

#include "tcsde/model.hpp"
#include "tcsde/noise.hpp"

namespace tcsde {

enum class Method { direct, duality, closed_form };

struct Trajectory {
  TimeGrid grid = TimeGrid::uniform(0.0, 1.0);
  std::vector<double> x_values;  // truncated early when diverged
  Method method = Method::direct;
  bool diverged = false;
};

inline constexpr double kDivergenceGuard = 1e12;

/// One Euler step increment. Shared between the integrator and the Ito
/// residual check so both evaluate the identical float expression.
inline double euler_increment(const CoefficientModel& m, double t, double e,
                              double x, double dt, double de, double db) {
  return m.rho(t, e, x) * dt + m.f(t, e, x) * de + m.g(t, e, x) * db;
}

/// Explicit Euler on the hybrid clock, one (dt, dE, dB) triple per step,
/// coefficients at the left endpoint:
///   X_{k+1} = X_k + rho(t_k,E_k,X_k) dt + f(t_k,E_k,X_k) dE_k + g(t_k,E_k,X_k) dB_k.
/// Exceeding the overflow guard flags divergence and truncates the
/// trajectory instead of storing non-finite values.
Trajectory integrate_direct(const CoefficientModel& model, const ClockPath& clock,
                            const NoisePath& noise, double x0,
                            double guard = kDivergenceGuard);

/// Duality route for autonomous models: Euler-solve the classical SDE
/// dY = f(s, Y) ds + g(s, Y) dB on the operational grid implied by the
/// clock's e_values, reusing the noise path's Brownian increments, then
/// report X(t_k) = Y(E_{t_k}) on the real-time grid. Models with rho != 0 or
/// explicit t1 dependence throw std::invalid_argument.
Trajectory integrate_via_duality(const CoefficientModel& model,
                                 const ClockPath& clock, const NoisePath& noise,
                                 double x0, double guard = kDivergenceGuard);

/// Exact solution of the constant-coefficient linear time-changed SDE:
///   X(t) = x0 * exp((f1 - g1^2/2) * E_t + g1 * B_{E_t}),
/// evaluated pathwise at every grid point.
Trajectory closed_form_linear(double x0, double f1, double g1,
                              const ClockPath& clock, const NoisePath& noise);

}  // namespace tcsde
