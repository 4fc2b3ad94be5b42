#include "tcsde/integrate.hpp"

#include <cmath>
#include <stdexcept>

namespace tcsde {

namespace {

void check_shared_grid(const ClockPath& clock, const NoisePath& noise) {
  if (!(clock.grid == noise.grid) ||
      clock.e_values.size() != noise.b_of_e.size()) {
    throw std::domain_error("integrate: clock and noise must share the grid");
  }
}

}  // namespace

Trajectory integrate_direct(const CoefficientModel& model, const ClockPath& clock,
                            const NoisePath& noise, double x0, double guard) {
  check_shared_grid(clock, noise);
  Trajectory traj;
  traj.grid = clock.grid;
  traj.method = Method::direct;
  traj.x_values.reserve(clock.grid.size());
  traj.x_values.push_back(x0);

  const double dt = clock.grid.dt();
  double x = x0;
  for (std::size_t k = 0; k + 1 < clock.grid.size(); ++k) {
    const double t = clock.grid[k];
    const double e = clock.e_values[k];
    const double de = clock.e_values[k + 1] - e;
    const double db = noise.b_of_e[k + 1] - noise.b_of_e[k];
    x += euler_increment(model, t, e, x, dt, de, db);
    if (!(std::abs(x) < guard)) {
      traj.diverged = true;
      break;
    }
    traj.x_values.push_back(x);
  }
  return traj;
}

Trajectory integrate_via_duality(const CoefficientModel& model,
                                 const ClockPath& clock, const NoisePath& noise,
                                 double x0, double guard) {
  if (!model.autonomous()) {
    throw std::invalid_argument(
        "integrate_via_duality: model must have rho == 0 and no real-time "
        "dependence in f, g");
  }
  check_shared_grid(clock, noise);
  Trajectory traj;
  traj.grid = clock.grid;
  traj.method = Method::duality;
  traj.x_values.reserve(clock.grid.size());
  traj.x_values.push_back(x0);

  // Classical Euler for dY = f(s, Y) ds + g(s, Y) dB on the operational grid
  // {E_{t_k}}, with the Brownian increments the noise path observed over the
  // same operational intervals; X(t_k) = Y(E_{t_k}).
  double y = x0;
  for (std::size_t k = 0; k + 1 < clock.grid.size(); ++k) {
    const double s = clock.e_values[k];
    const double ds = clock.e_values[k + 1] - s;
    const double db = noise.b_of_e[k + 1] - noise.b_of_e[k];
    y += model.f(0.0, s, y) * ds + model.g(0.0, s, y) * db;
    if (!(std::abs(y) < guard)) {
      traj.diverged = true;
      break;
    }
    traj.x_values.push_back(y);
  }
  return traj;
}

Trajectory closed_form_linear(double x0, double f1, double g1,
                              const ClockPath& clock, const NoisePath& noise) {
  check_shared_grid(clock, noise);
  Trajectory traj;
  traj.grid = clock.grid;
  traj.method = Method::closed_form;
  traj.x_values.resize(clock.grid.size());
  const double drift = f1 - 0.5 * g1 * g1;
  for (std::size_t k = 0; k < clock.grid.size(); ++k) {
    traj.x_values[k] =
        x0 * std::exp(drift * clock.e_values[k] + g1 * noise.b_of_e[k]);
  }
  return traj;
}

}  // namespace tcsde
