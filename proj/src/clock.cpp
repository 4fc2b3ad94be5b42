#include "tcsde/clock.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tcsde/special.hpp"

namespace tcsde {

StableIndex::StableIndex(double beta_, bool allow_extreme) : beta(beta_) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::domain_error("StableIndex: beta must lie strictly in (0, 1)");
  }
  if (!allow_extreme && (beta <= 0.05 || beta >= 0.95)) {
    throw std::domain_error(
        "StableIndex: beta within 0.05 of an endpoint rejected by default");
  }
}

TimeGrid TimeGrid::uniform(double t_max, double dt) {
  if (!(dt > 0.0) || t_max < 0.0) {
    throw std::domain_error("TimeGrid: need dt > 0 and t_max >= 0");
  }
  const auto n = static_cast<std::size_t>(std::llround(t_max / dt));
  return TimeGrid(dt, n + 1);
}

double sample_stable_increment(StableIndex beta, double scale_dt, RngStream& rng) {
  if (!(scale_dt > 0.0)) {
    throw std::domain_error("sample_stable_increment: scale_dt must be positive");
  }
  const double b = beta.beta;
  const double v = std::numbers::pi * rng.uniform01();  // (0, pi)
  const double w = rng.exponential();
  const double s = std::sin(b * v) / std::pow(std::sin(v), 1.0 / b) *
                   std::pow(std::sin((1.0 - b) * v) / w, (1.0 - b) / b);
  return std::pow(scale_dt, 1.0 / b) * s;
}

std::vector<double> simulate_subordinator(StableIndex beta, double op_step,
                                          double t_max, RngStream& rng) {
  if (!(op_step > 0.0) || !(t_max > 0.0)) {
    throw std::domain_error("simulate_subordinator: need op_step > 0, t_max > 0");
  }
  std::vector<double> u;
  u.reserve(static_cast<std::size_t>(2.0 * t_max / op_step) + 16);
  u.push_back(0.0);
  double running = 0.0;
  while (running <= t_max) {
    running += sample_stable_increment(beta, op_step, rng);
    u.push_back(running);
  }
  return u;
}

ClockPath invert_subordinator(std::vector<double> u_values, double op_step,
                              const TimeGrid& grid) {
  if (u_values.size() < 2 || u_values.front() != 0.0) {
    throw std::domain_error("invert_subordinator: malformed subordinator path");
  }
  if (u_values.back() <= grid.t_max() && grid.t_max() > 0.0) {
    throw std::runtime_error(
        "invert_subordinator: subordinator path does not cover the grid");
  }

  ClockPath path;
  path.op_step = op_step;
  path.grid = grid;
  path.e_values.resize(grid.size());

  // Both sequences are monotone: one forward sweep.
  std::size_t n = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double t = grid[k];
    while (n < u_values.size() && u_values[n] <= t) {
      ++n;
    }
    if (n >= u_values.size()) {
      throw std::runtime_error(
          "invert_subordinator: subordinator path does not cover the grid");
    }
    // first passage index: min n with U(n*op_step) > t
    path.e_values[k] = op_step * static_cast<double>(n - 1);
  }
  path.u_values = std::move(u_values);
  return path;
}

ClockPath simulate_clock(StableIndex beta, const TimeGrid& grid, double op_step,
                         RngStream& rng) {
  return invert_subordinator(
      simulate_subordinator(beta, op_step, grid.t_max() > 0.0 ? grid.t_max() : op_step, rng),
      op_step, grid);
}

ClockPath identity_clock(const TimeGrid& grid) {
  ClockPath path;
  path.op_step = grid.dt();
  path.grid = grid;
  path.e_values.resize(grid.size());
  path.u_values.resize(grid.size() + 1);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    path.e_values[k] = grid[k];
    path.u_values[k] = grid[k];
  }
  // one extra step so the path covers the grid maximum
  path.u_values.back() = grid.t_max() + grid.dt();
  return path;
}

double clock_moment(StableIndex beta, double t, int n) {
  if (t < 0.0) {
    throw std::domain_error("clock_moment: t must be nonnegative");
  }
  if (n < 0) {
    throw std::domain_error("clock_moment: n must be nonnegative");
  }
  if (n == 0) {
    return 1.0;
  }
  const double nb = static_cast<double>(n) * beta.beta;
  return gamma_fn(static_cast<double>(n) + 1.0) / gamma_fn(nb + 1.0) *
         std::pow(t, nb);
}

}  // namespace tcsde
