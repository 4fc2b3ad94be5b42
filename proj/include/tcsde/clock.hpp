#pragma once

#include <cstddef>
#include <vector>

#include "tcsde/rng.hpp"

namespace tcsde {

/// Index beta of a one-sided stable subordinator, 0 < beta < 1.
///
/// Values within 0.05 of either endpoint are rejected by default: the
/// variance of stable draws blows up there and desk-scale Monte Carlo
/// becomes meaningless. Pass allow_extreme to override.
struct StableIndex {
  double beta;

  explicit StableIndex(double beta_, bool allow_extreme = false);
};

/// Uniform real-time grid 0, dt, 2*dt, ..., n*dt.
class TimeGrid {
 public:
  static TimeGrid uniform(double t_max, double dt);

  std::size_t size() const { return n_points_; }
  double dt() const { return dt_; }
  double t_max() const { return dt_ * static_cast<double>(n_points_ - 1); }
  double operator[](std::size_t i) const { return dt_ * static_cast<double>(i); }

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

 private:
  TimeGrid(double dt, std::size_t n) : dt_(dt), n_points_(n) {}
  double dt_;
  std::size_t n_points_;
};

/// A coupled discrete realization of the subordinator U and its inverse E.
///
/// u_values[n] approximates U(n * op_step); e_values[k] approximates E at
/// grid point t_k via the first-passage rule
///   E_t ~ op_step * (min{n : U(n*op_step) > t} - 1),
/// which under-approximates with O(op_step) bias.
struct ClockPath {
  double op_step = 0.0;
  std::vector<double> u_values;
  std::vector<double> e_values;
  TimeGrid grid = TimeGrid::uniform(0.0, 1.0);
};

/// One increment of the subordinator over operational time scale_dt, so that
/// E[exp(-s X)] = exp(-scale_dt * s^beta). Kanter's exact transformation:
/// one uniform on (0, pi) plus one unit exponential per draw.
double sample_stable_increment(StableIndex beta, double scale_dt, RngStream& rng);

/// Cumulative sums of stable increments at spacing op_step, continued until
/// the running sum exceeds t_max. Returned vector starts at 0 and is
/// strictly increasing.
std::vector<double> simulate_subordinator(StableIndex beta, double op_step,
                                          double t_max, RngStream& rng);

/// First-passage inversion of a subordinator path onto a real-time grid.
/// Requires the path's final value to exceed the grid maximum; throws
/// std::runtime_error otherwise.
ClockPath invert_subordinator(std::vector<double> u_values, double op_step,
                              const TimeGrid& grid);

/// Convenience: simulate + invert with one stream.
ClockPath simulate_clock(StableIndex beta, const TimeGrid& grid, double op_step,
                         RngStream& rng);

/// Deterministic stub with E_t = t (classical, non-time-changed clock).
ClockPath identity_clock(const TimeGrid& grid);

/// Closed-form moment E[E_t^n] = n! * t^(n*beta) / Gamma(n*beta + 1).
/// n = 0 returns 1; negative t throws std::domain_error.
double clock_moment(StableIndex beta, double t, int n);

}  // namespace tcsde
