#include "tcsde/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace tcsde {

NoisePath simulate_time_changed_bm(const ClockPath& clock, RngStream& rng) {
  NoisePath path;
  path.grid = clock.grid;
  path.b_of_e.resize(clock.e_values.size());
  if (path.b_of_e.empty()) {
    throw std::domain_error("simulate_time_changed_bm: empty clock path");
  }
  path.b_of_e[0] = 0.0;
  for (std::size_t k = 0; k + 1 < clock.e_values.size(); ++k) {
    const double de = clock.e_values[k + 1] - clock.e_values[k];
    if (de < 0.0) {
      throw std::runtime_error("simulate_time_changed_bm: clock increments negative");
    }
    // de == 0 gives an exactly constant value over the flat period
    path.b_of_e[k + 1] = path.b_of_e[k] + std::sqrt(de) * rng.normal();
  }
  return path;
}

NoisePath zero_noise(const TimeGrid& grid) {
  NoisePath path;
  path.grid = grid;
  path.b_of_e.assign(grid.size(), 0.0);
  return path;
}

CoupledPath coupled_paths(StableIndex beta, const TimeGrid& grid, double op_step,
                          std::uint64_t master_seed, std::uint64_t path_index) {
  RngStream clock_rng(master_seed, 2 * path_index);
  RngStream noise_rng(master_seed, 2 * path_index + 1);
  CoupledPath out;
  out.clock = simulate_clock(beta, grid, op_step, clock_rng);
  out.noise = simulate_time_changed_bm(out.clock, noise_rng);
  return out;
}

EnsembleStats StatsAccumulator::finish() const {
  if (n_ == 0) {
    throw std::domain_error("StatsAccumulator: no samples");
  }
  const auto n = static_cast<double>(n_);
  EnsembleStats s;
  s.n_paths = n_;
  s.mean = sum_ / n;
  s.second_moment = sum2_ / n;
  const double var = std::max(0.0, sum2_ / n - s.mean * s.mean);
  const double var2 = std::max(0.0, sum4_ / n - s.second_moment * s.second_moment);
  s.se_mean = std::sqrt(var / n);
  s.se_second = std::sqrt(var2 / n);
  return s;
}

EnsembleStats martingale_diagnostics(std::span<const NoisePath> ensemble, double t) {
  if (ensemble.size() < 100) {
    throw std::domain_error("martingale_diagnostics: need at least 100 paths");
  }
  const TimeGrid& grid = ensemble.front().grid;
  if (t < 0.0 || t > grid.t_max() + 0.5 * grid.dt()) {
    throw std::domain_error("martingale_diagnostics: t outside the grid");
  }
  const auto k = static_cast<std::size_t>(std::llround(t / grid.dt()));
  StatsAccumulator acc;
  for (const NoisePath& p : ensemble) {
    if (!(p.grid == grid)) {
      throw std::domain_error("martingale_diagnostics: mixed grids in ensemble");
    }
    acc.add(p.b_of_e[k]);
  }
  return acc.finish();
}

}  // namespace tcsde
