#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tcsde/clock.hpp"
#include "tcsde/rng.hpp"

namespace tcsde {

/// Brownian motion evaluated at the clock's operational times: b_of_e[k] is
/// B at E_{t_k}. Constant wherever the clock is flat, exactly.
struct NoisePath {
  std::vector<double> b_of_e;
  TimeGrid grid = TimeGrid::uniform(0.0, 1.0);
};

/// Samples B_{E_t} at the grid points of a clock path:
/// b[k+1] = b[k] + sqrt(dE_k) * Z_k. Exact in distribution given the clock.
/// A negative clock increment (corrupt path) throws std::runtime_error.
NoisePath simulate_time_changed_bm(const ClockPath& clock, RngStream& rng);

/// Identically-zero noise path (used when g == 0 and for fixtures).
NoisePath zero_noise(const TimeGrid& grid);

struct CoupledPath {
  ClockPath clock;
  NoisePath noise;
};

/// Clock and noise from two independent substreams (ids 2*path_index and
/// 2*path_index + 1 under the master seed), mirroring the independence of
/// B and E.
CoupledPath coupled_paths(StableIndex beta, const TimeGrid& grid, double op_step,
                          std::uint64_t master_seed, std::uint64_t path_index);

struct EnsembleStats {
  double mean = 0.0;
  double second_moment = 0.0;
  double se_mean = 0.0;
  double se_second = 0.0;
  std::size_t n_paths = 0;
};

/// Sample mean and second moment of an ensemble at the grid point nearest t,
/// with standard errors. Requires at least 100 paths on a common grid and t
/// inside the grid.
EnsembleStats martingale_diagnostics(std::span<const NoisePath> ensemble, double t);

/// Streaming accumulator for the same statistics, for ensembles too large to
/// hold in memory.
class StatsAccumulator {
 public:
  void add(double value) {
    sum_ += value;
    sum2_ += value * value;
    sum4_ += value * value * value * value;
    ++n_;
  }
  EnsembleStats finish() const;

 private:
  double sum_ = 0.0, sum2_ = 0.0, sum4_ = 0.0;
  std::size_t n_ = 0;
};

}  // namespace tcsde
