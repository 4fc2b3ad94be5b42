// Coupled refinement-study helper for strong-convergence diagnostics: one fine realization of the
// subordinator and of the underlying Brownian walk, coarsened consistently
// across refinement levels. Comparing levels on common randomness turns the
// slowly-decaying discretization error (O(dt^{beta/2}) for the sup-error)
// into a paired statistic that decreases reliably.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "tcsde/noise.hpp"

namespace tcsde {

struct RefinementLevels {
  std::vector<ClockPath> clocks;  // coarsest first
  std::vector<NoisePath> noises;
};

/// Level l uses dt = op_step = base_step / factor^l for l = 0..n_levels-1.
/// All levels are views of the same fine subordinator path (subsampled) and
/// the same Brownian walk on the fine operational grid.
inline RefinementLevels coupled_refinement(StableIndex beta, double t_max,
                                           double base_step, int n_levels,
                                           int factor, RngStream& u_rng,
                                           RngStream& w_rng) {
  std::size_t coarsen = 1;
  for (int l = 1; l < n_levels; ++l) {
    coarsen *= static_cast<std::size_t>(factor);
  }
  const double fine_step = base_step / static_cast<double>(coarsen);

  // Fine subordinator, padded so its length minus one is a multiple of the
  // coarsest subsampling stride (subsampled paths then end on the same
  // final value, which exceeds t_max).
  std::vector<double> u = simulate_subordinator(beta, fine_step, t_max, u_rng);
  while ((u.size() - 1) % coarsen != 0) {
    u.push_back(u.back() + sample_stable_increment(beta, fine_step, u_rng));
  }

  // Brownian walk on the fine operational grid.
  std::vector<double> w(u.size(), 0.0);
  const double sqrt_step = std::sqrt(fine_step);
  for (std::size_t j = 1; j < w.size(); ++j) {
    w[j] = w[j - 1] + sqrt_step * w_rng.normal();
  }

  RefinementLevels out;
  for (int l = 0; l < n_levels; ++l) {
    std::size_t stride = coarsen;
    double step = base_step;
    for (int i = 0; i < l; ++i) {
      stride /= static_cast<std::size_t>(factor);
      step /= static_cast<double>(factor);
    }
    std::vector<double> u_level;
    u_level.reserve(u.size() / stride + 1);
    for (std::size_t j = 0; j < u.size(); j += stride) {
      u_level.push_back(u[j]);
    }
    ClockPath clock =
        invert_subordinator(std::move(u_level), step, TimeGrid::uniform(t_max, step));
    NoisePath noise;
    noise.grid = clock.grid;
    noise.b_of_e.resize(clock.e_values.size());
    for (std::size_t k = 0; k < clock.e_values.size(); ++k) {
      const auto j = static_cast<std::size_t>(std::llround(clock.e_values[k] / fine_step));
      noise.b_of_e[k] = w[j];
    }
    out.clocks.push_back(std::move(clock));
    out.noises.push_back(std::move(noise));
  }
  return out;
}

}  // namespace tcsde
