#include "tcsde/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tcsde {

namespace {

constexpr double kZ95 = 1.959963984540054;

Trajectory simulate_one_path(const CoefficientModel& model, StableIndex beta,
                             double x0, double T, const McParams& mc,
                             std::uint64_t path_index) {
  const TimeGrid grid = TimeGrid::uniform(T, mc.dt);
  ClockPath clock;
  NoisePath noise;
  if (mc.classical_clock) {
    clock = identity_clock(grid);
    RngStream noise_rng(mc.seed, 2 * path_index + 1);
    noise = simulate_time_changed_bm(clock, noise_rng);
  } else {
    CoupledPath cp = coupled_paths(beta, grid, mc.op_step, mc.seed, path_index);
    clock = std::move(cp.clock);
    noise = std::move(cp.noise);
  }
  switch (mc.method) {
    case Method::direct:
      return integrate_direct(model, clock, noise, x0);
    case Method::duality:
      return integrate_via_duality(model, clock, noise, x0);
    case Method::closed_form: {
      const auto* lin = std::get_if<LinearConstant>(&model.family());
      if (lin == nullptr || lin->rho1 != 0.0) {
        throw std::invalid_argument(
            "simulate_one_path: closed form needs LinearConstant with rho1 == 0");
      }
      return closed_form_linear(x0, lin->f1, lin->g1, clock, noise);
    }
  }
  throw std::logic_error("simulate_one_path: unknown method");
}

StabilityEstimate make_estimate(int successes, double threshold, double x0,
                                double T, StableIndex beta,
                                const CoefficientModel& model,
                                const McParams& mc) {
  StabilityEstimate est;
  est.n_paths = mc.n_paths;
  const double n = static_cast<double>(mc.n_paths);
  est.probability = static_cast<double>(successes) / n;
  est.ci_half_width =
      kZ95 * std::sqrt(est.probability * (1.0 - est.probability) / n);
  est.horizon = T;
  est.threshold = threshold;
  est.x0 = x0;
  est.seed = mc.seed;
  est.dt = mc.dt;
  est.op_step = mc.classical_clock ? mc.dt : mc.op_step;
  est.beta = beta.beta;
  est.model_id = model.name();
  if (mc.classical_clock) {
    est.model_id += ":classical";
  }
  return est;
}

}  // namespace

StabilityEstimate estimate_stay_probability(const CoefficientModel& model,
                                            StableIndex beta, double x0, double r,
                                            double T, const McParams& mc) {
  if (!(r > std::abs(x0))) {
    throw std::domain_error("estimate_stay_probability: need |x0| < r");
  }
  if (!(T > 0.0) || mc.n_paths < 1) {
    throw std::domain_error("estimate_stay_probability: bad MC parameters");
  }
  int successes = 0;
  for (int i = 0; i < mc.n_paths; ++i) {
    const Trajectory traj =
        simulate_one_path(model, beta, x0, T, mc, static_cast<std::uint64_t>(i));
    bool inside = !traj.diverged;  // divergence-flagged paths count as exits
    if (inside) {
      for (double x : traj.x_values) {
        if (std::abs(x) >= r) {
          inside = false;
          break;
        }
      }
    }
    successes += inside ? 1 : 0;
  }
  return make_estimate(successes, r, x0, T, beta, model, mc);
}

StabilityEstimate estimate_convergence_probability(const CoefficientModel& model,
                                                   StableIndex beta, double x0,
                                                   double tol, double T,
                                                   const McParams& mc) {
  if (!(tol > 0.0) || !(T > 0.0) || mc.n_paths < 1) {
    throw std::domain_error("estimate_convergence_probability: bad parameters");
  }
  int successes = 0;
  for (int i = 0; i < mc.n_paths; ++i) {
    const Trajectory traj =
        simulate_one_path(model, beta, x0, T, mc, static_cast<std::uint64_t>(i));
    const bool converged =
        !traj.diverged && std::abs(traj.x_values.back()) < tol;
    successes += converged ? 1 : 0;
  }
  return make_estimate(successes, tol, x0, T, beta, model, mc);
}

DeltaSweep delta_sweep(const CoefficientModel& model, StableIndex beta, double r,
                       double epsilon, const std::vector<double>& x0_candidates,
                       double T, const McParams& mc) {
  if (x0_candidates.empty() ||
      !std::is_sorted(x0_candidates.begin(), x0_candidates.end())) {
    throw std::domain_error("delta_sweep: candidates must be increasing");
  }
  DeltaSweep sweep;
  sweep.epsilon = epsilon;
  for (double x0 : x0_candidates) {
    DeltaSweepRow row;
    row.x0 = x0;
    // Same seed per candidate: common random numbers keep the sweep monotone
    // up to discretization.
    row.estimate = estimate_stay_probability(model, beta, x0, r, T, mc);
    if (!sweep.rows.empty()) {
      const auto& prev = sweep.rows.back();
      row.monotone_flag =
          row.estimate.probability <= prev.estimate.probability +
                                          prev.estimate.ci_half_width +
                                          row.estimate.ci_half_width;
    }
    if (row.estimate.probability >= 1.0 - epsilon) {
      sweep.empirical_delta = x0;
    }
    sweep.rows.push_back(std::move(row));
  }
  return sweep;
}

TransferResult corollary_transfer_test(double f1, double g1, StableIndex beta,
                                       double x0, double tol, double T,
                                       double epsilon, const McParams& mc) {
  const CoefficientModel model(LinearConstant{0.0, f1, g1});
  McParams classical_mc = mc;
  classical_mc.classical_clock = true;
  McParams changed_mc = mc;
  changed_mc.classical_clock = false;

  TransferResult out;
  out.classical =
      estimate_convergence_probability(model, beta, x0, tol, T, classical_mc);
  out.time_changed =
      estimate_convergence_probability(model, beta, x0, tol, T, changed_mc);
  out.classical_stable = out.classical.probability >= 1.0 - epsilon;
  out.implication_holds =
      !out.classical_stable || out.time_changed.probability >= 1.0 - epsilon;
  return out;
}

Example1Report run_example1(double rho1, double f1, double g1, double alpha,
                            StableIndex beta, double x0, double r, double tol,
                            double stay_T, const std::vector<double>& horizons,
                            const McParams& mc) {
  const CoefficientModel model(LinearConstant{rho1, f1, g1});
  const LyapunovSpec v{PowerLawV{alpha}};

  Example1Report report;
  ScanBox box;
  report.theorem1 = scan_theorem1(v, model, box);
  report.theorem3 =
      scan_theorem3(v, model, box, {1.0, 10.0, 100.0, 1e3, 1e4, 1e5, 1e6});
  report.stay = estimate_stay_probability(model, beta, x0, r, stay_T, mc);
  for (double T : horizons) {
    report.convergence.push_back(
        estimate_convergence_probability(model, beta, x0, tol, T, mc));
  }
  return report;
}

Example2Report run_example2(const Example2Params& params, double alpha,
                            StableIndex beta, double x0, double tol, double T,
                            const McParams& mc) {
  Example2Report report;
  report.K = params.K();
  if (!(params.theta > 0.0)) {
    report.rejected_condition = "theta_positive";
    return report;
  }
  if (!(report.K > 0.0)) {
    report.rejected_condition = "K_positive";
    return report;
  }
  const double sup_b2 = params.b0 * params.b0;
  if (!(alpha > 0.0) || !(alpha < params.theta / sup_b2)) {
    report.rejected_condition = "alpha_strictly_below_theta_over_sup_b2";
    return report;
  }
  report.accepted = true;

  const CoefficientModel model(params);
  const LyapunovSpec v{Example2FormV{alpha, params.theta, params.b0, params.c}};
  ScanBox box;
  box.h = 0.1;
  report.l2_scan = scan_theorem2(v, model, box, {0.001, 0.005, 0.02, 0.05});

  McParams duality_mc = mc;
  duality_mc.method = Method::duality;
  report.convergence =
      estimate_convergence_probability(model, beta, x0, tol, T, duality_mc);
  return report;
}

}  // namespace tcsde
