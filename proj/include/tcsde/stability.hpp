#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcsde/integrate.hpp"
#include "tcsde/lyapunov.hpp"

namespace tcsde {

/// Shared Monte Carlo knobs. The horizon T is a finite proxy for the
/// definitions' "for all t >= 0"; it is carried into every estimate so the
/// proxy is visible in the record.
struct McParams {
  int n_paths = 10000;
  std::uint64_t seed = 42;
  double dt = 1e-3;
  double op_step = 1e-3;
  Method method = Method::direct;
  bool classical_clock = false;  // identity clock E_t = t (duality baseline)
};

struct StabilityEstimate {
  double probability = 0.0;
  double ci_half_width = 0.0;  // normal-approximation CI, level 0.95
  int n_paths = 0;
  double horizon = 0.0;
  double threshold = 0.0;  // r for stay events, tol for convergence events
  double x0 = 0.0;
  std::uint64_t seed = 0;
  double dt = 0.0;
  double op_step = 0.0;
  double beta = 0.0;
  std::string model_id;
};

/// P{ |X(t)| < r on [0, T] }, estimated as the fraction of paths whose
/// discrete maximum stays below r. Divergence-flagged paths count as exits.
/// Requires 0 <= |x0| < r.
StabilityEstimate estimate_stay_probability(const CoefficientModel& model,
                                            StableIndex beta, double x0, double r,
                                            double T, const McParams& mc);

/// P{ lim X(t) = 0 }, proxied by |X(T)| < tol.
StabilityEstimate estimate_convergence_probability(const CoefficientModel& model,
                                                   StableIndex beta, double x0,
                                                   double tol, double T,
                                                   const McParams& mc);

struct DeltaSweepRow {
  double x0 = 0.0;
  StabilityEstimate estimate;
  bool monotone_flag = true;  // nonincreasing vs previous row, up to CI overlap
};

struct DeltaSweep {
  std::vector<DeltaSweepRow> rows;
  std::optional<double> empirical_delta;  // largest x0 with p >= 1 - epsilon
  double epsilon = 0.0;
};

DeltaSweep delta_sweep(const CoefficientModel& model, StableIndex beta, double r,
                       double epsilon, const std::vector<double>& x0_candidates,
                       double T, const McParams& mc);

struct TransferResult {
  StabilityEstimate classical;
  StabilityEstimate time_changed;
  bool classical_stable = false;   // estimate >= 1 - epsilon
  bool implication_holds = false;  // classical stable => time-changed within noise
};

/// Corollary check for the autonomous linear model: the same convergence
/// estimator on the classical SDE (identity clock) and on the time-changed
/// SDE. The implication is vacuously true when the classical side is not
/// stable at level epsilon.
TransferResult corollary_transfer_test(double f1, double g1, StableIndex beta,
                                       double x0, double tol, double T,
                                       double epsilon, const McParams& mc);

struct Example1Report {
  ScanReport theorem1;
  ScanReport theorem3;
  StabilityEstimate stay;
  std::vector<StabilityEstimate> convergence;  // one per horizon
};

/// Scenario driver for the linear model dX = -rho1 X dt + f1 X dE + g1 X dB_E
/// with V = |x|^alpha: theorem scans plus stay/convergence Monte Carlo.
Example1Report run_example1(double rho1, double f1, double g1, double alpha,
                            StableIndex beta, double x0, double r, double tol,
                            double stay_T, const std::vector<double>& horizons,
                            const McParams& mc);

struct Example2Report {
  bool accepted = false;
  std::string rejected_condition;  // named gate when not accepted
  double K = 0.0;
  ScanReport l2_scan;  // theorem-2 probe near 0
  StabilityEstimate convergence;
};

/// Scenario driver for the Example2 family. Validates the parameter gates
/// (theta > 0, K > 0, 0 < alpha < theta / sup b^2, strictly) analytically
/// before running; a violated gate is reported, not thrown. The convergence
/// run uses the duality integrator.
Example2Report run_example2(const Example2Params& params, double alpha,
                            StableIndex beta, double x0, double tol, double T,
                            const McParams& mc);

}  // namespace tcsde
