#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tcsde/integrate.hpp"
#include "tcsde/model.hpp"

namespace tcsde {

/// V(t1, t2, x) = |x|^alpha, 0 < alpha < 1. Twice differentiable away from
/// x = 0; the operators are extended by 0 at x = 0, matching V(.,.,0) = 0.
struct PowerLawV {
  double alpha;
};

/// Time-changed Lyapunov candidate for the Example2 model family:
///   V(t1, t2, x) = |x|^alpha * exp(-alpha * c * sin(t2)),
/// the |x|^alpha form weighted by exp(-alpha * integral(a - b^2/2 + theta)).
struct Example2FormV {
  double alpha;
  double theta;
  double b0;
  double c;
};

/// Candidate Lyapunov function with closed-form partials.
class LyapunovSpec {
 public:
  using Family = std::variant<PowerLawV, Example2FormV>;

  explicit LyapunovSpec(Family family);

  double value(double t1, double t2, double x) const;
  double d_t1(double t1, double t2, double x) const;
  double d_t2(double t1, double t2, double x) const;
  double d_x(double t1, double t2, double x) const;    // x != 0
  double d_xx(double t1, double t2, double x) const;   // x != 0

  double alpha() const;
  std::string name() const;
  const Family& family() const { return family_; }

 private:
  Family family_;
};

struct Partials {
  double t1, t2, x, xx;
};

/// Central finite differences at an interior point; x must be at least 10*h
/// away from 0 (throws std::domain_error otherwise). Step is scaled by
/// max(1, |coordinate|) per axis.
Partials finite_diff_derivatives(const LyapunovSpec& v, double t1, double t2,
                                 double x, double h = 1e-5);

/// L1V = V_t1 + V_x * rho; extended by 0 at x = 0.
double l1_operator(const LyapunovSpec& v, const CoefficientModel& model,
                   double t1, double t2, double x);

/// L2V = V_t2 + V_x * f + 0.5 * V_xx * g^2; extended by 0 at x = 0.
double l2_operator(const LyapunovSpec& v, const CoefficientModel& model,
                   double t1, double t2, double x);

enum class Verdict { satisfied, violated, inconclusive };

struct ConditionCheck {
  std::string id;
  bool satisfied = false;
  double t1 = 0.0, t2 = 0.0, x = 0.0;  // worst-case point
  double worst_value = 0.0;
};

struct ScanReport {
  std::vector<ConditionCheck> conditions;
  double gamma1_est = 0.0;
  double gamma2_est = 0.0;
  Verdict verdict = Verdict::inconclusive;
};

/// Scan grids. t axes are uniform over [0, t_max]; x shells are log-spaced
/// radii in (r_min, h], both signs scanned.
struct ScanBox {
  double t1_max = 10.0;
  double t2_max = 10.0;
  double h = 1.0;
  double r_min = 1e-4;
  int t_points = 21;
  int x_points = 41;
};

/// Grid-based sufficiency probe of the stochastic-stability conditions:
/// V(t1,t2,0) = 0, a positive monotone lower envelope of shell-infima of V
/// (synthesized class-K minorant), and L1V <= 0, L2V <= 0 at every scanned
/// point. A "satisfied" verdict means no scanned counterexample, not a proof.
ScanReport scan_theorem1(const LyapunovSpec& v, const CoefficientModel& model,
                         const ScanBox& box);

/// Asymptotic-stability probe over annular shells: for each inner radius a,
/// estimates gamma1 = -sup L1V and gamma2 = -sup L2V over {a <= |x| <= h}.
/// Satisfied iff both are nonnegative on every shell and not both vanish.
ScanReport scan_theorem2(const LyapunovSpec& v, const CoefficientModel& model,
                         const ScanBox& box, const std::vector<double>& inner_radii);

/// Global probe: theorem-2 style shells spanning the probe radii, plus a
/// radial-unboundedness check on inf_t V at increasing radii (monotone
/// divergence heuristic; stalls are reported as inconclusive).
ScanReport scan_theorem3(const LyapunovSpec& v, const CoefficientModel& model,
                         const ScanBox& box, const std::vector<double>& probe_radii);

/// C^{1,1,2} test function with its four partials, for the Ito-formula
/// residual check.
struct SmoothFunction {
  std::function<double(double, double, double)> value;
  std::function<double(double, double, double)> d_t1;
  std::function<double(double, double, double)> d_t2;
  std::function<double(double, double, double)> d_x;
  std::function<double(double, double, double)> d_xx;
};

/// Terminal defect of the time-changed Ito formula along one Euler
/// trajectory: |F(t,E_t,X_t) - F(0,0,x0) - sum of the six left-endpoint
/// Riemann/Ito sums|. Exactly zero for F = x and F = t1.
double ito_residual(const SmoothFunction& f, const CoefficientModel& model,
                    const ClockPath& clock, const NoisePath& noise, double x0);

}  // namespace tcsde
