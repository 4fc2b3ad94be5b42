#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace tcsde {

/// Linear model with constant rates:
///   rho(t1, t2, x) = -rho1 * x   (rho1 > 0 damps in real time)
///   f(t1, t2, x)   =  f1 * x
///   g(t1, t2, x)   =  g1 * x
struct LinearConstant {
  double rho1 = 0.0;
  double f1 = 0.0;
  double g1 = 0.0;
};

/// Bounded coefficient c0 + a1*sin(w1*t1) + a2*cos(w2*t2).
struct SinusoidCoef {
  double c0 = 0.0;
  double a1 = 0.0;
  double w1 = 1.0;
  double a2 = 0.0;
  double w2 = 1.0;

  double operator()(double t1, double t2) const;
  double bound() const;
  bool depends_on_t1() const { return a1 != 0.0; }
};

/// Linear model with time-varying rates, same sign convention as
/// LinearConstant (rho coefficient enters with a minus sign).
struct LinearTimeVarying {
  SinusoidCoef rho1;
  SinusoidCoef f1;
  SinusoidCoef g1;
};

/// Autonomous model matching the time-changed form dX = f dE + g dB_E with
///   f(t2, x) = a(t2) * x,  a(t) = b0^2/2 - theta + c*cos(t)
///   g(t2, x) = b0 * x
/// The a-form is chosen so that the running integral of a - b^2/2 + theta
/// is c*sin(t), giving the analytic bound K = |c|.
struct Example2Params {
  double b0 = 1.0;
  double theta = 0.75;
  double c = 0.5;

  double a(double t2) const;
  double K() const;
};

/// The coefficient triple (rho, f, g) as a closed registry of parametric
/// families. Every family vanishes at x = 0, so the trivial solution exists
/// by construction. New families: add a struct above, extend the variant,
/// and cover the switch in model.cpp.
class CoefficientModel {
 public:
  using Family = std::variant<LinearConstant, LinearTimeVarying, Example2Params>;

  explicit CoefficientModel(Family family) : family_(std::move(family)) {}

  double rho(double t1, double t2, double x) const;
  double f(double t1, double t2, double x) const;
  double g(double t1, double t2, double x) const;

  /// Reported coefficient bound L (sum of the rate bounds).
  double bound() const;

  /// True when rho is identically zero and f, g do not depend on real time;
  /// only such models admit the duality route.
  bool autonomous() const;

  std::string name() const;

  const Family& family() const { return family_; }

 private:
  Family family_;
};

struct LipschitzProbe {
  double K = 0.0;
  double t1 = 0.0, t2 = 0.0, x = 0.0, y = 0.0;  // argmax sample
};

/// Monte Carlo estimate of the Lipschitz constant: max over sampled
/// (t1, t2, x, y) of the summed difference quotients of rho, f, g.
LipschitzProbe lipschitz_probe(const CoefficientModel& model, double x_lo,
                               double x_hi, double t1_hi, double t2_hi,
                               int samples, std::uint64_t seed = 0);

}  // namespace tcsde
