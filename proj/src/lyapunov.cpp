#include "tcsde/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tcsde {

namespace {

double powerlaw_alpha(const LyapunovSpec::Family& fam) {
  return std::visit([](const auto& v) { return v.alpha; }, fam);
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("LyapunovSpec: alpha must lie strictly in (0, 1)");
  }
}

}  // namespace

LyapunovSpec::LyapunovSpec(Family family) : family_(std::move(family)) {
  check_alpha(powerlaw_alpha(family_));
}

double LyapunovSpec::alpha() const { return powerlaw_alpha(family_); }

// exp(-alpha * integral_0^{t2} (a - b^2/2 + theta)) = exp(-alpha*c*sin(t2))
// for the registered a-form.
static double e2_weight(const Example2FormV& v, double t2) {
  return std::exp(-v.alpha * v.c * std::sin(t2));
}

double LyapunovSpec::value(double t1, double t2, double x) const {
  (void)t1;
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        const double p = std::pow(std::abs(x), v.alpha);
        if constexpr (std::is_same_v<T, PowerLawV>) {
          return p;
        } else {
          return p * e2_weight(v, t2);
        }
      },
      family_);
}

double LyapunovSpec::d_t1(double, double, double) const { return 0.0; }

double LyapunovSpec::d_t2(double t1, double t2, double x) const {
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PowerLawV>) {
          return 0.0;
        } else {
          return -v.alpha * v.c * std::cos(t2) * value(t1, t2, x);
        }
      },
      family_);
}

double LyapunovSpec::d_x(double, double t2, double x) const {
  if (x == 0.0) {
    throw std::domain_error("LyapunovSpec: derivative undefined at x = 0");
  }
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        const double d = v.alpha * std::copysign(1.0, x) *
                         std::pow(std::abs(x), v.alpha - 1.0);
        if constexpr (std::is_same_v<T, PowerLawV>) {
          return d;
        } else {
          return d * e2_weight(v, t2);
        }
      },
      family_);
}

double LyapunovSpec::d_xx(double, double t2, double x) const {
  if (x == 0.0) {
    throw std::domain_error("LyapunovSpec: derivative undefined at x = 0");
  }
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        const double d =
            v.alpha * (v.alpha - 1.0) * std::pow(std::abs(x), v.alpha - 2.0);
        if constexpr (std::is_same_v<T, PowerLawV>) {
          return d;
        } else {
          return d * e2_weight(v, t2);
        }
      },
      family_);
}

std::string LyapunovSpec::name() const {
  return std::holds_alternative<PowerLawV>(family_) ? "power_law"
                                                    : "example2_form";
}

Partials finite_diff_derivatives(const LyapunovSpec& v, double t1, double t2,
                                 double x, double h) {
  if (!(h > 0.0)) {
    throw std::domain_error("finite_diff_derivatives: h must be positive");
  }
  if (std::abs(x) < 10.0 * h) {
    throw std::domain_error(
        "finite_diff_derivatives: point too close to the x = 0 singularity");
  }
  const double h1 = h * std::max(1.0, std::abs(t1));
  const double h2 = h * std::max(1.0, std::abs(t2));
  const double hx = h * std::max(1.0, std::abs(x));
  Partials p{};
  p.t1 = (v.value(t1 + h1, t2, x) - v.value(std::max(0.0, t1 - h1), t2, x)) /
         (t1 + h1 - std::max(0.0, t1 - h1));
  p.t2 = (v.value(t1, t2 + h2, x) - v.value(t1, std::max(0.0, t2 - h2), x)) /
         (t2 + h2 - std::max(0.0, t2 - h2));
  p.x = (v.value(t1, t2, x + hx) - v.value(t1, t2, x - hx)) / (2.0 * hx);
  p.xx = (v.value(t1, t2, x + hx) - 2.0 * v.value(t1, t2, x) +
          v.value(t1, t2, x - hx)) /
         (hx * hx);
  return p;
}

double l1_operator(const LyapunovSpec& v, const CoefficientModel& model,
                   double t1, double t2, double x) {
  if (x == 0.0) {
    return 0.0;  // extension by the V(.,.,0) = 0 convention
  }
  return v.d_t1(t1, t2, x) + v.d_x(t1, t2, x) * model.rho(t1, t2, x);
}

double l2_operator(const LyapunovSpec& v, const CoefficientModel& model,
                   double t1, double t2, double x) {
  if (x == 0.0) {
    return 0.0;
  }
  const double g = model.g(t1, t2, x);
  return v.d_t2(t1, t2, x) + v.d_x(t1, t2, x) * model.f(t1, t2, x) +
         0.5 * v.d_xx(t1, t2, x) * g * g;
}

namespace {

// Slack for "<= 0" checks: operators built from closed-form partials are
// exact up to rounding, and borderline-equality scenarios must not flip.
constexpr double kScanTol = 1e-9;

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] =
        n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return v;
}

std::vector<double> logspace_radii(double r_min, double r_max, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  const double l0 = std::log(r_min), l1 = std::log(r_max);
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)] =
        n == 1 ? r_max : std::exp(l0 + (l1 - l0) * static_cast<double>(i) / (n - 1));
  }
  return v;
}

struct Extremum {
  double value;
  double t1, t2, x;
};

// Supremum of op over the t-grid times {+r, -r : r in radii}; deterministic
// scan order so worst-case reports are reproducible.
template <class Op>
Extremum scan_sup(Op&& op, const std::vector<double>& t1s,
                  const std::vector<double>& t2s,
                  const std::vector<double>& radii) {
  Extremum best{-std::numeric_limits<double>::infinity(), 0, 0, 0};
  for (double t1 : t1s) {
    for (double t2 : t2s) {
      for (double r : radii) {
        for (double x : {r, -r}) {
          const double val = op(t1, t2, x);
          if (val > best.value) {
            best = {val, t1, t2, x};
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

ScanReport scan_theorem1(const LyapunovSpec& v, const CoefficientModel& model,
                         const ScanBox& box) {
  if (box.t_points <= 0 || box.x_points <= 0 || !(box.h > box.r_min)) {
    throw std::domain_error("scan_theorem1: empty scan grid");
  }
  const auto t1s = linspace(0.0, box.t1_max, box.t_points);
  const auto t2s = linspace(0.0, box.t2_max, box.t_points);
  const auto radii = logspace_radii(box.r_min, box.h, box.x_points);

  ScanReport report;

  // 1) V(t1, t2, 0) = 0 on the t-grid.
  {
    Extremum w = scan_sup(
        [&](double a, double b, double) { return std::abs(v.value(a, b, 0.0)); },
        t1s, t2s, {0.0});
    report.conditions.push_back(
        {"V_zero_at_origin", w.value <= kScanTol, w.t1, w.t2, 0.0, w.value});
  }

  // 2) class-K minorant: mu(r) := inf over scanned shells of radius >= r of
  // the t-infimum of V. Positivity of every shell infimum makes the monotone
  // lower envelope a valid mu.
  {
    double worst = std::numeric_limits<double>::infinity();
    double worst_r = radii.front();
    for (double r : radii) {
      double inf_v = std::numeric_limits<double>::infinity();
      for (double t1 : t1s) {
        for (double t2 : t2s) {
          for (double x : {r, -r}) {
            inf_v = std::min(inf_v, v.value(t1, t2, x));
          }
        }
      }
      if (inf_v < worst) {
        worst = inf_v;
        worst_r = r;
      }
    }
    report.conditions.push_back(
        {"class_K_minorant", worst > 0.0, 0.0, 0.0, worst_r, worst});
  }

  // 3), 4) operator signs over the whole scanned box.
  {
    Extremum w1 = scan_sup(
        [&](double a, double b, double x) { return l1_operator(v, model, a, b, x); },
        t1s, t2s, radii);
    report.conditions.push_back(
        {"L1V_nonpositive", w1.value <= kScanTol, w1.t1, w1.t2, w1.x, w1.value});
    Extremum w2 = scan_sup(
        [&](double a, double b, double x) { return l2_operator(v, model, a, b, x); },
        t1s, t2s, radii);
    report.conditions.push_back(
        {"L2V_nonpositive", w2.value <= kScanTol, w2.t1, w2.t2, w2.x, w2.value});
  }

  const bool all = std::all_of(report.conditions.begin(), report.conditions.end(),
                               [](const ConditionCheck& c) { return c.satisfied; });
  report.verdict = all ? Verdict::satisfied : Verdict::violated;
  return report;
}

ScanReport scan_theorem2(const LyapunovSpec& v, const CoefficientModel& model,
                         const ScanBox& box, const std::vector<double>& inner_radii) {
  if (inner_radii.empty()) {
    throw std::domain_error("scan_theorem2: need at least one shell");
  }
  const auto t1s = linspace(0.0, box.t1_max, box.t_points);
  const auto t2s = linspace(0.0, box.t2_max, box.t_points);

  ScanReport report;
  report.gamma1_est = std::numeric_limits<double>::infinity();
  report.gamma2_est = std::numeric_limits<double>::infinity();
  bool all_ok = true;
  for (double a : inner_radii) {
    if (!(a > 0.0 && a < box.h)) {
      throw std::domain_error("scan_theorem2: shell must satisfy 0 < a < h");
    }
    const auto radii = logspace_radii(a, box.h, box.x_points);
    Extremum w1 = scan_sup(
        [&](double s, double t, double x) { return l1_operator(v, model, s, t, x); },
        t1s, t2s, radii);
    Extremum w2 = scan_sup(
        [&](double s, double t, double x) { return l2_operator(v, model, s, t, x); },
        t1s, t2s, radii);
    const double g1 = -w1.value;
    const double g2 = -w2.value;
    const bool shell_ok =
        g1 >= -kScanTol && g2 >= -kScanTol && std::max(g1, g2) > kScanTol;
    all_ok = all_ok && shell_ok;
    report.conditions.push_back({"shell_" + std::to_string(a), shell_ok, w1.t1,
                                 w1.t2, w1.x, std::max(w1.value, w2.value)});
    report.gamma1_est = std::min(report.gamma1_est, g1);
    report.gamma2_est = std::min(report.gamma2_est, g2);
  }
  report.verdict = all_ok ? Verdict::satisfied : Verdict::violated;
  return report;
}

ScanReport scan_theorem3(const LyapunovSpec& v, const CoefficientModel& model,
                         const ScanBox& box, const std::vector<double>& probe_radii) {
  if (probe_radii.size() < 3 ||
      !std::is_sorted(probe_radii.begin(), probe_radii.end())) {
    throw std::domain_error("scan_theorem3: need an increasing list of radii");
  }
  ScanBox wide = box;
  wide.h = probe_radii.back();
  ScanReport report =
      scan_theorem2(v, model, wide,
                    logspace_radii(box.r_min, 0.5 * probe_radii.back(), 5));

  // Radial unboundedness: inf over the t-grid of V at each probe radius must
  // grow monotonically and by a clear factor overall; growth that stalls is
  // inconclusive rather than violated.
  const auto t1s = linspace(0.0, box.t1_max, box.t_points);
  const auto t2s = linspace(0.0, box.t2_max, box.t_points);
  std::vector<double> envelope;
  envelope.reserve(probe_radii.size());
  for (double r : probe_radii) {
    double inf_v = std::numeric_limits<double>::infinity();
    for (double t1 : t1s) {
      for (double t2 : t2s) {
        for (double x : {r, -r}) {
          inf_v = std::min(inf_v, v.value(t1, t2, x));
        }
      }
    }
    envelope.push_back(inf_v);
  }
  const bool increasing =
      std::adjacent_find(envelope.begin(), envelope.end(),
                         [](double a, double b) { return b <= a; }) ==
      envelope.end();
  constexpr double kGrowthFactor = 10.0;
  const bool diverging =
      increasing && envelope.front() > 0.0 &&
      envelope.back() >= kGrowthFactor * envelope.front();
  report.conditions.push_back({"radially_unbounded", diverging, 0.0, 0.0,
                               probe_radii.back(), envelope.back()});

  if (report.verdict == Verdict::satisfied && !diverging) {
    report.verdict = increasing ? Verdict::inconclusive : Verdict::violated;
  }
  return report;
}

double ito_residual(const SmoothFunction& f, const CoefficientModel& model,
                    const ClockPath& clock, const NoisePath& noise, double x0) {
  const Trajectory traj = integrate_direct(model, clock, noise, x0);
  if (traj.diverged) {
    throw std::runtime_error("ito_residual: trajectory diverged");
  }
  const TimeGrid& grid = traj.grid;
  const double dt = grid.dt();
  // Accumulate the right-hand side through a running state seeded with
  // F(0, 0, x0). For F = x the per-step contribution reduces, float for
  // float, to the Euler increment, so the state replays the recursion and
  // the residual is an exact zero; likewise for F = t1 (uniform-grid
  // differences are exact).
  double rhs_state = f.value(0.0, 0.0, x0);
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    const double t = grid[k];
    const double e = clock.e_values[k];
    const double x = traj.x_values[k];
    const double dtk = grid[k + 1] - t;
    const double de = clock.e_values[k + 1] - e;
    const double db = noise.b_of_e[k + 1] - noise.b_of_e[k];
    const double g = model.g(t, e, x);
    rhs_state += f.d_t1(t, e, x) * dtk + f.d_t2(t, e, x) * de +
                 0.5 * f.d_xx(t, e, x) * g * g * de +
                 f.d_x(t, e, x) * euler_increment(model, t, e, x, dt, de, db);
  }
  const std::size_t last = grid.size() - 1;
  return std::abs(
      f.value(grid[last], clock.e_values[last], traj.x_values[last]) - rhs_state);
}

}  // namespace tcsde
