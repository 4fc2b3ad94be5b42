// Acceptance suite: ten numbered criteria, one PASS/FAIL line each, exit 0
// only when every criterion passes. Criterion 10 exercises the CLI binary,
// whose path is argv[1].
//
// Every tolerance is pinned here, not tuned at runtime:
//   1.  Laplace oracle, 4*SE, N = 1e5, runtime <= 30 s
//   2.  inverse-clock moments, max(3*SE, 5%), delta = 1e-3, N = 1e5, <= 2 min
//   3.  martingale diagnostics, 3*SE / max(3*SE, 5%), N = 1e5, <= 2 min
//   4.  Mittag-Leffler mean, max(3*SE, 5%), N = 1e5, <= 2 min
//   5.  martingale mean preservation, 3*SE, N = 1e5, <= 1 min
//   6.  duality/Ito consistency: strict decrease + exact zeros, <= 1 min
//   7.  Example 1: verdicts + stay >= 0.99 + contrast gap >= 0.1, <= 3 min
//   8.  Example 2: gates + scan + convergence >= 0.9, <= 3 min
//   9.  corollary transfer 3x3 grid, both sides >= 0.95, <= 5 min
//   10. byte-identical CLI re-runs, <= 1 min

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tcsde/refine.hpp"
#include "tcsde/special.hpp"
#include "tcsde/stability.hpp"

using namespace tcsde;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int id, const std::string& title, bool pass, double budget_s,
            double elapsed_s, const std::string& detail) {
  const bool in_budget = elapsed_s <= budget_s;
  const bool ok = pass && in_budget;
  if (!ok) {
    ++g_failures;
  }
  std::printf("%s criterion %2d: %s (%s; %.1fs of %.0fs budget)\n",
              ok ? "PASS" : "FAIL", id, title.c_str(),
              pass ? detail.c_str() : ("FAILED: " + detail).c_str(), elapsed_s,
              budget_s);
  std::fflush(stdout);
}

template <class Fn>
void criterion(int id, const std::string& title, double budget_s, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(id, title, pass, budget_s, elapsed, detail);
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

class Welford {
 public:
  void add(double v) {
    sum_ += v;
    sum2_ += v * v;
    ++n_;
  }
  MeanSe finish() const {
    const double n = static_cast<double>(n_);
    const double mean = sum_ / n;
    return {mean, std::sqrt(std::max(0.0, sum2_ / n - mean * mean) / n)};
  }

 private:
  double sum_ = 0.0, sum2_ = 0.0;
  long n_ = 0;
};

// --------------------------------------------------------------------------

bool criterion1(std::string& detail) {
  const int n = 100000;
  double worst_ratio = 0.0;
  for (double b : {0.3, 0.5, 0.8}) {
    const StableIndex beta(b);
    std::vector<Welford> acc(3);
    const double svals[3] = {0.5, 1.0, 2.0};
    for (int i = 0; i < n; ++i) {
      RngStream rng(derive_seed(1001, static_cast<std::uint64_t>(b * 1000)),
                    static_cast<std::uint64_t>(i));
      double u = 0.0;
      for (int k = 0; k < 100; ++k) {
        u += sample_stable_increment(beta, 0.01, rng);
      }
      for (int j = 0; j < 3; ++j) {
        acc[static_cast<std::size_t>(j)].add(std::exp(-svals[j] * u));
      }
    }
    for (int j = 0; j < 3; ++j) {
      const MeanSe m = acc[static_cast<std::size_t>(j)].finish();
      const double target = std::exp(-std::pow(svals[j], b));
      worst_ratio = std::max(worst_ratio, std::abs(m.mean - target) / m.se);
    }
  }
  std::ostringstream os;
  os << "worst |diff|/SE = " << worst_ratio << " <= 4";
  detail = os.str();
  return worst_ratio <= 4.0;
}

bool criterion2(std::string& detail) {
  const double delta = 1e-3;
  const int n = 100000;
  const TimeGrid grid = TimeGrid::uniform(1.0, 0.5);  // points 0, 0.5, 1
  double worst_margin = 0.0;  // |diff| / tolerance, max over the grid of cases
  for (double b : {0.5, 0.8}) {
    const StableIndex beta(b);
    Welford e1[2], e2[2];  // moments of E at t = 0.5 and t = 1
    for (int i = 0; i < n; ++i) {
      RngStream rng(derive_seed(1002, static_cast<std::uint64_t>(b * 1000)),
                    static_cast<std::uint64_t>(i));
      const ClockPath c = simulate_clock(beta, grid, delta, rng);
      for (int j = 0; j < 2; ++j) {
        const double e = c.e_values[static_cast<std::size_t>(j) + 1];
        e1[j].add(e);
        e2[j].add(e * e);
      }
    }
    const double ts[2] = {0.5, 1.0};
    for (int j = 0; j < 2; ++j) {
      for (int nn = 1; nn <= 2; ++nn) {
        const MeanSe m = (nn == 1 ? e1[j] : e2[j]).finish();
        const double truth = clock_moment(beta, ts[j], nn);
        const double tol = std::max(3.0 * m.se, 0.05 * truth);
        worst_margin = std::max(worst_margin, std::abs(m.mean - truth) / tol);
      }
    }
  }
  std::ostringstream os;
  os << "E[E_1] target 1.128379 at beta=0.5; worst |diff|/tol = " << worst_margin;
  detail = os.str();
  return worst_margin <= 1.0;
}

bool criterion3(std::string& detail) {
  const int n = 100000;
  const TimeGrid grid = TimeGrid::uniform(1.0, 1.0);
  double worst = 0.0;
  for (double b : {0.5, 0.8}) {
    const StableIndex beta(b);
    Welford mean_acc, second_acc;
    for (int i = 0; i < n; ++i) {
      const CoupledPath cp = coupled_paths(
          beta, grid, 1e-3, derive_seed(1003, static_cast<std::uint64_t>(b * 1000)),
          static_cast<std::uint64_t>(i));
      const double bv = cp.noise.b_of_e.back();
      mean_acc.add(bv);
      second_acc.add(bv * bv);
    }
    const MeanSe m = mean_acc.finish();
    const MeanSe s = second_acc.finish();
    const double truth = clock_moment(beta, 1.0, 1);
    worst = std::max(worst, std::abs(m.mean) / (3.0 * m.se));
    worst = std::max(worst, std::abs(s.mean - truth) /
                                std::max(3.0 * s.se, 0.05 * truth));
  }
  std::ostringstream os;
  os << "worst normalized deviation = " << worst << " <= 1";
  detail = os.str();
  return worst <= 1.0;
}

bool criterion4(std::string& detail) {
  const CoefficientModel model(LinearConstant{0.0, -1.0, 0.0});
  const StableIndex beta(0.5);
  const double step = 0.002;
  const TimeGrid grid = TimeGrid::uniform(1.0, step);
  const NoisePath noise = zero_noise(grid);
  const int n = 100000;
  Welford acc;
  for (int i = 0; i < n; ++i) {
    RngStream rng(derive_seed(1004, 0), 2 * static_cast<std::uint64_t>(i));
    const ClockPath clock = simulate_clock(beta, grid, step, rng);
    acc.add(integrate_direct(model, clock, noise, 1.0).x_values.back());
  }
  const MeanSe m = acc.finish();
  const double target = std::exp(1.0) * std::erfc(1.0);  // 0.427584
  const double tol = std::max(3.0 * m.se, 0.05 * target);
  std::ostringstream os;
  os << "mean X(1) = " << m.mean << " vs E_1/2(-1) = " << target << ", tol "
     << tol;
  detail = os.str();
  return std::abs(m.mean - target) <= tol;
}

bool criterion5(std::string& detail) {
  const StableIndex beta(0.5);
  const TimeGrid grid = TimeGrid::uniform(1.0, 1.0);
  const int n = 100000;
  Welford acc;
  for (int i = 0; i < n; ++i) {
    const CoupledPath cp = coupled_paths(beta, grid, 0.01, derive_seed(1005, 0),
                                         static_cast<std::uint64_t>(i));
    acc.add(closed_form_linear(1.0, 0.0, 1.0, cp.clock, cp.noise)
                .x_values.back());
  }
  const MeanSe m = acc.finish();
  std::ostringstream os;
  os << "mean X(1) = " << m.mean << " vs 1, 3*SE = " << 3.0 * m.se;
  detail = os.str();
  return std::abs(m.mean - 1.0) <= 3.0 * m.se;
}

bool criterion6(std::string& detail) {
  const CoefficientModel model(LinearConstant{0.0, -1.0, 1.0});
  const SmoothFunction fx{[](double, double, double x) { return x; },
                          [](double, double, double) { return 0.0; },
                          [](double, double, double) { return 0.0; },
                          [](double, double, double) { return 1.0; },
                          [](double, double, double) { return 0.0; }};
  const SmoothFunction ft{[](double t1, double, double) { return t1; },
                          [](double, double, double) { return 1.0; },
                          [](double, double, double) { return 0.0; },
                          [](double, double, double) { return 0.0; },
                          [](double, double, double) { return 0.0; }};
  const SmoothFunction fx2{[](double, double, double x) { return x * x; },
                           [](double, double, double) { return 0.0; },
                           [](double, double, double) { return 0.0; },
                           [](double, double, double x) { return 2.0 * x; },
                           [](double, double, double) { return 2.0; }};
  // dt and delta halved together across 3 levels, 20 paths, with the levels
  // coupled on a shared fine realization (the sup-error decays only like
  // dt^{beta/2}, so uncoupled levels would not resolve the trend).
  const StableIndex beta(0.8);
  const int n_levels = 3;
  std::vector<double> sup_errors(n_levels, 0.0), x2_residuals(n_levels, 0.0);
  double worst_identity = 0.0;
  const int reps = 20;
  for (int i = 0; i < reps; ++i) {
    RngStream u_rng(derive_seed(1006, 2 * static_cast<std::uint64_t>(i)));
    RngStream w_rng(derive_seed(1006, 2 * static_cast<std::uint64_t>(i) + 1));
    const RefinementLevels levels =
        coupled_refinement(beta, 1.0, 0.004, n_levels, 2, u_rng, w_rng);
    for (int l = 0; l < n_levels; ++l) {
      const ClockPath& clock = levels.clocks[l];
      const NoisePath& noise = levels.noises[l];
      const Trajectory euler = integrate_direct(model, clock, noise, 1.0);
      const Trajectory exact = closed_form_linear(1.0, -1.0, 1.0, clock, noise);
      double sup = 0.0;
      for (std::size_t k = 0; k < euler.x_values.size(); ++k) {
        sup = std::max(sup, std::abs(euler.x_values[k] - exact.x_values[k]));
      }
      sup_errors[l] += sup / reps;
      worst_identity =
          std::max(worst_identity, ito_residual(fx, model, clock, noise, 1.0));
      worst_identity =
          std::max(worst_identity, ito_residual(ft, model, clock, noise, 1.0));
      x2_residuals[l] += ito_residual(fx2, model, clock, noise, 1.0) / reps;
    }
  }
  const bool sup_dec = sup_errors[0] > sup_errors[1] && sup_errors[1] > sup_errors[2];
  const bool res_dec =
      x2_residuals[0] > x2_residuals[1] && x2_residuals[1] > x2_residuals[2];
  std::ostringstream os;
  os << "sup-errors " << sup_errors[0] << " > " << sup_errors[1] << " > "
     << sup_errors[2] << "; x2 residuals " << x2_residuals[0] << " > "
     << x2_residuals[1] << " > " << x2_residuals[2]
     << "; identity residual = " << worst_identity;
  detail = os.str();
  return sup_dec && res_dec && worst_identity == 0.0;
}

bool criterion7(std::string& detail) {
  const StableIndex beta(0.5);
  McParams mc;
  mc.n_paths = 10000;
  mc.dt = 0.01;
  mc.op_step = 0.01;
  mc.seed = derive_seed(1007, 0);
  const Example1Report strict = run_example1(
      1.0, -1.0, 1.0, 0.5, beta, 0.01, 1.0, 0.05, 10.0, {5.0, 10.0, 20.0}, mc);
  const Example1Report contrast = run_example1(
      1.0, 2.0, 1.0, 0.5, beta, 0.01, 1.0, 0.05, 10.0, {10.0}, mc);

  const bool verdicts = strict.theorem1.verdict == Verdict::satisfied &&
                        strict.theorem3.verdict == Verdict::satisfied &&
                        contrast.theorem1.verdict == Verdict::violated;
  const bool stay_ok = strict.stay.probability >= 0.99;
  bool nondecreasing = true;
  for (std::size_t i = 1; i < strict.convergence.size(); ++i) {
    const auto& prev = strict.convergence[i - 1];
    const auto& cur = strict.convergence[i];
    nondecreasing = nondecreasing &&
                    cur.probability >=
                        prev.probability - prev.ci_half_width - cur.ci_half_width;
  }
  const bool contrast_gap =
      contrast.stay.probability <= strict.stay.probability - 0.1;
  std::ostringstream os;
  os << "stay = " << strict.stay.probability << " >= 0.99; contrast stay = "
     << contrast.stay.probability << "; convergence(5,10,20) = "
     << strict.convergence[0].probability << ", "
     << strict.convergence[1].probability << ", "
     << strict.convergence[2].probability;
  detail = os.str();
  return verdicts && stay_ok && nondecreasing && contrast_gap;
}

bool criterion8(std::string& detail) {
  // The criterion pins the model (b=1, theta=0.75, c=0.5, alpha=0.5) and the
  // Monte Carlo event (x0=0.1, tol=0.05, T=20, N=1e4) but not the clock
  // index; beta = 0.8 keeps enough operational time flowing by T = 20 for
  // the contraction to act on the bulk of paths.
  const StableIndex beta(0.8);
  const Example2Params params{1.0, 0.75, 0.5};
  McParams mc;
  mc.n_paths = 10000;
  mc.dt = 0.01;
  mc.op_step = 0.01;
  mc.seed = derive_seed(1008, 0);
  const Example2Report rep =
      run_example2(params, 0.5, beta, 0.1, 0.05, 20.0, mc);
  const Example2Report boundary =
      run_example2(params, 0.75, beta, 0.1, 0.05, 20.0, mc);

  const bool gates = rep.accepted && rep.K == 0.5 && !boundary.accepted &&
                     boundary.rejected_condition ==
                         "alpha_strictly_below_theta_over_sup_b2";
  const bool scan_ok = rep.l2_scan.verdict == Verdict::satisfied;
  const bool conv_ok = rep.convergence.probability >= 0.9;
  std::ostringstream os;
  os << "convergence = " << rep.convergence.probability
     << " >= 0.9 (beta=0.8); L2 scan "
     << (scan_ok ? "satisfied" : "not satisfied") << "; boundary alpha rejected = "
     << (boundary.accepted ? "no" : "yes");
  detail = os.str();
  return gates && scan_ok && conv_ok;
}

bool criterion9(std::string& detail) {
  // 3x3 grid with f1 - g1^2/2 < 0 throughout; the criterion's thresholds are
  // two-sided per cell: classical and time-changed estimates both >= 0.95 and
  // the transfer implication holds within the combined CI.
  const StableIndex beta(0.5);
  McParams mc;
  mc.n_paths = 2000;
  mc.dt = 0.01;
  mc.op_step = 0.01;
  mc.seed = derive_seed(1009, 0);
  double worst_classical = 1.0, worst_changed = 1.0;
  bool all_hold = true;
  for (double f1 : {-0.5, -1.0, -1.5}) {
    for (double g1 : {0.25, 0.5, 0.75}) {
      const TransferResult r =
          corollary_transfer_test(f1, g1, beta, 0.01, 0.05, 20.0, 0.05, mc);
      worst_classical = std::min(worst_classical, r.classical.probability);
      worst_changed = std::min(worst_changed, r.time_changed.probability);
      const bool cell_ok =
          r.classical.probability >= 0.95 &&
          r.time_changed.probability >= 0.95 &&
          (!r.classical_stable ||
           r.time_changed.probability + r.time_changed.ci_half_width +
                   r.classical.ci_half_width >=
               0.95);
      all_hold = all_hold && cell_ok && r.implication_holds;
    }
  }
  std::ostringstream os;
  os << "worst classical = " << worst_classical
     << ", worst time-changed = " << worst_changed << ", both >= 0.95";
  detail = os.str();
  return all_hold;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) {
    throw std::runtime_error("missing output " + p.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool criterion10(std::string& detail, const std::string& bin) {
  const fs::path dir = fs::temp_directory_path() / "tcsde_acceptance_rerun";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"clock", "clock --t-max 2 --dt 0.01 --op-step 0.01 --paths 1 --seed 5"},
      {"clock_ens", "clock --t-max 1 --dt 0.1 --op-step 0.01 --paths 200 --seed 5"},
      {"simulate",
       "simulate --t-max 2 --dt 0.01 --op-step 0.01 --set model.f1=-1 --set "
       "model.g1=1 --seed 5"},
      {"stability",
       "stability --paths 100 --t-max 2 --dt 0.01 --op-step 0.01 --set "
       "model.rho1=1 --set model.f1=-1 --seed 5"},
      {"lyapunov", "lyapunov --set model.rho1=1 --set model.f1=-1"},
      {"validate", "validate --set validate.paths=1000 --dt 0.002 --op-step 0.002"},
  };
  for (const auto& [tag, args] : runs) {
    const fs::path a = dir / (tag + ".a");
    const fs::path b = dir / (tag + ".b");
    for (const fs::path& out : {a, b}) {
      const std::string cmd =
          bin + " " + args + " --out " + out.string() + " >/dev/null 2>&1";
      const int rc = std::system(cmd.c_str());
      if (WEXITSTATUS(rc) != 0) {
        detail = tag + " run exited with code " + std::to_string(WEXITSTATUS(rc));
        return false;
      }
    }
    if (slurp(a) != slurp(b)) {
      detail = tag + " outputs differ between identical runs";
      return false;
    }
  }
  detail = std::to_string(runs.size()) + " subcommand re-runs byte-identical";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-tcsde-binary>\n");
    return 2;
  }
  const std::string bin = argv[1];

  criterion(1, "Laplace-transform oracle", 30.0, criterion1);
  criterion(2, "inverse-clock moments", 120.0, criterion2);
  criterion(3, "martingale diagnostics", 120.0, criterion3);
  criterion(4, "Mittag-Leffler ensemble mean", 120.0, criterion4);
  criterion(5, "martingale mean preservation", 60.0, criterion5);
  criterion(6, "duality and Ito consistency", 60.0, criterion6);
  criterion(7, "Example 1 reproduction", 180.0, criterion7);
  criterion(8, "Example 2 reproduction", 180.0, criterion8);
  criterion(9, "corollary transfer grid", 300.0, criterion9);
  criterion(10, "byte-identical determinism", 60.0,
            [&bin](std::string& d) { return criterion10(d, bin); });

  if (g_failures == 0) {
    std::printf("all 10 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
