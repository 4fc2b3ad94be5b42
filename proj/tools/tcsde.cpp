// tcsde: command-line driver for time-changed SDE experiments.
//
// Subcommands: clock | validate | simulate | stability | lyapunov.
// Every run is specified by a flat key=value config (see RunConfig::schema);
// command-line flags override config keys. Primary outputs are byte-stable
// for a fixed (config, seed); timestamps go to a .meta.json sidecar.
// Exit codes: 0 success, 1 failed check or I/O error, 2 usage/config error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tcsde/config.hpp"
#include "tcsde/refine.hpp"
#include "tcsde/special.hpp"
#include "tcsde/stability.hpp"

using nlohmann::json;
using namespace tcsde;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 17 significant digits: doubles round-trip exactly through the CSV.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string output_path(const RunConfig& cfg, const std::string& subcommand,
                        const std::string& ext) {
  std::string out = cfg.get("out");
  if (!out.empty()) {
    return out;
  }
  const char* dir = std::getenv("TCSDE_OUT_DIR");
  std::filesystem::path base = (dir != nullptr && *dir != '\0') ? dir : ".";
  return (base / (subcommand + "." + ext)).string();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // '\n' endings, no locale
  if (!out) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  return out;
}

void write_sidecar(const std::string& primary_path, const RunConfig& cfg,
                   const std::string& subcommand) {
  json meta;
  meta["subcommand"] = subcommand;
  meta["timestamp_unix"] =
      std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count();
  meta["config"] = cfg.serialize();
  std::ofstream out(primary_path + ".meta.json", std::ios::binary);
  if (out) {
    out << meta.dump(2) << "\n";
  }
}

CoefficientModel model_from_config(const RunConfig& cfg) {
  const std::string family = cfg.get("model.family");
  if (family == "linear_constant") {
    return CoefficientModel(LinearConstant{cfg.get_double("model.rho1"),
                                           cfg.get_double("model.f1"),
                                           cfg.get_double("model.g1")});
  }
  if (family == "example2") {
    return CoefficientModel(Example2Params{cfg.get_double("model.b0"),
                                           cfg.get_double("model.theta"),
                                           cfg.get_double("model.c")});
  }
  throw UsageError("unknown model.family '" + family + "'");
}

LyapunovSpec lyapunov_from_config(const RunConfig& cfg) {
  const std::string family = cfg.get("lyap.family");
  const double alpha = cfg.get_double("lyap.alpha");
  if (family == "power_law") {
    return LyapunovSpec(PowerLawV{alpha});
  }
  if (family == "example2_form") {
    return LyapunovSpec(Example2FormV{alpha, cfg.get_double("model.theta"),
                                      cfg.get_double("model.b0"),
                                      cfg.get_double("model.c")});
  }
  throw UsageError("unknown lyap.family '" + family + "'");
}

Method method_from_config(const RunConfig& cfg) {
  const std::string m = cfg.get("method");
  if (m == "direct") {
    return Method::direct;
  }
  if (m == "duality") {
    return Method::duality;
  }
  if (m == "closed_form") {
    return Method::closed_form;
  }
  throw UsageError("unknown method '" + m + "'");
}

McParams mc_from_config(const RunConfig& cfg) {
  McParams mc;
  mc.n_paths = cfg.get_int("paths");
  mc.seed = cfg.get_u64("seed");
  mc.dt = cfg.get_double("dt");
  mc.op_step = cfg.get_double("op_step");
  mc.method = method_from_config(cfg);
  if (mc.n_paths < 1) {
    throw UsageError("paths must be at least 1");
  }
  return mc;
}

json estimate_to_json(const StabilityEstimate& e, const std::string& kind) {
  return json{{"kind", kind},
              {"probability", e.probability},
              {"ci_half_width", e.ci_half_width},
              {"n_paths", e.n_paths},
              {"horizon", e.horizon},
              {"threshold", e.threshold},
              {"x0", e.x0},
              {"seed", e.seed},
              {"dt", e.dt},
              {"op_step", e.op_step},
              {"beta", e.beta},
              {"model", e.model_id}};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::satisfied:
      return "satisfied";
    case Verdict::violated:
      return "violated";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

json scan_to_json(const ScanReport& r) {
  json conditions = json::array();
  for (const auto& c : r.conditions) {
    conditions.push_back(json{{"id", c.id},
                              {"satisfied", c.satisfied},
                              {"worst_t1", c.t1},
                              {"worst_t2", c.t2},
                              {"worst_x", c.x},
                              {"worst_value", c.worst_value}});
  }
  return json{{"verdict", verdict_name(r.verdict)},
              {"gamma1_est", r.gamma1_est},
              {"gamma2_est", r.gamma2_est},
              {"conditions", conditions}};
}

void append_estimate_csv(std::ostream& out, const std::string& kind,
                         const StabilityEstimate& e,
                         const std::string& extra = "") {
  out << kind << "," << fmt(e.x0) << "," << fmt(e.probability) << ","
      << fmt(e.ci_half_width) << "," << e.n_paths << "," << fmt(e.horizon)
      << "," << fmt(e.threshold) << "," << e.seed << "," << fmt(e.dt) << ","
      << fmt(e.op_step) << "," << fmt(e.beta) << "," << e.model_id << ","
      << extra << "\n";
}

// ---------------------------------------------------------------------------
// clock

int cmd_clock(const RunConfig& cfg) {
  const StableIndex beta(cfg.get_double("beta"));
  const TimeGrid grid = TimeGrid::uniform(cfg.get_double("t_max"), cfg.get_double("dt"));
  const double op_step = cfg.get_double("op_step");
  const std::uint64_t seed = cfg.get_u64("seed");
  const int n_paths = cfg.get_int("paths");
  if (n_paths < 1) {
    throw UsageError("paths must be at least 1");
  }
  const std::string path = output_path(cfg, "clock", "csv");
  auto out = open_output(path);

  if (n_paths == 1) {
    RngStream rng(seed, 0);
    const ClockPath clock = simulate_clock(beta, grid, op_step, rng);
    out << "t,E\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
      out << fmt(grid[k]) << "," << fmt(clock.e_values[k]) << "\n";
    }
    if (cfg.get_bool("ops_csv")) {
      auto ops = open_output(path + ".ops.csv");
      ops << "s,U\n";
      for (std::size_t n = 0; n < clock.u_values.size(); ++n) {
        ops << fmt(op_step * static_cast<double>(n)) << ","
            << fmt(clock.u_values[n]) << "\n";
      }
    }
  } else {
    // ensemble summary: mean and standard error of E at each grid point
    std::vector<StatsAccumulator> acc(grid.size());
    for (int i = 0; i < n_paths; ++i) {
      RngStream rng(seed, 2 * static_cast<std::uint64_t>(i));
      const ClockPath clock = simulate_clock(beta, grid, op_step, rng);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        acc[k].add(clock.e_values[k]);
      }
    }
    out << "t,mean_E,se_E\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const EnsembleStats s = acc[k].finish();
      out << fmt(grid[k]) << "," << fmt(s.mean) << "," << fmt(s.se_mean) << "\n";
    }
  }
  out.close();
  write_sidecar(path, cfg, "clock");
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// validate

struct Check {
  std::string name;
  bool pass;
  double value;
  double target;
  double tolerance;
};

int cmd_validate(const RunConfig& cfg) {
  const int n_paths = cfg.get_int("validate.paths");
  if (n_paths < 100) {
    throw UsageError("validate.paths must be at least 100");
  }
  const std::uint64_t seed = cfg.get_u64("seed");
  const double bias = cfg.get_double("clock_bias");
  std::vector<Check> checks;

  // Laplace transform of U(1), 100 operational steps per path.
  for (double b : {0.3, 0.5, 0.8}) {
    const StableIndex beta(b);
    for (double s : {0.5, 1.0, 2.0}) {
      StatsAccumulator acc;
      RngStream rng(seed, static_cast<std::uint64_t>(1000 + b * 10 + s * 100));
      for (int i = 0; i < n_paths; ++i) {
        double u = 0.0;
        for (int k = 0; k < 100; ++k) {
          u += sample_stable_increment(beta, 0.01, rng);
        }
        acc.add(std::exp(-s * u));
      }
      const EnsembleStats st = acc.finish();
      const double target = std::exp(-std::pow(s, b));
      checks.push_back({"laplace_beta" + std::to_string(b) + "_s" + std::to_string(s),
                        std::abs(st.mean - target) <= 4.0 * st.se_mean, st.mean,
                        target, 4.0 * st.se_mean});
    }
  }

  // Inverse-clock moments and martingale diagnostics at t = 1.
  const TimeGrid grid = TimeGrid::uniform(1.0, 0.5);
  for (double b : {0.5, 0.8}) {
    const StableIndex beta(b);
    StatsAccumulator e_acc, b_acc;
    for (int i = 0; i < n_paths; ++i) {
      CoupledPath cp = coupled_paths(beta, grid, cfg.get_double("op_step"),
                                     derive_seed(seed, 7), static_cast<std::uint64_t>(i));
      e_acc.add(bias * cp.clock.e_values.back());
      b_acc.add(std::sqrt(bias) * cp.noise.b_of_e.back());
    }
    const EnsembleStats es = e_acc.finish();
    const EnsembleStats bs = b_acc.finish();
    const double m1 = clock_moment(beta, 1.0, 1);
    const double tol1 = std::max(3.0 * es.se_mean, 0.05 * m1);
    checks.push_back({"moment_n1_beta" + std::to_string(b),
                      std::abs(es.mean - m1) <= tol1, es.mean, m1, tol1});
    const double m2 = clock_moment(beta, 1.0, 2);
    const double tol2 = std::max(3.0 * es.se_second, 0.05 * m2);
    checks.push_back({"moment_n2_beta" + std::to_string(b),
                      std::abs(es.second_moment - m2) <= tol2, es.second_moment,
                      m2, tol2});
    checks.push_back({"martingale_mean_beta" + std::to_string(b),
                      std::abs(bs.mean) <= 3.0 * bs.se_mean, bs.mean, 0.0,
                      3.0 * bs.se_mean});
    const double mtol = std::max(3.0 * bs.se_second, 0.05 * m1);
    checks.push_back({"martingale_second_beta" + std::to_string(b),
                      std::abs(bs.second_moment - m1) <= mtol, bs.second_moment,
                      m1, mtol});
  }

  // Mittag-Leffler ensemble mean: dX = -X dE, mean X(1) = E_{1/2}(-1).
  {
    const StableIndex beta(0.5);
    const CoefficientModel model(LinearConstant{0.0, -1.0, 0.0});
    const TimeGrid sim_grid = TimeGrid::uniform(1.0, cfg.get_double("dt"));
    StatsAccumulator acc;
    const int n_ml = std::min(n_paths, 100000);
    for (int i = 0; i < n_ml; ++i) {
      RngStream clock_rng(derive_seed(seed, 8), 2 * static_cast<std::uint64_t>(i));
      ClockPath clock = simulate_clock(beta, sim_grid, cfg.get_double("op_step"), clock_rng);
      for (double& e : clock.e_values) {
        e *= bias;
      }
      const NoisePath noise = zero_noise(sim_grid);
      acc.add(integrate_direct(model, clock, noise, 1.0).x_values.back());
    }
    const EnsembleStats st = acc.finish();
    const double target = mittag_leffler(0.5, -1.0);
    const double tol = std::max(3.0 * st.se_mean, 0.05 * target);
    checks.push_back({"mittag_leffler_mean", std::abs(st.mean - target) <= tol,
                      st.mean, target, tol});
  }

  // Ito residual: identities plus refinement for F = x^2.
  {
    const StableIndex beta(0.5);
    const CoefficientModel model(LinearConstant{0.5, -1.0, 1.0});
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
    // Factor-4 refinement on coupled levels: each level is a coarsening of
    // one fine realization, so the slowly-decaying x^2 residual trend is a
    // paired statistic rather than a comparison of independent ensembles.
    double worst_identity = 0.0;
    const int n_levels = 3;
    std::vector<double> x2_residuals(n_levels, 0.0);
    const int reps = 40;
    for (int i = 0; i < reps; ++i) {
      RngStream u_rng(derive_seed(seed, 9), 2 * static_cast<std::uint64_t>(i));
      RngStream w_rng(derive_seed(seed, 9), 2 * static_cast<std::uint64_t>(i) + 1);
      const RefinementLevels levels =
          coupled_refinement(beta, 1.0, 0.02, n_levels, 4, u_rng, w_rng);
      for (int l = 0; l < n_levels; ++l) {
        worst_identity = std::max(
            worst_identity,
            ito_residual(fx, model, levels.clocks[l], levels.noises[l], 1.0));
        worst_identity = std::max(
            worst_identity,
            ito_residual(ft, model, levels.clocks[l], levels.noises[l], 1.0));
        x2_residuals[static_cast<std::size_t>(l)] +=
            ito_residual(fx2, model, levels.clocks[l], levels.noises[l], 1.0) /
            reps;
      }
    }
    checks.push_back({"ito_identity_exact", worst_identity == 0.0, worst_identity,
                      0.0, 0.0});
    const bool decreasing =
        x2_residuals[0] > x2_residuals[1] && x2_residuals[1] > x2_residuals[2];
    checks.push_back({"ito_x2_refinement", decreasing, x2_residuals.back(),
                      x2_residuals.front(), 0.0});
  }

  json report = json::array();
  bool all_pass = true;
  for (const Check& c : checks) {
    all_pass = all_pass && c.pass;
    report.push_back(json{{"check", c.name},
                          {"pass", c.pass},
                          {"value", c.value},
                          {"target", c.target},
                          {"tolerance", c.tolerance}});
  }
  const std::string path = output_path(cfg, "validate", "json");
  auto out = open_output(path);
  out << json{{"all_pass", all_pass}, {"checks", report}}.dump(2) << "\n";
  out.close();
  write_sidecar(path, cfg, "validate");
  if (!all_pass) {
    for (const Check& c : checks) {
      if (!c.pass) {
        std::cerr << "validate: FAILED check " << c.name << "\n";
      }
    }
    return kExitCheckFailure;
  }
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(const RunConfig& cfg) {
  const StableIndex beta(cfg.get_double("beta"));
  const TimeGrid grid = TimeGrid::uniform(cfg.get_double("t_max"), cfg.get_double("dt"));
  const CoefficientModel model = model_from_config(cfg);
  const Method method = method_from_config(cfg);
  const double x0 = cfg.get_double("x0");

  const CoupledPath cp =
      coupled_paths(beta, grid, cfg.get_double("op_step"), cfg.get_u64("seed"), 0);
  Trajectory traj;
  switch (method) {
    case Method::direct:
      traj = integrate_direct(model, cp.clock, cp.noise, x0);
      break;
    case Method::duality:
      if (!model.autonomous()) {
        throw UsageError("method=duality requires an autonomous model");
      }
      traj = integrate_via_duality(model, cp.clock, cp.noise, x0);
      break;
    case Method::closed_form: {
      const auto* lin = std::get_if<LinearConstant>(&model.family());
      if (lin == nullptr || lin->rho1 != 0.0) {
        throw UsageError("method=closed_form requires linear_constant with rho1=0");
      }
      traj = closed_form_linear(x0, lin->f1, lin->g1, cp.clock, cp.noise);
      break;
    }
  }

  const std::string path = output_path(cfg, "simulate", "csv");
  auto out = open_output(path);
  out << "t,E,B_E,X\n";
  for (std::size_t k = 0; k < traj.x_values.size(); ++k) {
    out << fmt(grid[k]) << "," << fmt(cp.clock.e_values[k]) << ","
        << fmt(cp.noise.b_of_e[k]) << "," << fmt(traj.x_values[k]) << "\n";
  }
  if (traj.diverged) {
    out << "# diverged: trajectory truncated at the overflow guard\n";
  }
  out.close();
  write_sidecar(path, cfg, "simulate");
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// stability

int cmd_stability(const RunConfig& cfg) {
  const StableIndex beta(cfg.get_double("beta"));
  const McParams mc = mc_from_config(cfg);
  const double x0 = cfg.get_double("x0");
  const double r = cfg.get_double("r");
  const double tol = cfg.get_double("tol");
  const double T = cfg.get_double("t_max");
  const double epsilon = cfg.get_double("epsilon");
  const std::string preset = cfg.get("preset");

  const std::string path = output_path(cfg, "stability", "csv");
  auto out = open_output(path);
  out << "kind,x0,probability,ci_half_width,n_paths,horizon,threshold,seed,dt,"
         "op_step,beta,model,extra\n";

  if (preset.empty()) {
    if (!(r > std::abs(x0))) {
      throw UsageError("need r > |x0| for stay-probability estimation");
    }
    const CoefficientModel model = model_from_config(cfg);
    append_estimate_csv(out, "stay",
                        estimate_stay_probability(model, beta, x0, r, T, mc));
    append_estimate_csv(
        out, "convergence",
        estimate_convergence_probability(model, beta, x0, tol, T, mc));
  } else if (preset == "example1" || preset == "example1_contrast") {
    if (!(r > std::abs(x0))) {
      throw UsageError("need r > |x0| for stay-probability estimation");
    }
    const double f1 =
        preset == "example1_contrast" ? 2.0 : cfg.get_double("model.f1");
    const Example1Report rep = run_example1(
        cfg.get_double("model.rho1"), f1, cfg.get_double("model.g1"),
        cfg.get_double("lyap.alpha"), beta, x0, r, tol, T,
        {0.5 * T, T, 2.0 * T}, mc);
    append_estimate_csv(out, "stay", rep.stay,
                        std::string("thm1=") + verdict_name(rep.theorem1.verdict) +
                            ";thm3=" + verdict_name(rep.theorem3.verdict));
    for (const auto& est : rep.convergence) {
      append_estimate_csv(out, "convergence", est);
    }
  } else if (preset == "example2") {
    const Example2Report rep = run_example2(
        Example2Params{cfg.get_double("model.b0"), cfg.get_double("model.theta"),
                       cfg.get_double("model.c")},
        cfg.get_double("lyap.alpha"), beta, x0, tol, T, mc);
    if (!rep.accepted) {
      throw UsageError("example2 parameters rejected: " + rep.rejected_condition);
    }
    append_estimate_csv(out, "convergence", rep.convergence,
                        std::string("l2_scan=") + verdict_name(rep.l2_scan.verdict));
  } else if (preset == "sweep") {
    const CoefficientModel model = model_from_config(cfg);
    std::vector<double> candidates;
    for (double c = r / 32.0; c < r; c *= 2.0) {
      candidates.push_back(c);
    }
    const DeltaSweep sweep =
        delta_sweep(model, beta, r, epsilon, candidates, T, mc);
    for (const auto& row : sweep.rows) {
      append_estimate_csv(out, "stay", row.estimate,
                          row.monotone_flag ? "monotone=1" : "monotone=0");
    }
    out << "# empirical_delta,"
        << (sweep.empirical_delta ? fmt(*sweep.empirical_delta) : "none") << "\n";
  } else {
    throw UsageError("unknown preset '" + preset + "'");
  }
  out.close();
  write_sidecar(path, cfg, "stability");
  return kExitSuccess;
}

// ---------------------------------------------------------------------------
// lyapunov

int cmd_lyapunov(const RunConfig& cfg) {
  const CoefficientModel model = model_from_config(cfg);
  const LyapunovSpec v = lyapunov_from_config(cfg);
  ScanBox box;
  box.t1_max = box.t2_max = cfg.get_double("scan.t_max");
  box.h = cfg.get_double("scan.h");
  box.t_points = cfg.get_int("scan.t_points");
  box.x_points = cfg.get_int("scan.x_points");

  json report;
  report["model"] = model.name();
  report["lyapunov"] = v.name();
  report["theorem1"] = scan_to_json(scan_theorem1(v, model, box));
  report["theorem2"] = scan_to_json(
      scan_theorem2(v, model, box, {box.h / 100.0, box.h / 10.0, box.h / 2.0}));
  report["theorem3"] = scan_to_json(scan_theorem3(
      v, model, box, {1.0, 10.0, 100.0, 1e3, 1e4, 1e5, 1e6}));

  const std::string path = output_path(cfg, "lyapunov", "json");
  auto out = open_output(path);
  out << report.dump(2) << "\n";
  out.close();
  write_sidecar(path, cfg, "lyapunov");
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"time-changed SDE simulation and stability toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "flat key=value config file");

  // Flag overrides for the most common keys; --set covers the rest.
  std::map<std::string, std::string> overrides;
  std::vector<std::pair<std::string, std::string>> flag_keys = {
      {"--beta", "beta"},       {"--dt", "dt"},
      {"--op-step", "op_step"}, {"--t-max", "t_max"},
      {"--paths", "paths"},     {"--seed", "seed"},
      {"--out", "out"},         {"--format", "format"},
      {"--method", "method"},   {"--preset", "preset"},
      {"--x0", "x0"},           {"--r", "r"},
      {"--tol", "tol"},         {"--epsilon", "epsilon"}};
  auto flag_values = std::make_shared<std::map<std::string, std::string>>();
  for (const auto& [flag, key] : flag_keys) {
    app.add_option_function<std::string>(
        flag,
        [flag_values, k = key](const std::string& v) { (*flag_values)[k] = v; },
        "override config key " + key);
  }
  std::vector<std::string> kv_sets;
  app.add_option("--set", kv_sets, "override any config key as key=value");

  auto* clock_cmd = app.add_subcommand("clock", "simulate subordinator/inverse clock paths");
  auto* validate_cmd = app.add_subcommand("validate", "run the closed-form oracle suite");
  auto* simulate_cmd = app.add_subcommand("simulate", "integrate one trajectory");
  auto* stability_cmd = app.add_subcommand("stability", "Monte Carlo stability estimates");
  auto* lyapunov_cmd = app.add_subcommand("lyapunov", "Lyapunov condition scans");
  for (CLI::App* sub : {clock_cmd, validate_cmd, simulate_cmd, stability_cmd, lyapunov_cmd}) {
    sub->fallthrough();  // global flags may follow the subcommand
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    RunConfig cfg = config_path.empty() ? RunConfig() : RunConfig::from_file(config_path);
    for (const auto& [key, value] : *flag_values) {
      cfg.set(key, value);
    }
    for (const std::string& kv : kv_sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw UsageError("--set expects key=value, got '" + kv + "'");
      }
      cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }

    if (clock_cmd->parsed()) {
      return cmd_clock(cfg);
    }
    if (validate_cmd->parsed()) {
      return cmd_validate(cfg);
    }
    if (simulate_cmd->parsed()) {
      return cmd_simulate(cfg);
    }
    if (stability_cmd->parsed()) {
      return cmd_stability(cfg);
    }
    if (lyapunov_cmd->parsed()) {
      return cmd_lyapunov(cfg);
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "tcsde: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "tcsde: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "tcsde: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "tcsde: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}
