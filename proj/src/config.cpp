#include "tcsde/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tcsde {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) {
    return "";
  }
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

const std::map<std::string, RunConfig::KeySpec>& RunConfig::schema() {
  static const std::map<std::string, KeySpec> kSchema = {
      {"beta", {"0.5", "stable index of the subordinator, in (0.05, 0.95)"}},
      {"dt", {"0.001", "real-time grid step"}},
      {"t_max", {"10", "real-time horizon T"}},
      {"op_step", {"0.001", "operational-time step of the subordinator"}},
      {"seed", {"42", "master seed; path i uses substreams (2i, 2i+1)"}},
      {"paths", {"10000", "number of Monte Carlo paths"}},
      {"x0", {"0.1", "initial value"}},
      {"r", {"1", "stay-event radius"}},
      {"tol", {"0.05", "convergence-event threshold on |X(T)|"}},
      {"epsilon", {"0.05", "stability level (estimates compared to 1 - epsilon)"}},
      {"method", {"direct", "integrator: direct | duality | closed_form"}},
      {"preset", {"", "scenario preset: example1 | example1_contrast | example2 | sweep"}},
      {"out", {"", "output file path (default: derived from subcommand)"}},
      {"format", {"csv", "output format: csv | json"}},
      {"ops_csv", {"false", "clock: also write the operational-time path (s, U(s))"}},
      {"model.family", {"linear_constant", "linear_constant | example2"}},
      {"model.rho1", {"0", "real-time damping rate (rho = -rho1 x)"}},
      {"model.f1", {"0", "dE drift rate (f = f1 x)"}},
      {"model.g1", {"0", "dB_E diffusion rate (g = g1 x)"}},
      {"model.b0", {"1", "example2: constant diffusion b"}},
      {"model.theta", {"0.75", "example2: margin theta"}},
      {"model.c", {"0.5", "example2: cosine amplitude; K = |c|"}},
      {"lyap.family", {"power_law", "power_law | example2_form"}},
      {"lyap.alpha", {"0.5", "Lyapunov exponent alpha in (0, 1)"}},
      {"scan.t_max", {"10", "scan box extent on both time axes"}},
      {"scan.h", {"1", "scan shell outer radius"}},
      {"scan.t_points", {"21", "scan grid points per time axis"}},
      {"scan.x_points", {"41", "scan radii per shell (log-spaced)"}},
      {"clock_bias", {"1", "validation fixture: scale factor applied to E_t"}},
      {"validate.paths", {"100000", "validate: paths per oracle check"}},
  };
  return kSchema;
}

RunConfig::RunConfig() {
  for (const auto& [key, spec] : schema()) {
    values_[key] = spec.default_value;
  }
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (schema().find(key) == schema().end()) {
    throw std::invalid_argument("RunConfig: unknown key '" + key + "'");
  }
  values_[key] = value;
}

bool RunConfig::is_default(const std::string& key) const {
  return get(key) == schema().at(key).default_value;
}

const std::string& RunConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) {
    throw std::invalid_argument("RunConfig: unknown key '" + key + "'");
  }
  return it->second;
}

double RunConfig::get_double(const std::string& key) const {
  const std::string& v = get(key);
  std::size_t pos = 0;
  const double out = std::stod(v, &pos);
  if (pos != v.size()) {
    throw std::invalid_argument("RunConfig: key '" + key + "' is not a number");
  }
  return out;
}

int RunConfig::get_int(const std::string& key) const {
  const std::string& v = get(key);
  std::size_t pos = 0;
  const int out = std::stoi(v, &pos);
  if (pos != v.size()) {
    throw std::invalid_argument("RunConfig: key '" + key + "' is not an integer");
  }
  return out;
}

std::uint64_t RunConfig::get_u64(const std::string& key) const {
  const std::string& v = get(key);
  std::size_t pos = 0;
  const unsigned long long out = std::stoull(v, &pos);
  if (pos != v.size()) {
    throw std::invalid_argument("RunConfig: key '" + key + "' is not an integer");
  }
  return static_cast<std::uint64_t>(out);
}

bool RunConfig::get_bool(const std::string& key) const {
  const std::string& v = get(key);
  if (v == "true" || v == "1") {
    return true;
  }
  if (v == "false" || v == "0") {
    return false;
  }
  throw std::invalid_argument("RunConfig: key '" + key + "' is not a boolean");
}

std::string RunConfig::serialize() const {
  std::ostringstream out;
  for (const auto& [key, value] : values_) {  // std::map: sorted
    out << key << " = " << value << "\n";
  }
  return out.str();
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
    }
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("RunConfig: cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace tcsde
