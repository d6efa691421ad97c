#include "run_config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cli {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const double x = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const long x = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
}

// Either an explicit comma list "55,60,65" or a range "from:to:step"
// (inclusive of both ends up to rounding in the step count).
std::vector<double> parse_value_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  if (value.find(':') != std::string::npos) {
    std::istringstream in(value);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(in, part, ':')) parts.push_back(trim(part));
    if (parts.size() != 3) throw ConfigError(key + ": range syntax is from:to:step");
    const double from = parse_double(key, parts[0]);
    const double to = parse_double(key, parts[1]);
    const double step = parse_double(key, parts[2]);
    if (!(step > 0.0)) throw ConfigError(key + ": range step must be positive");
    if (to < from) throw ConfigError(key + ": range end precedes start");
    const long count = std::lround((to - from) / step);
    for (long i = 0; i <= count; ++i) {
      const double v = from + static_cast<double>(i) * step;
      if (v > to + 0.5 * step) break;
      out.push_back(v);
    }
  } else {
    std::istringstream in(value);
    std::string part;
    while (std::getline(in, part, ',')) {
      part = trim(part);
      if (part.empty()) throw ConfigError(key + ": empty entry in value list");
      out.push_back(parse_double(key, part));
    }
  }
  if (out.empty()) throw ConfigError(key + ": empty value list");
  return out;
}

std::string format_value(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "model.u0") {
    params.u0 = parse_double(key, value);
  } else if (key == "model.g") {
    params.g = parse_double(key, value);
  } else if (key == "model.delta_c") {
    params.delta_c = parse_double(key, value);
  } else if (key == "model.kappa") {
    params.kappa = parse_double(key, value);
  } else if (key == "model.eta") {
    params.eta = parse_double(key, value);
  } else if (key == "grid.n_points") {
    n_points = static_cast<int>(parse_long(key, value));
  } else if (key == "solver.dtau") {
    solver.dtau = parse_double(key, value);
  } else if (key == "solver.max_iter") {
    solver.max_iter = parse_long(key, value);
  } else if (key == "solver.tol_psi") {
    solver.tol_psi = parse_double(key, value);
  } else if (key == "solver.tol_mu") {
    solver.tol_mu = parse_double(key, value);
  } else if (key == "solver.seed_epsilon") {
    solver.seed_epsilon = parse_double(key, value);
  } else if (key == "solver.seed_sign") {
    solver.seed_sign = static_cast<int>(parse_long(key, value));
  } else if (key == "sweep.axis") {
    sweep_axis = value;
  } else if (key == "sweep.values") {
    sweep_values = parse_value_list(key, value);
  } else if (key == "spectrum.n_lowest") {
    n_lowest = static_cast<int>(parse_long(key, value));
  } else if (key == "phase.u0_min") {
    u0_min = parse_double(key, value);
    has_u0_range = true;
  } else if (key == "phase.u0_max") {
    u0_max = parse_double(key, value);
    has_u0_range = true;
  } else if (key == "output.format") {
    out_format = value;
  } else if (key == "output.path") {
    out_path = value;
  } else {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

void RunConfig::validate() const {
  try {
    params.validate();
    solver.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (n_points < 2) throw ConfigError("grid.n_points must be >= 2");
  if (sweep_axis != "eta")
    throw ConfigError("sweep.axis: only 'eta' is supported, got '" + sweep_axis + "'");
  if (n_lowest < 1) throw ConfigError("spectrum.n_lowest must be >= 1");
  if (out_format != "csv" && out_format != "json-lines")
    throw ConfigError("output.format must be 'csv' or 'json-lines', got '" + out_format + "'");
  if (has_u0_range && !(u0_min < u0_max && u0_max < 0.0))
    throw ConfigError("phase.u0_min < phase.u0_max < 0 required");
  for (double v : sweep_values)
    if (!std::isfinite(v)) throw ConfigError("sweep.values must be finite");
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("model.u0", format_value(params.u0));
  kv.emplace_back("model.g", format_value(params.g));
  kv.emplace_back("model.delta_c", format_value(params.delta_c));
  kv.emplace_back("model.kappa", format_value(params.kappa));
  kv.emplace_back("model.eta", format_value(params.eta));
  kv.emplace_back("grid.n_points", std::to_string(n_points));
  kv.emplace_back("solver.dtau", format_value(solver.dtau));
  kv.emplace_back("solver.max_iter", std::to_string(solver.max_iter));
  kv.emplace_back("solver.tol_psi", format_value(solver.tol_psi));
  kv.emplace_back("solver.tol_mu", format_value(solver.tol_mu));
  kv.emplace_back("solver.seed_epsilon", format_value(solver.seed_epsilon));
  kv.emplace_back("solver.seed_sign", std::to_string(solver.seed_sign));
  kv.emplace_back("sweep.axis", sweep_axis);
  if (!sweep_values.empty()) {
    std::string list;
    for (size_t i = 0; i < sweep_values.size(); ++i) {
      if (i) list += ',';
      list += format_value(sweep_values[i]);
    }
    kv.emplace_back("sweep.values", list);
  }
  kv.emplace_back("spectrum.n_lowest", std::to_string(n_lowest));
  if (has_u0_range) {
    kv.emplace_back("phase.u0_min", format_value(u0_min));
    kv.emplace_back("phase.u0_max", format_value(u0_max));
  }
  kv.emplace_back("output.format", out_format);
  kv.emplace_back("output.path", out_path);
  return kv;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
    cfg.set(key, value);
  }
  cfg.validate();
  return cfg;
}

void apply_overrides(RunConfig& cfg, const std::vector<std::string>& sets) {
  for (const std::string& s : sets) {
    const size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--set expects key=value, got '" + s + "'");
    cfg.set(trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
  }
  cfg.validate();
}

}  // namespace cli
