#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "selforg/params.hpp"
#include "selforg/steady_state.hpp"

namespace cli {

// Raised on malformed files, unknown keys, bad values and inconsistent
// combinations. main() maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat key = value configuration with dotted section prefixes. The same keys
// are accepted from the config file and from --set overrides.
struct RunConfig {
  selforg::ModelParams params;
  int n_points = 200;
  selforg::SolverOptions solver;

  std::string sweep_axis = "eta";
  std::vector<double> sweep_values;

  int n_lowest = 3;

  double u0_min = 0.0;
  double u0_max = 0.0;
  bool has_u0_range = false;

  std::string out_format = "csv";
  std::string out_path = "-";

  void set(const std::string& key, const std::string& value);
  void validate() const;

  // Effective configuration as key/value pairs, in a fixed order. Feeding
  // these lines back through set() reproduces this RunConfig.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

// Reads a key = value file ('#' starts a comment, blank lines ignored).
RunConfig parse_config_file(const std::string& path);

// Applies "key=value" strings on top of cfg, then revalidates.
void apply_overrides(RunConfig& cfg, const std::vector<std::string>& sets);

}  // namespace cli
