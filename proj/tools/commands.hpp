#pragma once

#include <string>

#include "run_config.hpp"

namespace cli {

// Runs one subcommand end to end: compute, assemble the table, write it.
// Returns the process exit code (0 success, 3 numerical failure). Config
// problems surface as ConfigError and are mapped to 2 by the caller.
int run_subcommand(const std::string& name, const RunConfig& cfg);

}  // namespace cli
