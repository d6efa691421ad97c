#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "run_config.hpp"
#include "selforg/version.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalFailure = 3;

struct SubArgs {
  std::string config_path;
  std::vector<std::string> sets;
};

int run(const std::string& name, const SubArgs& args) {
  cli::RunConfig cfg;
  if (!args.config_path.empty()) cfg = cli::parse_config_file(args.config_path);
  cli::apply_overrides(cfg, args.sets);
  return cli::run_subcommand(name, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-organization of a laser-driven condensate in a lossy cavity"};
  app.set_version_flag("--version", std::string("cavity_selforg ") + selforg::kVersion);
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> subcommands = {
      {"steady", "single steady-state solve at model.eta"},
      {"order-sweep", "order parameter and lattice depths along an eta sweep"},
      {"spectrum", "tracked excitation branches along an eta sweep"},
      {"quartic", "cos(theta)-sector dispersion roots per eta"},
      {"phase-diagram", "defect boundary u0(eta) by bisection"},
      {"depletion", "quantum depletion per atom along an eta sweep"},
      {"critical", "self-organization threshold for the configured model"},
  };

  std::string selected;
  SubArgs args;
  for (const auto& [name, description] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("config", args.config_path, "key = value configuration file");
    sub->add_option("--set", args.sets, "override, e.g. --set model.eta=80")
        ->take_all();
    sub->callback([&selected, name = name] { selected = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    return run(selected, args);
  } catch (const cli::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumericalFailure;
  }
}
