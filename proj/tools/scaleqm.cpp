// scaleqm: batch runner for the scaled-quantum-mechanics checks.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "runner/config.hpp"
#include "runner/report.hpp"
#include "runner/scenarios.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

int list_command() {
  for (const auto& s : scaleqm::runner::list_scenarios()) {
    std::cout << s.name << "\n  " << s.description << "\n";
    for (const auto& id : s.check_ids) std::cout << "    " << id << "\n";
  }
  return kExitPass;
}

int keys_command() {
  for (const auto& k : scaleqm::runner::config_keys()) std::cout << k.key << "\t" << k.description << "\n";
  return kExitPass;
}

struct RunArgs {
  std::string config;
  std::string out;
  std::optional<unsigned long long> seed;
  std::optional<std::string> scenario;
};

int run_command(const RunArgs& args) {
  using namespace scaleqm::runner;
  ScenarioConfig cfg;
  if (!args.config.empty()) cfg = load_config(args.config);
  if (args.seed) cfg.seed = *args.seed;
  if (args.scenario) {
    const auto& names = scenario_names();
    if (std::find(names.begin(), names.end(), *args.scenario) == names.end()) {
      throw ConfigError({"--scenario: unknown scenario '" + *args.scenario + "'"});
    }
    cfg.scenario = *args.scenario;
  }

  std::string out = args.out;
  if (out.empty()) {
    if (const char* env = std::getenv("SCALEQM_OUT_DIR")) out = env;
  }
  if (out.empty()) throw ConfigError({"no output directory: pass --out or set SCALEQM_OUT_DIR"});

  const auto reports = run_scenario(cfg, out);
  write_report(reports, out, cfg.scenario, cfg.seed);

  for (const auto& r : reports) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id << "  residual=" << format_double(r.residual()) << "\n";
    if (r.passed()) continue;
    if (r.error) std::cout << "     error: " << *r.error << "\n";
    for (const auto& p : r.parts) {
      if (!p.passed()) {
        std::cout << "     " << p.name << " = " << format_double(p.value) << " (target " << format_double(p.target)
                  << " +- " << format_double(p.tolerance) << ")\n";
      }
    }
    if (!r.within_budget()) {
      std::cout << "     runtime " << format_double(r.runtime_seconds) << " s over budget "
                << format_double(*r.runtime_budget_seconds) << " s\n";
    }
  }
  std::cout << "results written to " << out << "\n";
  return all_passed(reports) ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scaled quantum mechanics scenario runner"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "run a scenario and write summary.json, checks.csv and stage CSVs");
  run->add_option("--config", run_args.config, "key = value config file; omitted means all defaults");
  run->add_option("--out", run_args.out, "output directory (default: $SCALEQM_OUT_DIR)");
  run->add_option("--seed", run_args.seed, "override the config seed");
  run->add_option("--scenario", run_args.scenario, "override the config scenario");

  auto* list = app.add_subcommand("list-scenarios", "list scenarios and their check ids");
  auto* keys = app.add_subcommand("list-keys", "list every accepted config key");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfigError;
  }

  try {
    if (list->parsed()) return list_command();
    if (keys->parsed()) return keys_command();
    if (run->parsed()) return run_command(run_args);
  } catch (const scaleqm::runner::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
