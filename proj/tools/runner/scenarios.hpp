#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace scaleqm::runner {

struct ScenarioInfo {
  std::string name;
  std::string description;
  std::vector<std::string> check_ids;
};

const std::vector<ScenarioInfo>& list_scenarios();

/// Runs every check of cfg.scenario. Exceptions inside a check become a
/// failed report. When artifact_dir is set, stage CSVs are written there.
std::vector<CheckReport> run_scenario(const ScenarioConfig& cfg,
                                      const std::optional<std::filesystem::path>& artifact_dir = std::nullopt);

/// Runs a single check by id (e.g. "ac05-momentum-kernel").
CheckReport run_check(const std::string& id, const ScenarioConfig& cfg,
                      const std::optional<std::filesystem::path>& artifact_dir = std::nullopt);

}  // namespace scaleqm::runner
