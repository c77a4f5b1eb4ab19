#include <gtest/gtest.h>

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "runner/config.hpp"
#include "runner/report.hpp"
#include "runner/scenarios.hpp"

using namespace scaleqm::runner;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("scaleqm_runner_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> violations_of(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.violations();
  }
  return {};
}

bool mentions(const std::vector<std::string>& v, std::string_view needle) {
  for (const auto& s : v) {
    if (s.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------- config

TEST(Config, EmptyTextGivesDefaults) {
  const ScenarioConfig cfg = parse_config("");
  EXPECT_EQ(cfg.scenario, "full-suite");
  EXPECT_EQ(cfg.seed, 1u);
  EXPECT_EQ(cfg.grid.n, 512u);
  EXPECT_EQ(cfg.steps, 100u);
}

TEST(Config, SectionsDottedKeysAndComments) {
  const ScenarioConfig cfg = parse_config(
      "scenario = momentum   # trailing comment\n"
      "; whole-line comment\n"
      "seed = 42\n"
      "[grid]\n"
      "n = 256\n"
      "dz = 0.125\n"
      "[pair]\n"
      "statistics = boson\n"
      "[field]\n"
      "kind = unscaled\n");
  EXPECT_EQ(cfg.scenario, "momentum");
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_EQ(cfg.grid.n, 256u);
  EXPECT_EQ(cfg.grid.dz, 0.125);
  EXPECT_EQ(cfg.pair_statistics, "boson");
  EXPECT_FALSE(cfg.scaled_field);
}

TEST(Config, NegativeSpacingNamesTheKey) {
  const auto v = violations_of("grid.dz = -0.1\n");
  ASSERT_FALSE(v.empty());
  EXPECT_TRUE(mentions(v, "grid.dz"));
}

TEST(Config, MisspelledKeySuggestsNearestKey) {
  const auto v = violations_of("fiel.kind = unscaled\n");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_TRUE(mentions(v, "field.kind"));
  EXPECT_EQ(suggest_key("fiel.kind"), std::optional<std::string>("field.kind"));
  EXPECT_EQ(suggest_key("completely.unrelated.thing"), std::nullopt);
}

TEST(Config, CollectsEveryViolation) {
  const auto v = violations_of(
      "grid.n = 100\n"
      "evolve.dt = 0\n"
      "pair.statistics = anyon\n"
      "bogus = 1\n"
      "seed = 1\n"
      "seed = 2\n");
  EXPECT_GE(v.size(), 5u);
  EXPECT_TRUE(mentions(v, "grid.n"));
  EXPECT_TRUE(mentions(v, "evolve.dt"));
  EXPECT_TRUE(mentions(v, "pair.statistics"));
  EXPECT_TRUE(mentions(v, "bogus"));
  EXPECT_TRUE(mentions(v, "seed"));
}

TEST(Config, RejectsOffGridReferencesAndBadNumerals) {
  EXPECT_TRUE(mentions(violations_of("references.x = 0.01\n"), "references.x"));
  EXPECT_FALSE(violations_of("numerals.unit = a.a\n").empty());
  EXPECT_FALSE(violations_of("numerals.strings = dbf.aag, xyz\n").empty());
  EXPECT_FALSE(violations_of("scenario = nonsense\n").empty());
  EXPECT_FALSE(violations_of("grid.n = abc\n").empty());
}

TEST(Config, LoadFromFileReportsMissingFile) {
  EXPECT_THROW(load_config("/nonexistent/scaleqm.cfg"), ConfigError);
  const fs::path dir = fresh_dir("load");
  std::ofstream(dir / "ok.cfg") << "scenario = axioms\naxioms.samples = 20\n";
  const ScenarioConfig cfg = load_config(dir / "ok.cfg");
  EXPECT_EQ(cfg.axiom_samples, 20u);
}

TEST(Config, EditDistance) {
  EXPECT_EQ(edit_distance("", ""), 0u);
  EXPECT_EQ(edit_distance("kitten", "sitting"), 3u);
  EXPECT_EQ(edit_distance("abc", ""), 3u);
}

TEST(Config, KeyListAndScenarioNamesAreConsistent) {
  std::set<std::string> keys;
  for (const auto& k : config_keys()) EXPECT_TRUE(keys.insert(k.key).second) << k.key;
  EXPECT_TRUE(keys.count("grid.n"));
  EXPECT_TRUE(keys.count("tolerances.free_gaussian"));
  std::vector<std::string> from_table;
  for (const auto& s : list_scenarios()) from_table.push_back(s.name);
  EXPECT_EQ(from_table, scenario_names());
}

// ---------------------------------------------------------------- report

TEST(Report, MeasurementScoring) {
  const Measurement exact{"x", 0.0, 0.0, 0.0};
  EXPECT_TRUE(exact.passed());
  EXPECT_EQ(exact.score(), 0.0);
  const Measurement miss{"x", 1e-300, 0.0, 0.0};
  EXPECT_FALSE(miss.passed());
  EXPECT_EQ(miss.score(), std::numeric_limits<double>::infinity());
  const Measurement band{"r", 4.4, 4.0, 0.8};
  EXPECT_TRUE(band.passed());
  EXPECT_NEAR(band.score(), 0.5, 1e-15);
  const Measurement nan{"n", std::nan(""), 0.0, 1.0};
  EXPECT_FALSE(nan.passed());
}

TEST(Report, CheckWithoutPartsOrWithErrorFails) {
  CheckReport empty{"c", "anchor"};
  EXPECT_FALSE(empty.passed());
  CheckReport ok{"c", "anchor", {{"a", 1.0, 1.0, 0.1}}};
  EXPECT_TRUE(ok.passed());
  ok.error = "boom";
  EXPECT_FALSE(ok.passed());
  CheckReport slow{"c", "anchor", {{"a", 1.0, 1.0, 0.1}}};
  slow.runtime_seconds = 2.0;
  slow.runtime_budget_seconds = 1.0;
  EXPECT_FALSE(slow.within_budget());
  EXPECT_FALSE(slow.passed());
}

TEST(Report, EmptyReportListStillWritesValidSummary) {
  const fs::path dir = fresh_dir("empty");
  write_report({}, dir, "axioms", 3);
  const auto j = nlohmann::json::parse(slurp(dir / "summary.json"));
  EXPECT_EQ(j["check_count"], 0);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_TRUE(j["checks"].empty());
  EXPECT_EQ(slurp(dir / "checks.csv"), "check_id,residual,tolerance,pass\n");
}

TEST(Report, FailingCheckIsRecordedAsFailing) {
  const fs::path dir = fresh_dir("failing");
  CheckReport bad{"ac99-demo", "demo", {{"gap", 2.0, 0.0, 1.0}}};
  write_report({bad}, dir, "demo", 1);
  const auto j = nlohmann::json::parse(slurp(dir / "summary.json"));
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_FALSE(j["checks"][0]["pass"].get<bool>());
  EXPECT_EQ(j["checks"][0]["residual"], 2.0);
  EXPECT_NE(slurp(dir / "checks.csv").find("ac99-demo,2,1,false"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "checks" / "ac99-demo.csv"));
}

TEST(Report, FormatDoubleRoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, 5.8e-7, -2.5, 1e300, 0.0}) EXPECT_EQ(std::stod(format_double(x)), x);
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_double(2.0), "2");
}

// ---------------------------------------------------------------- scenarios

TEST(Scenarios, ExceptionBecomesFailedCheck) {
  ScenarioConfig cfg;
  cfg.reference_x = 0.01;  // not a grid node; parse_config would have refused it
  const CheckReport r = run_check("ac06-localization-identities", cfg);
  ASSERT_TRUE(r.error.has_value());
  EXPECT_FALSE(r.passed());
  EXPECT_THROW(run_check("ac00-missing", cfg), std::invalid_argument);
}

TEST(Scenarios, TightToleranceFailsHonestly) {
  ScenarioConfig cfg;
  cfg.tolerances.free_gaussian = 1e-9;
  const CheckReport r = run_check("ac08-evolution", cfg);
  EXPECT_FALSE(r.error.has_value());
  EXPECT_FALSE(r.passed());
}

TEST(Scenarios, SameSeedGivesByteIdenticalOutput) {
  ScenarioConfig cfg = parse_config("scenario = numerals\n");
  const fs::path a = fresh_dir("det_a"), b = fresh_dir("det_b");
  for (const fs::path& dir : {a, b}) {
    const auto reports = run_scenario(cfg, dir);
    write_report(reports, dir, cfg.scenario, cfg.seed);
  }
  for (const char* f : {"summary.json", "checks.csv", "numerals.csv"}) {
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
    EXPECT_FALSE(slurp(a / f).empty()) << f;
  }
}

TEST(Scenarios, AxiomScenarioPasses) {
  ScenarioConfig cfg = parse_config("scenario = axioms\naxioms.samples = 50\n");
  const auto reports = run_scenario(cfg);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_TRUE(reports[0].passed());
  cfg.scenario = "unknown";
  EXPECT_THROW(run_scenario(cfg), std::invalid_argument);
}
