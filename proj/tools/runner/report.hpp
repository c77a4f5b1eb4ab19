#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace scaleqm::runner {

/// One measured quantity; passes when |value - target| <= tolerance.
struct Measurement {
  std::string name;
  double value = 0.0;
  double target = 0.0;
  double tolerance = 0.0;

  double deviation() const;
  /// deviation / tolerance; for tolerance 0 it is 0 on exact match, +inf otherwise.
  double score() const;
  bool passed() const;
};

struct CheckReport {
  std::string id;
  /// Identity or property under test, in words.
  std::string anchor;
  std::vector<Measurement> parts;
  std::vector<std::string> notes;
  /// Set when the check threw; the check then fails.
  std::optional<std::string> error;
  double runtime_seconds = 0.0;
  std::optional<double> runtime_budget_seconds;

  /// Largest part score; the check tolerance is 1.
  double residual() const;
  static constexpr double tolerance() { return 1.0; }
  bool within_budget() const;
  bool passed() const;
};

bool all_passed(const std::vector<CheckReport>& reports);

/// Writes summary.json, checks.csv, checks/<id>.csv (one row per part) and
/// timing.csv. summary.json and
/// checks.csv depend only on the computed values, not on wall-clock time.
void write_report(const std::vector<CheckReport>& reports, const std::filesystem::path& out_dir,
                  const std::string& scenario, unsigned long long seed);

/// Shortest decimal text that reads back to the same double; "inf"/"nan" otherwise.
std::string format_double(double x);

}  // namespace scaleqm::runner
