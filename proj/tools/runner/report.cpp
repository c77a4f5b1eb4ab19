#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace scaleqm::runner {

namespace {

using Json = nlohmann::ordered_json;

Json number_or_text(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

double Measurement::deviation() const { return std::abs(value - target); }

double Measurement::score() const {
  const double d = deviation();
  if (std::isnan(d)) return std::numeric_limits<double>::infinity();
  if (tolerance > 0.0) return d / tolerance;
  return d == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

bool Measurement::passed() const { return deviation() <= tolerance; }

double CheckReport::residual() const {
  if (error) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& p : parts) worst = std::max(worst, p.score());
  return worst;
}

bool CheckReport::within_budget() const {
  return !runtime_budget_seconds || runtime_seconds < *runtime_budget_seconds;
}

bool CheckReport::passed() const {
  if (error || parts.empty()) return false;
  return within_budget() && std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.passed(); });
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

void write_report(const std::vector<CheckReport>& reports, const std::filesystem::path& out_dir,
                  const std::string& scenario, unsigned long long seed) {
  std::filesystem::create_directories(out_dir);

  Json summary;
  summary["scenario"] = scenario;
  summary["seed"] = seed;
  summary["passed"] = all_passed(reports);
  summary["check_count"] = reports.size();
  Json checks = Json::array();
  for (const auto& r : reports) {
    Json c;
    c["id"] = r.id;
    c["anchor"] = r.anchor;
    c["residual"] = number_or_text(r.residual());
    c["tolerance"] = CheckReport::tolerance();
    c["pass"] = r.passed();
    if (r.runtime_budget_seconds) {
      c["runtime_budget_s"] = *r.runtime_budget_seconds;
      c["within_budget"] = r.within_budget();
    }
    Json parts = Json::array();
    for (const auto& p : r.parts) {
      Json j;
      j["name"] = p.name;
      j["value"] = number_or_text(p.value);
      j["target"] = number_or_text(p.target);
      j["tolerance"] = number_or_text(p.tolerance);
      j["pass"] = p.passed();
      parts.push_back(std::move(j));
    }
    c["parts"] = std::move(parts);
    if (!r.notes.empty()) c["notes"] = r.notes;
    if (r.error) c["error"] = *r.error;
    checks.push_back(std::move(c));
  }
  summary["checks"] = std::move(checks);

  {
    auto out = open_for_write(out_dir / "summary.json");
    out << summary.dump(2) << '\n';
  }
  {
    auto out = open_for_write(out_dir / "checks.csv");
    out << "check_id,residual,tolerance,pass\n";
    for (const auto& r : reports) {
      out << r.id << ',' << format_double(r.residual()) << ',' << format_double(CheckReport::tolerance()) << ','
          << (r.passed() ? "true" : "false") << '\n';
    }
  }
  std::filesystem::create_directories(out_dir / "checks");
  for (const auto& r : reports) {
    auto out = open_for_write(out_dir / "checks" / (r.id + ".csv"));
    out << "part,value,target,tolerance,pass\n";
    for (const auto& p : r.parts) {
      out << p.name << ',' << format_double(p.value) << ',' << format_double(p.target) << ','
          << format_double(p.tolerance) << ',' << (p.passed() ? "true" : "false") << '\n';
    }
  }
  {
    auto out = open_for_write(out_dir / "timing.csv");
    out << "check_id,runtime_s,budget_s\n";
    for (const auto& r : reports) {
      out << r.id << ',' << format_double(r.runtime_seconds) << ','
          << (r.runtime_budget_seconds ? format_double(*r.runtime_budget_seconds) : "") << '\n';
    }
  }
}

}  // namespace scaleqm::runner
