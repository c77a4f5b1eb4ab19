#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <scaleqm/numerals.hpp>

namespace scaleqm::runner {

namespace {

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out = "invalid configuration:";
  for (const auto& l : lines) out += "\n  " + l;
  return out;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Error text for the value, or nullopt when the value is accepted.
using Setter = std::function<std::optional<std::string>(const std::string&, ScenarioConfig&)>;

struct KeyRule {
  KeyInfo info;
  Setter set;
};

std::optional<double> to_real(const std::string& v) {
  double out = 0.0;
  const char* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> to_unsigned(const std::string& v) {
  std::uint64_t out = 0;
  const char* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return out;
}

Setter real(double ScenarioConfig::*field, bool positive = false) {
  return [=](const std::string& v, ScenarioConfig& c) -> std::optional<std::string> {
    const auto x = to_real(v);
    if (!x) return "expected a number, got '" + v + "'";
    if (positive && !(*x > 0.0)) return "must be > 0, got " + v;
    c.*field = *x;
    return std::nullopt;
  };
}

template <class Member>
Setter real_at(Member member, bool positive) {
  return [=](const std::string& v, ScenarioConfig& c) -> std::optional<std::string> {
    const auto x = to_real(v);
    if (!x) return "expected a number, got '" + v + "'";
    if (positive && !(*x > 0.0)) return "must be > 0, got " + v;
    member(c) = *x;
    return std::nullopt;
  };
}

template <class Member>
Setter count_at(Member member, std::size_t minimum, bool power_of_two = false, std::size_t maximum = SIZE_MAX) {
  return [=](const std::string& v, ScenarioConfig& c) -> std::optional<std::string> {
    const auto x = to_unsigned(v);
    if (!x) return "expected a non-negative integer, got '" + v + "'";
    if (*x < minimum) return "must be >= " + std::to_string(minimum) + ", got " + v;
    if (*x > maximum) return "must be <= " + std::to_string(maximum) + ", got " + v;
    if (power_of_two && !is_power_of_two(static_cast<std::size_t>(*x))) return "must be a power of two, got " + v;
    member(c) = static_cast<std::size_t>(*x);
    return std::nullopt;
  };
}

template <class Member>
Setter choice_at(Member member, std::vector<std::string> allowed) {
  return [=](const std::string& v, ScenarioConfig& c) -> std::optional<std::string> {
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      return "must be one of {" + list + "}, got '" + v + "'";
    }
    member(c) = v;
    return std::nullopt;
  };
}

std::optional<ProfileKind> profile_kind(const std::string& v) {
  if (v == "constant") return ProfileKind::constant;
  if (v == "linear") return ProfileKind::linear;
  if (v == "gaussian") return ProfileKind::gaussian;
  if (v == "sine") return ProfileKind::sine;
  return std::nullopt;
}

void add_profile_keys(std::vector<KeyRule>& rules, const std::string& name, Profile ScenarioConfig::*profile) {
  const std::string prefix = "field." + name + "_";
  rules.push_back({{prefix + "kind", "constant | linear | gaussian | sine"},
                   [=](const std::string& v, ScenarioConfig& c) -> std::optional<std::string> {
                     const auto k = profile_kind(v);
                     if (!k) return "must be one of {constant, linear, gaussian, sine}, got '" + v + "'";
                     (c.*profile).kind = *k;
                     return std::nullopt;
                   }});
  rules.push_back({{prefix + "amplitude", "profile amplitude"},
                   real_at([=](ScenarioConfig& c) -> double& { return (c.*profile).amplitude; }, false)});
  rules.push_back({{prefix + "center", "profile centre"},
                   real_at([=](ScenarioConfig& c) -> double& { return (c.*profile).center; }, false)});
  rules.push_back({{prefix + "width", "gaussian width (> 0)"},
                   real_at([=](ScenarioConfig& c) -> double& { return (c.*profile).width; }, true)});
  rules.push_back({{prefix + "wavenumber", "sine wavenumber"},
                   real_at([=](ScenarioConfig& c) -> double& { return (c.*profile).wavenumber; }, false)});
}

void add_grid_keys(std::vector<KeyRule>& rules, const std::string& section, GridConfig ScenarioConfig::*grid,
                   std::size_t max_n) {
  rules.push_back({{section + ".n", "points per axis (power of two, >= 8)"},
                   count_at([=](ScenarioConfig& c) -> std::size_t& { return (c.*grid).n; }, 8, true, max_n)});
  rules.push_back({{section + ".dz", "grid spacing (> 0)"},
                   real_at([=](ScenarioConfig& c) -> double& { return (c.*grid).dz; }, true)});
  rules.push_back({{section + ".origin", "first node; omit to centre the grid on 0"},
                   [=](const std::string& v, ScenarioConfig& c) -> std::optional<std::string> {
                     const auto x = to_real(v);
                     if (!x) return "expected a number, got '" + v + "'";
                     (c.*grid).origin = *x;
                     return std::nullopt;
                   }});
}

Setter tolerance(double Tolerances::*field) {
  return real_at([=](ScenarioConfig& c) -> double& { return c.tolerances.*field; }, true);
}

const std::vector<KeyRule>& rules() {
  static const std::vector<KeyRule> table = [] {
    std::vector<KeyRule> r;
    r.push_back({{"scenario", "which checks to run"},
                 choice_at([](ScenarioConfig& c) -> std::string& { return c.scenario; }, scenario_names())});
    r.push_back({{"seed", "seed for every random draw"},
                 [](const std::string& v, ScenarioConfig& c) -> std::optional<std::string> {
                   const auto x = to_unsigned(v);
                   if (!x) return "expected a non-negative integer, got '" + v + "'";
                   c.seed = *x;
                   return std::nullopt;
                 }});

    add_grid_keys(r, "grid", &ScenarioConfig::grid, std::size_t{1} << 16);

    r.push_back({{"field.kind", "unscaled | closed-form"},
                 [](const std::string& v, ScenarioConfig& c) -> std::optional<std::string> {
                   if (v != "unscaled" && v != "closed-form") {
                     return "must be one of {unscaled, closed-form}, got '" + v + "'";
                   }
                   c.scaled_field = v == "closed-form";
                   return std::nullopt;
                 }});
    add_profile_keys(r, "alpha", &ScenarioConfig::alpha);
    add_profile_keys(r, "beta", &ScenarioConfig::beta);

    r.push_back({{"packet.center", "gaussian centre"}, real(&ScenarioConfig::packet_center)});
    r.push_back({{"packet.width", "gaussian width (> 0)"}, real(&ScenarioConfig::packet_width, true)});
    r.push_back({{"packet.k0", "carrier wavenumber"}, real(&ScenarioConfig::packet_k0)});

    r.push_back({{"potential.kind", "none | harmonic"},
                 choice_at([](ScenarioConfig& c) -> std::string& { return c.potential_kind; },
                           {"none", "harmonic"})});
    r.push_back({{"potential.omega", "oscillator frequency (> 0)"}, real(&ScenarioConfig::potential_omega, true)});
    r.push_back({{"potential.center", "oscillator centre"}, real(&ScenarioConfig::potential_center)});

    r.push_back({{"references.x", "single-particle reference (grid node)"}, real(&ScenarioConfig::reference_x)});
    r.push_back({{"references.w", "translation target (grid node)"}, real(&ScenarioConfig::reference_w)});
    r.push_back({{"references.pair_v", "pair reference v (pair grid node)"}, real(&ScenarioConfig::pair_v)});
    r.push_back({{"references.pair_w", "pair reference w (pair grid node)"}, real(&ScenarioConfig::pair_w)});

    r.push_back({{"evolve.dt", "time step (> 0)"}, real(&ScenarioConfig::dt, true)});
    r.push_back({{"evolve.steps", "number of steps (>= 1)"},
                 count_at([](ScenarioConfig& c) -> std::size_t& { return c.steps; }, 1)});
    r.push_back({{"evolve.intertwine_refine", "grid refinement for the intertwined run (power of two)"},
                 count_at([](ScenarioConfig& c) -> std::size_t& { return c.intertwine_refine; }, 1, true, 64)});

    r.push_back({{"axioms.samples", "random tuples per backend (>= 1)"},
                 count_at([](ScenarioConfig& c) -> std::size_t& { return c.axiom_samples; }, 1)});

    r.push_back({{"numerals.strings", "comma-separated numerals"},
                 [](const std::string& v, ScenarioConfig& c) -> std::optional<std::string> {
                   std::vector<std::string> items;
                   std::stringstream ss(v);
                   std::string item;
                   while (std::getline(ss, item, ',')) {
                     item = trim(item);
                     if (item.empty()) return "empty entry in list";
                     try {
                       (void)parse_numeral(item);
                     } catch (const NumeralError& e) {
                       return "'" + item + "': " + e.what();
                     }
                     items.push_back(item);
                   }
                   c.numerals = std::move(items);
                   return std::nullopt;
                 }});
    auto numeral = [](std::string ScenarioConfig::*field) -> Setter {
      return [=](const std::string& v, ScenarioConfig& c) -> std::optional<std::string> {
        try {
          (void)parse_numeral(v);
        } catch (const NumeralError& e) {
          return "'" + v + "': " + e.what();
        }
        c.*field = v;
        return std::nullopt;
      };
    };
    r.push_back({{"numerals.zero", "numeral carrying the value 0"}, numeral(&ScenarioConfig::numeral_zero)});
    r.push_back({{"numerals.unit", "numeral carrying the value 1"}, numeral(&ScenarioConfig::numeral_unit)});

    add_grid_keys(r, "pair", &ScenarioConfig::pair_grid, 128);
    r.push_back({{"pair.statistics", "fermion | boson"},
                 choice_at([](ScenarioConfig& c) -> std::string& { return c.pair_statistics; },
                           {"fermion", "boson"})});
    r.push_back({{"pair.potential", "none | separable | coulomb-softened"},
                 choice_at([](ScenarioConfig& c) -> std::string& { return c.pair_potential; },
                           {"none", "separable", "coulomb-softened"})});
    r.push_back({{"pair.coupling", "pair potential strength"}, real(&ScenarioConfig::pair_coupling)});
    r.push_back({{"pair.softening", "softening length (> 0)"}, real(&ScenarioConfig::pair_softening, true)});
    r.push_back({{"pair.orbital_width", "orbital gaussian width (> 0)"}, real(&ScenarioConfig::orbital_width, true)});
    r.push_back({{"pair.orbital1_center", "first orbital centre"}, real(&ScenarioConfig::orbital1_center)});
    r.push_back({{"pair.orbital2_center", "second orbital centre"}, real(&ScenarioConfig::orbital2_center)});

    add_grid_keys(r, "nparticle", &ScenarioConfig::nparticle_grid, 64);

    r.push_back({{"tolerances.float_axioms", "relative defect, float backend"}, tolerance(&Tolerances::float_axioms)});
    r.push_back({{"tolerances.halving_ratio", "relative band around 4 per h-halving"},
                 tolerance(&Tolerances::halving_ratio)});
    r.push_back({{"tolerances.potential_only", "V-only commutation residual"},
                 tolerance(&Tolerances::potential_only)});
    r.push_back({{"tolerances.kernel_convolution", "convolution identity, relative"},
                 tolerance(&Tolerances::kernel_convolution)});
    r.push_back({{"tolerances.kernel_scaling_log2", "|log2(ratio / 100)| bound"},
                 tolerance(&Tolerances::kernel_scaling_log2)});
    r.push_back({{"tolerances.modulus", "pure-phase modulus change"}, tolerance(&Tolerances::modulus)});
    r.push_back({{"tolerances.round_trip", "reference translation round trip"}, tolerance(&Tolerances::round_trip)});
    r.push_back({{"tolerances.free_gaussian", "free evolution vs closed form, relative L2"},
                 tolerance(&Tolerances::free_gaussian)});
    r.push_back({{"tolerances.norm_drift", "relative norm change per step"}, tolerance(&Tolerances::norm_drift)});
    r.push_back({{"tolerances.intertwined_evolution", "intertwined evolution, relative L2"},
                 tolerance(&Tolerances::intertwined_evolution)});
    r.push_back({{"tolerances.pair_restriction", "localize_pair(v, v) vs direct formula"},
                 tolerance(&Tolerances::pair_restriction)});
    r.push_back({{"tolerances.pair_convolution", "2D convolution identity, relative"},
                 tolerance(&Tolerances::pair_convolution)});
    return r;
  }();
  return table;
}

void check_on_grid(const GridConfig& g, double z, const std::string& key, std::vector<std::string>& errors) {
  try {
    if (!g.make().contains(z)) errors.push_back(key + ": " + std::to_string(z) + " is not a grid node");
  } catch (const std::exception&) {
    // grid problems are reported separately
  }
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::runtime_error(join_lines(violations)), violations_(std::move(violations)) {}

Grid1D GridConfig::make() const {
  const double start = origin ? *origin : -0.5 * static_cast<double>(n) * dz;
  return Grid1D(n, dz, start);
}

Grid1D GridConfig::refined(std::size_t factor) const {
  const double start = origin ? *origin : -0.5 * static_cast<double>(n) * dz;
  return Grid1D(n * factor, dz / static_cast<double>(factor), start);
}

FieldSpec ScenarioConfig::field() const {
  return scaled_field ? FieldSpec::closed_form(alpha, beta) : FieldSpec::unscaled();
}

const std::vector<KeyInfo>& config_keys() {
  static const std::vector<KeyInfo> keys = [] {
    std::vector<KeyInfo> out;
    for (const auto& r : rules()) out.push_back(r.info);
    return out;
  }();
  return keys;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"axioms", "numerals", "localize", "operators", "evolve",
                                              "momentum", "pair", "nparticle", "full-suite"};
  return names;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::optional<std::string> suggest_key(std::string_view unknown) {
  std::optional<std::string> best;
  std::size_t best_distance = std::max<std::size_t>(2, unknown.size() / 4) + 1;
  for (const auto& k : config_keys()) {
    const std::size_t d = edit_distance(unknown, k.key);
    if (d < best_distance) {
      best_distance = d;
      best = k.key;
    }
  }
  return best;
}

ScenarioConfig parse_config(std::string_view text, const std::string& source) {
  std::map<std::string, const KeyRule*> by_key;
  for (const auto& r : rules()) by_key[r.info.key] = &r;

  ScenarioConfig config;
  std::vector<std::string> errors;
  std::map<std::string, std::size_t> seen;
  std::string section;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    std::string line = raw.substr(0, raw.find_first_of("#;"));
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        errors.push_back(where + "unterminated section header '" + line + "'");
        continue;
      }
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back(where + "expected 'key = value', got '" + line + "'");
      continue;
    }
    const std::string local = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    const std::string key = section.empty() ? local : section + "." + local;
    if (local.empty()) {
      errors.push_back(where + "missing key before '='");
      continue;
    }

    const auto it = by_key.find(key);
    if (it == by_key.end()) {
      std::string msg = where + "unknown key '" + key + "'";
      if (const auto s = suggest_key(key)) msg += " (did you mean '" + *s + "'?)";
      errors.push_back(msg);
      continue;
    }
    if (const auto [pos, fresh] = seen.emplace(key, line_no); !fresh) {
      errors.push_back(where + "duplicate key '" + key + "' (first set on line " + std::to_string(pos->second) +
                       ")");
      continue;
    }
    if (const auto err = it->second->set(value, config)) errors.push_back(where + key + ": " + *err);
  }

  if (errors.empty()) {
    check_on_grid(config.grid, config.reference_x, "references.x", errors);
    check_on_grid(config.grid, config.reference_w, "references.w", errors);
    check_on_grid(config.pair_grid, config.pair_v, "references.pair_v", errors);
    check_on_grid(config.pair_grid, config.pair_w, "references.pair_w", errors);
    try {
      const NumeralBasis basis(parse_numeral(config.numeral_zero), parse_numeral(config.numeral_unit));
      (void)basis;
    } catch (const std::exception& e) {
      errors.push_back(std::string("numerals.zero/numerals.unit: ") + e.what());
    }
  }
  if (!errors.empty()) throw ConfigError(std::move(errors));
  return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError({"cannot open config file '" + path.string() + "'"});
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str(), path.string());
}

}  // namespace scaleqm::runner
