#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <scaleqm/grid.hpp>
#include <scaleqm/scaling_field.hpp>

namespace scaleqm::runner {

/// Every problem found while loading a config, reported together.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

struct GridConfig {
  std::size_t n = 512;
  double dz = 30.0 / 512.0;
  /// Unset means centred on zero.
  std::optional<double> origin;

  Grid1D make() const;
  /// Same interval with n * factor points.
  Grid1D refined(std::size_t factor) const;
};

struct Tolerances {
  double float_axioms = 1e-12;
  double halving_ratio = 0.2;  ///< relative band around the expected ratio
  double potential_only = 1e-14;
  double kernel_convolution = 1e-10;
  double kernel_scaling_log2 = 1.0;
  double modulus = 1e-14;
  double round_trip = 1e-13;
  double free_gaussian = 1e-6;
  double norm_drift = 1e-10;
  double intertwined_evolution = 1e-6;
  double pair_restriction = 1e-13;
  double pair_convolution = 1e-10;
};

struct ScenarioConfig {
  std::string scenario = "full-suite";
  std::uint64_t seed = 1;

  GridConfig grid;

  bool scaled_field = true;
  Profile alpha{ProfileKind::gaussian, 0.3, 0.0, 2.0, 1.0};
  Profile beta{ProfileKind::sine, 0.2, 0.0, 1.0, 0.20943951023931953};

  double packet_center = 0.0;
  double packet_width = 2.0;
  double packet_k0 = 0.0;

  std::string potential_kind = "harmonic";  ///< none | harmonic
  double potential_omega = 0.5;
  double potential_center = 0.0;

  double reference_x = 3.75;
  double reference_w = -1.875;
  double pair_v = 1.875;
  double pair_w = -1.875;

  double dt = 1e-3;
  std::size_t steps = 100;
  std::size_t intertwine_refine = 2;

  std::size_t axiom_samples = 1000;
  std::vector<std::string> numerals{"dbf.aag", "-a.jjhgbi", "b.a", "a.aa"};
  std::string numeral_zero = "a.a";
  std::string numeral_unit = "b.a";

  GridConfig pair_grid{64, 30.0 / 64.0, std::nullopt};
  std::string pair_statistics = "fermion";  ///< fermion | boson
  std::string pair_potential = "none";      ///< none | separable | coulomb-softened
  double pair_coupling = 1.0;
  double pair_softening = 1.0;
  double orbital_width = 1.5;
  double orbital1_center = -2.0;
  double orbital2_center = 2.0;

  GridConfig nparticle_grid{32, 30.0 / 32.0, std::nullopt};

  Tolerances tolerances;

  FieldSpec field() const;
};

/// Every accepted key with a one-line description, in documentation order.
struct KeyInfo {
  std::string key;
  std::string description;
};
const std::vector<KeyInfo>& config_keys();

/// Scenario names accepted by `scenario`.
const std::vector<std::string>& scenario_names();

/// Parses key = value lines. `[section]` prefixes following keys with
/// "section."; keys may also be written dotted at top level. '#' and ';'
/// start comments. Throws ConfigError listing every violation.
ScenarioConfig parse_config(std::string_view text, const std::string& source = "<config>");
ScenarioConfig load_config(const std::filesystem::path& path);

/// Closest known key within a small edit distance, if any.
std::optional<std::string> suggest_key(std::string_view unknown);

std::size_t edit_distance(std::string_view a, std::string_view b);

}  // namespace scaleqm::runner
