#pragma once

#include <optional>
#include <span>
#include <vector>

#include "scaleqm/grid.hpp"

namespace scaleqm {

enum class ProfileKind { constant, linear, gaussian, sine };

/// Closed-form real profile used for alpha or beta.
///   constant: A
///   linear:   A (z - c)
///   gaussian: A exp(-(z - c)^2 / (2 w^2))
///   sine:     A sin(k (z - c))
struct Profile {
  ProfileKind kind = ProfileKind::constant;
  double amplitude = 0.0;
  double center = 0.0;
  double width = 1.0;
  double wavenumber = 1.0;

  double value(double z) const;
  double derivative(double z) const;
  double second_derivative(double z) const;
};

/// Gamma = grad(gamma) = A + iB sampled on a grid.
struct ConnectionGradient {
  std::vector<double> A;
  std::vector<double> B;

  Complex at(std::size_t j) const { return {A[j], B[j]}; }
  Amplitudes as_complex() const;
};

/// The scaling field g = exp(alpha + i beta) = exp(gamma).
///
/// Closed-form fields are evaluated (and differentiated) analytically anywhere;
/// sampled fields live on one grid and use periodic central differences.
/// Charts are identity maps on the common grid, so lifting to a reference chart
/// only records the reference.
class FieldSpec {
 public:
  /// g == 1 everywhere.
  static FieldSpec unscaled();
  static FieldSpec closed_form(Profile alpha, Profile beta);
  static FieldSpec sampled(const Grid1D& grid, std::vector<double> alpha, std::vector<double> beta);

  bool is_sampled() const { return sample_grid_.has_value(); }
  const std::optional<Grid1D>& sample_grid() const { return sample_grid_; }
  const Profile& alpha_profile() const { return alpha_; }
  const Profile& beta_profile() const { return beta_; }

  /// alpha(z) + i beta(z); throws OffGridError for sampled fields off their nodes.
  Complex gamma_at(double z) const;
  Complex g_at(double z) const;
  Amplitudes gamma_on(const Grid1D& grid) const;

  ConnectionGradient gradient(const Grid1D& grid) const;
  /// d Gamma / dz, the second derivative of gamma.
  ConnectionGradient gradient_derivative(const Grid1D& grid) const;

  std::optional<double> chart_reference() const { return chart_reference_; }
  FieldSpec lift_to_chart(double reference) const;

  /// Same field with gamma multiplied by factor.
  FieldSpec scaled(double factor) const;

 private:
  FieldSpec() = default;
  void require_grid(const Grid1D& grid) const;

  Profile alpha_;
  Profile beta_;
  std::optional<Grid1D> sample_grid_;
  std::vector<double> alpha_samples_;
  std::vector<double> beta_samples_;
  std::optional<double> chart_reference_;
};

/// g(y)/g(x) = exp(gamma(y) - gamma(x)), formed in exponent space.
Complex connection_ratio(const FieldSpec& field, double x, double y);

/// Arithmetic mean of gamma values summed in a canonical order (sorted by
/// real then imaginary part), so the result is bitwise permutation invariant.
Complex mean_exponent(std::span<const Complex> gammas);

/// (gamma(x) + gamma(y)) / 2; exp of it is the geometric mean sqrt(g(x) g(y)).
Complex pair_gamma(const FieldSpec& field, double x, double y);

/// (sum_j gamma(z_j)) / n. Throws std::invalid_argument for an empty list.
Complex n_point_gamma(const FieldSpec& field, std::span<const double> points);

}  // namespace scaleqm
