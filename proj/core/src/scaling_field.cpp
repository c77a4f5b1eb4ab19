#include "scaleqm/scaling_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scaleqm {

double Profile::value(double z) const {
  const double u = z - center;
  switch (kind) {
    case ProfileKind::constant: return amplitude;
    case ProfileKind::linear: return amplitude * u;
    case ProfileKind::gaussian: return amplitude * std::exp(-u * u / (2.0 * width * width));
    case ProfileKind::sine: return amplitude * std::sin(wavenumber * u);
  }
  return 0.0;
}

double Profile::derivative(double z) const {
  const double u = z - center;
  switch (kind) {
    case ProfileKind::constant: return 0.0;
    case ProfileKind::linear: return amplitude;
    case ProfileKind::gaussian: {
      const double w2 = width * width;
      return -amplitude * (u / w2) * std::exp(-u * u / (2.0 * w2));
    }
    case ProfileKind::sine: return amplitude * wavenumber * std::cos(wavenumber * u);
  }
  return 0.0;
}

double Profile::second_derivative(double z) const {
  const double u = z - center;
  switch (kind) {
    case ProfileKind::constant:
    case ProfileKind::linear: return 0.0;
    case ProfileKind::gaussian: {
      const double w2 = width * width;
      return amplitude * (u * u / (w2 * w2) - 1.0 / w2) * std::exp(-u * u / (2.0 * w2));
    }
    case ProfileKind::sine: return -amplitude * wavenumber * wavenumber * std::sin(wavenumber * u);
  }
  return 0.0;
}

Amplitudes ConnectionGradient::as_complex() const {
  Amplitudes out(A.size());
  for (std::size_t j = 0; j < A.size(); ++j) out[j] = at(j);
  return out;
}

FieldSpec FieldSpec::unscaled() { return closed_form(Profile{}, Profile{}); }

FieldSpec FieldSpec::closed_form(Profile alpha, Profile beta) {
  for (const Profile* p : {&alpha, &beta}) {
    if (!std::isfinite(p->amplitude) || !std::isfinite(p->center) || !std::isfinite(p->width) ||
        !std::isfinite(p->wavenumber)) {
      throw std::invalid_argument("field profile parameters must be finite");
    }
    if (p->kind == ProfileKind::gaussian && !(p->width > 0.0)) {
      throw std::invalid_argument("gaussian profile width must be positive");
    }
  }
  FieldSpec f;
  f.alpha_ = alpha;
  f.beta_ = beta;
  return f;
}

FieldSpec FieldSpec::sampled(const Grid1D& grid, std::vector<double> alpha, std::vector<double> beta) {
  if (alpha.size() != grid.size() || beta.size() != grid.size()) {
    throw std::invalid_argument("field samples must have one value per grid point");
  }
  auto finite = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
  };
  if (!finite(alpha) || !finite(beta)) throw std::invalid_argument("field samples must be finite");
  FieldSpec f;
  f.sample_grid_ = grid;
  f.alpha_samples_ = std::move(alpha);
  f.beta_samples_ = std::move(beta);
  return f;
}

void FieldSpec::require_grid(const Grid1D& grid) const {
  if (sample_grid_ && !(*sample_grid_ == grid)) {
    throw std::invalid_argument("sampled field evaluated on a grid other than its own");
  }
}

Complex FieldSpec::gamma_at(double z) const {
  if (sample_grid_) {
    const std::size_t j = sample_grid_->index_of(z);
    return {alpha_samples_[j], beta_samples_[j]};
  }
  return {alpha_.value(z), beta_.value(z)};
}

Complex FieldSpec::g_at(double z) const { return std::exp(gamma_at(z)); }

Amplitudes FieldSpec::gamma_on(const Grid1D& grid) const {
  require_grid(grid);
  Amplitudes out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    out[j] = sample_grid_ ? Complex(alpha_samples_[j], beta_samples_[j]) : gamma_at(grid.coordinate(j));
  }
  return out;
}

ConnectionGradient FieldSpec::gradient(const Grid1D& grid) const {
  require_grid(grid);
  const std::size_t n = grid.size();
  ConnectionGradient out{std::vector<double>(n), std::vector<double>(n)};
  if (sample_grid_) {
    const double inv2h = 1.0 / (2.0 * grid.spacing());
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t jp = (j + 1) % n;
      const std::size_t jm = (j + n - 1) % n;
      out.A[j] = (alpha_samples_[jp] - alpha_samples_[jm]) * inv2h;
      out.B[j] = (beta_samples_[jp] - beta_samples_[jm]) * inv2h;
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      const double z = grid.coordinate(j);
      out.A[j] = alpha_.derivative(z);
      out.B[j] = beta_.derivative(z);
    }
  }
  return out;
}

ConnectionGradient FieldSpec::gradient_derivative(const Grid1D& grid) const {
  require_grid(grid);
  const std::size_t n = grid.size();
  ConnectionGradient out{std::vector<double>(n), std::vector<double>(n)};
  if (sample_grid_) {
    const double invh2 = 1.0 / (grid.spacing() * grid.spacing());
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t jp = (j + 1) % n;
      const std::size_t jm = (j + n - 1) % n;
      out.A[j] = (alpha_samples_[jp] - 2.0 * alpha_samples_[j] + alpha_samples_[jm]) * invh2;
      out.B[j] = (beta_samples_[jp] - 2.0 * beta_samples_[j] + beta_samples_[jm]) * invh2;
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      const double z = grid.coordinate(j);
      out.A[j] = alpha_.second_derivative(z);
      out.B[j] = beta_.second_derivative(z);
    }
  }
  return out;
}

FieldSpec FieldSpec::lift_to_chart(double reference) const {
  if (!std::isfinite(reference)) throw std::invalid_argument("chart reference must be finite");
  if (sample_grid_) (void)sample_grid_->index_of(reference);
  FieldSpec lifted = *this;
  lifted.chart_reference_ = reference;
  return lifted;
}

FieldSpec FieldSpec::scaled(double factor) const {
  FieldSpec out = *this;
  out.alpha_.amplitude *= factor;
  out.beta_.amplitude *= factor;
  for (auto& v : out.alpha_samples_) v *= factor;
  for (auto& v : out.beta_samples_) v *= factor;
  return out;
}

Complex connection_ratio(const FieldSpec& field, double x, double y) {
  return std::exp(field.gamma_at(y) - field.gamma_at(x));
}

Complex mean_exponent(std::span<const Complex> gammas) {
  if (gammas.empty()) throw std::invalid_argument("mean_exponent needs at least one value");
  if (gammas.size() == 1) return gammas[0] / 1.0;
  if (gammas.size() == 2) return (gammas[0] + gammas[1]) / 2.0;
  std::vector<Complex> sorted(gammas.begin(), gammas.end());
  std::sort(sorted.begin(), sorted.end(), [](const Complex& a, const Complex& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  Complex sum = 0.0;
  for (const auto& g : sorted) sum += g;
  return sum / static_cast<double>(sorted.size());
}

Complex pair_gamma(const FieldSpec& field, double x, double y) {
  const Complex g[2] = {field.gamma_at(x), field.gamma_at(y)};
  return mean_exponent(g);
}

Complex n_point_gamma(const FieldSpec& field, std::span<const double> points) {
  if (points.empty()) throw std::invalid_argument("n_point_gamma needs at least one point");
  std::vector<Complex> g(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) g[j] = field.gamma_at(points[j]);
  return mean_exponent(g);
}

}  // namespace scaleqm
