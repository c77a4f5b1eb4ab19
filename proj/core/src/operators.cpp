#include "scaleqm/operators.hpp"

#include <stdexcept>

namespace scaleqm {

namespace {

void require_potential(const Grid1D& grid, std::span<const double> potential) {
  if (!potential.empty() && potential.size() != grid.size()) {
    throw std::invalid_argument("potential must have one value per grid point");
  }
}

Amplitudes difference(const Amplitudes& a, const Amplitudes& b) {
  Amplitudes d(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) d[j] = a[j] - b[j];
  return d;
}

}  // namespace

Amplitudes central_first_derivative(std::span<const Complex> values, double h) {
  const std::size_t n = values.size();
  if (n < 3) throw std::invalid_argument("central difference needs at least 3 points");
  Amplitudes out(n);
  const double inv2h = 1.0 / (2.0 * h);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = (values[(j + 1) % n] - values[(j + n - 1) % n]) * inv2h;
  }
  return out;
}

Amplitudes central_second_derivative(std::span<const Complex> values, double h) {
  const std::size_t n = values.size();
  if (n < 3) throw std::invalid_argument("central difference needs at least 3 points");
  Amplitudes out(n);
  const double invh2 = 1.0 / (h * h);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = (values[(j + 1) % n] - 2.0 * values[j] + values[(j + n - 1) % n]) * invh2;
  }
  return out;
}

WavePacket covariant_derivative(const WavePacket& psi, const FieldSpec& field) {
  const Grid1D& grid = psi.grid();
  Amplitudes d = central_first_derivative(psi.amplitudes(), grid.spacing());
  const ConnectionGradient gamma = field.gradient(grid);
  for (std::size_t j = 0; j < d.size(); ++j) d[j] += gamma.at(j) * psi[j];
  return WavePacket(grid, std::move(d));
}

WavePacket canonical_momentum_apply(const WavePacket& psi, const FieldSpec& field,
                                    const PhysicalConstants& constants) {
  constants.validate();
  Amplitudes d = covariant_derivative(psi, field).amplitudes();
  const Complex factor(0.0, -constants.hbar);
  for (auto& v : d) v *= factor;
  return WavePacket(psi.grid(), std::move(d));
}

WavePacket plain_momentum_apply(const WavePacket& psi, const PhysicalConstants& constants) {
  constants.validate();
  Amplitudes d = central_first_derivative(psi.amplitudes(), psi.grid().spacing());
  const Complex factor(0.0, -constants.hbar);
  for (auto& v : d) v *= factor;
  return WavePacket(psi.grid(), std::move(d));
}

WavePacket scaled_kinetic_apply(const WavePacket& psi, const FieldSpec& field,
                                const PhysicalConstants& constants) {
  constants.validate();
  const Grid1D& grid = psi.grid();
  const double h = grid.spacing();
  const Amplitudes d1 = central_first_derivative(psi.amplitudes(), h);
  const Amplitudes d2 = central_second_derivative(psi.amplitudes(), h);
  const ConnectionGradient gamma = field.gradient(grid);
  const ConnectionGradient dgamma = field.gradient_derivative(grid);
  const double prefactor = -constants.hbar * constants.hbar / (2.0 * constants.mass);

  Amplitudes out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const Complex G = gamma.at(j);
    const Complex connection_terms = dgamma.at(j) * psi[j] + 2.0 * G * d1[j] + G * G * psi[j];
    out[j] = prefactor * (d2[j] + connection_terms);
  }
  return WavePacket(grid, std::move(out));
}

WavePacket plain_kinetic_apply(const WavePacket& psi, const PhysicalConstants& constants) {
  constants.validate();
  const Grid1D& grid = psi.grid();
  const Amplitudes d2 = central_second_derivative(psi.amplitudes(), grid.spacing());
  const double prefactor = -constants.hbar * constants.hbar / (2.0 * constants.mass);
  Amplitudes out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) out[j] = prefactor * d2[j];
  return WavePacket(grid, std::move(out));
}

WavePacket hamiltonian_apply(const WavePacket& psi, const FieldSpec& field, std::span<const double> potential,
                             const PhysicalConstants& constants, HamiltonianForm form, HamiltonianTerms terms) {
  const Grid1D& grid = psi.grid();
  require_potential(grid, potential);
  Amplitudes out(grid.size(), Complex(0.0, 0.0));
  if (terms.kinetic) {
    out = (form == HamiltonianForm::scaled ? scaled_kinetic_apply(psi, field, constants)
                                           : plain_kinetic_apply(psi, constants))
              .amplitudes();
  }
  if (terms.potential && !potential.empty()) {
    for (std::size_t j = 0; j < grid.size(); ++j) out[j] += potential[j] * psi[j];
  }
  return WavePacket(grid, std::move(out));
}

double localization_commutes_check(const WavePacket& psi, const FieldSpec& field,
                                   std::span<const double> potential, double reference,
                                   const PhysicalConstants& constants, HamiltonianTerms terms) {
  const WavePacket h_psi = hamiltonian_apply(psi, field, potential, constants, HamiltonianForm::scaled, terms);
  const LocalizedPacket localized_h_psi = localize_packet(h_psi, field, reference);
  const LocalizedPacket localized_psi = localize_packet(psi, field, reference);
  const WavePacket h_localized =
      hamiltonian_apply(localized_psi.packet(), field, potential, constants, HamiltonianForm::unscaled, terms);

  const Amplitudes diff = difference(localized_h_psi.packet().amplitudes(), h_localized.amplitudes());
  return l2_norm(diff, psi.grid().spacing()) / psi.norm();
}

WavePacket multiply_by_g(const WavePacket& psi, const FieldSpec& field) {
  const Amplitudes gamma = field.gamma_on(psi.grid());
  Amplitudes out(psi.size());
  for (std::size_t j = 0; j < psi.size(); ++j) out[j] = std::exp(gamma[j]) * psi[j];
  return WavePacket(psi.grid(), std::move(out));
}

double intertwining_residual(const WavePacket& psi, const FieldSpec& field, std::span<const double> potential,
                             const PhysicalConstants& constants, HamiltonianTerms terms) {
  const WavePacket lhs =
      hamiltonian_apply(multiply_by_g(psi, field), field, potential, constants, HamiltonianForm::unscaled, terms);
  const WavePacket rhs =
      multiply_by_g(hamiltonian_apply(psi, field, potential, constants, HamiltonianForm::scaled, terms), field);
  return l2_norm(difference(lhs.amplitudes(), rhs.amplitudes()), psi.grid().spacing()) / psi.norm();
}

std::vector<double> harmonic_potential(const Grid1D& grid, double omega, double center,
                                       const PhysicalConstants& constants) {
  std::vector<double> v(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double u = grid.coordinate(j) - center;
    v[j] = 0.5 * constants.mass * omega * omega * u * u;
  }
  return v;
}

}  // namespace scaleqm
