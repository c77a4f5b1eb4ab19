#pragma once

#include <span>
#include <vector>

#include "scaleqm/grid.hpp"
#include "scaleqm/scaling_field.hpp"
#include "scaleqm/wave_packet.hpp"

namespace scaleqm {

/// Periodic central differences, second order.
Amplitudes central_first_derivative(std::span<const Complex> values, double h);
Amplitudes central_second_derivative(std::span<const Complex> values, double h);

/// D psi = d psi + Gamma psi.
WavePacket covariant_derivative(const WavePacket& psi, const FieldSpec& field);

/// Canonical momentum in the fiber: -i hbar (d + Gamma) psi.
WavePacket canonical_momentum_apply(const WavePacket& psi, const FieldSpec& field,
                                    const PhysicalConstants& constants);

/// Plain fiber momentum -i hbar d psi.
WavePacket plain_momentum_apply(const WavePacket& psi, const PhysicalConstants& constants);

/// Scaled kinetic energy (-hbar^2 / 2m) [d^2 + (d Gamma) + 2 Gamma d + Gamma^2] psi.
/// The (d Gamma) term carries the commutator of p with Gamma.
WavePacket scaled_kinetic_apply(const WavePacket& psi, const FieldSpec& field,
                                const PhysicalConstants& constants);

/// Unscaled kinetic energy (-hbar^2 / 2m) d^2 psi.
WavePacket plain_kinetic_apply(const WavePacket& psi, const PhysicalConstants& constants);

enum class HamiltonianForm {
  scaled,   ///< kinetic with Gamma terms
  unscaled  ///< Gamma dropped
};

struct HamiltonianTerms {
  bool kinetic = true;
  bool potential = true;
};

/// H psi = K psi + V psi with V acting pointwise. V must have one entry per
/// grid point; an empty V means no potential.
WavePacket hamiltonian_apply(const WavePacket& psi, const FieldSpec& field, std::span<const double> potential,
                             const PhysicalConstants& constants, HamiltonianForm form,
                             HamiltonianTerms terms = {});

/// ||loc_x(H_scaled psi) - H_unscaled(loc_x psi)|| / ||psi||: how far applying
/// the Hamiltonian fails to commute with localization at reference x.
double localization_commutes_check(const WavePacket& psi, const FieldSpec& field,
                                   std::span<const double> potential, double reference,
                                   const PhysicalConstants& constants, HamiltonianTerms terms = {});

/// ||H_unscaled(e^gamma psi) - e^gamma H_scaled(psi)|| / ||psi||.
double intertwining_residual(const WavePacket& psi, const FieldSpec& field, std::span<const double> potential,
                             const PhysicalConstants& constants, HamiltonianTerms terms = {});

/// Pointwise multiplication by exp(gamma(z)).
WavePacket multiply_by_g(const WavePacket& psi, const FieldSpec& field);

/// V(z) = m omega^2 (z - center)^2 / 2 on the grid.
std::vector<double> harmonic_potential(const Grid1D& grid, double omega, double center,
                                       const PhysicalConstants& constants);

}  // namespace scaleqm
