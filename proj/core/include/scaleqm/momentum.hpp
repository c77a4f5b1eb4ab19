#pragma once

#include <cstddef>
#include <vector>

#include "scaleqm/grid.hpp"
#include "scaleqm/scaling_field.hpp"
#include "scaleqm/wave_packet.hpp"

namespace scaleqm {

/// psi_hat(p_k) for every lattice momentum, stored in FFT slot order.
struct MomentumAmplitudes {
  Grid1D grid;
  Amplitudes values;

  /// Amplitude at signed mode k in [-n/2, n/2).
  const Complex& at_mode(long k) const;
};

/// psi_hat(p_k) = dz * sum_j exp(-i p_k z_j / hbar) psi(z_j). The phase
/// p_k z / hbar = 2 pi k z / L does not depend on hbar.
MomentumAmplitudes to_momentum(const WavePacket& psi);

/// psi(z_j) = (1/L) sum_k exp(i p_k z_j / hbar) psi_hat(p_k).
WavePacket from_momentum(const MomentumAmplitudes& psi_hat);

/// K(d) = dz * sum_j exp(2 pi i d z_j / L) exp(gamma(z_j)) for every mode
/// difference d = p - q in [-(n-1), n-1].
class MomentumKernel {
 public:
  MomentumKernel(Grid1D grid, std::vector<Complex> values);

  const Grid1D& grid() const { return grid_; }
  /// Largest |d| stored, n - 1.
  long span() const { return static_cast<long>(grid_.size()) - 1; }
  const Complex& at(long d) const;
  const std::vector<Complex>& values() const { return values_; }

 private:
  Grid1D grid_;
  std::vector<Complex> values_;
};

/// Computed as L*delta(d) plus the transform of exp(gamma) - 1, so gamma = 0
/// yields L*delta with exact zeros off the diagonal.
MomentumKernel momentum_kernel(const FieldSpec& field, const Grid1D& grid);

/// L*delta(d) + gamma_hat(d): the kernel to first order in gamma.
MomentumKernel linearized_kernel(const FieldSpec& field, const Grid1D& grid);

/// phi_hat(k) = (exp(-gamma_ref) / L) sum_{k'} K(k' - k) psi_hat(k'), summed
/// directly (O(n^2)).
MomentumAmplitudes convolve_with_kernel(const MomentumKernel& kernel, const MomentumAmplitudes& psi_hat,
                                        Complex gamma_ref);

/// Momentum representation of psi_{g,x}: the transform of localize_packet.
MomentumAmplitudes localized_momentum_representation(const WavePacket& psi, const FieldSpec& field,
                                                     double reference);

namespace detail {
/// exp(gamma) - 1 without cancellation for small gamma.
Complex expm1_complex(Complex gamma);
}  // namespace detail

}  // namespace scaleqm
