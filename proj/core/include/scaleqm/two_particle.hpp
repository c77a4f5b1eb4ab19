#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "scaleqm/grid.hpp"
#include "scaleqm/scaling_field.hpp"
#include "scaleqm/wave_packet.hpp"

namespace scaleqm {

enum class Statistics { none, fermion, boson };

const char* to_string(Statistics s);

/// psi(z, z') on grid x grid, row-major: index i*n + j holds (z_i, z'_j).
/// Fermion and boson packets are checked for exact (anti)symmetry on construction.
class TwoParticlePacket {
 public:
  TwoParticlePacket(Grid1D grid, Amplitudes amplitudes, Statistics statistics = Statistics::none);

  const Grid1D& grid() const { return grid_; }
  std::size_t axis_size() const { return grid_.size(); }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  Statistics statistics() const { return statistics_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return amplitudes_[i * grid_.size() + j]; }

  double norm_squared() const;

 private:
  Grid1D grid_;
  Amplitudes amplitudes_;
  Statistics statistics_;
};

/// Reference pair (v, w); both must be grid nodes.
struct PairReference {
  double v = 0.0;
  double w = 0.0;
};

TwoParticlePacket product_state(const WavePacket& psi1, const WavePacket& psi2);

/// (psi1(z) psi2(z') -+ psi1(z') psi2(z)) / sqrt(2); minus for fermions.
TwoParticlePacket slater_combine(const WavePacket& psi1, const WavePacket& psi2, Statistics statistics);

/// exp(gamma2(z, z') - gamma2(z_v, z_w)) psi(z, z') with gamma2 the pair mean.
TwoParticlePacket localize_pair(const TwoParticlePacket& psi, const FieldSpec& field, const PairReference& ref);

/// (p1 + p2) psi with p_j = -i hbar (d_j + Gamma(z_j) / 2).
TwoParticlePacket pair_momentum_apply(const TwoParticlePacket& psi, const FieldSpec& field,
                                      const PhysicalConstants& constants);

/// Sum of per-axis kinetic terms plus V2 pointwise. Scaled axes use
/// (-hbar^2/2m)[d^2 + Gamma'/2 + Gamma d + Gamma^2/4]; unscaled drop Gamma.
/// V2 is row-major n x n; empty means no potential. The result keeps the input
/// statistics only when V2 is exactly symmetric.
TwoParticlePacket pair_hamiltonian_apply(const TwoParticlePacket& psi, const FieldSpec& field,
                                         std::span<const double> potential, const PhysicalConstants& constants,
                                         bool scaled);

/// Pointwise multiplication by exp(gamma2(z, z')).
TwoParticlePacket multiply_by_pair_g(const TwoParticlePacket& psi, const FieldSpec& field);

/// Row-major (n x n) amplitudes over momentum mode pairs, both axes in FFT slot order.
struct PairMomentumAmplitudes {
  Grid1D grid;
  Amplitudes values;
};

/// dz^2 sum exp(-i (p z + q z') / hbar) psi(z, z').
PairMomentumAmplitudes to_momentum_2d(const TwoParticlePacket& psi);
TwoParticlePacket from_momentum_2d(const PairMomentumAmplitudes& psi_hat, Statistics statistics = Statistics::none);

/// K2(d1, d2) = dz^2 sum exp(2 pi i (d1 z + d2 z') / L) exp(gamma2(z, z')) for
/// |d1|, |d2| <= n - 1, stored row-major over (2n - 1)^2 entries.
class PairKernel {
 public:
  PairKernel(Grid1D grid, std::vector<Complex> values);

  const Grid1D& grid() const { return grid_; }
  long span() const { return static_cast<long>(grid_.size()) - 1; }
  const Complex& at(long d1, long d2) const;

 private:
  Grid1D grid_;
  std::vector<Complex> values_;
};

PairKernel pair_kernel(const FieldSpec& field, const Grid1D& grid);

/// phi_hat(k1, k2) = (exp(-gamma_ref) / L^2) sum K2(k1' - k1, k2' - k2) psi_hat(k1', k2').
PairMomentumAmplitudes convolve_pair(const PairKernel& kernel, const PairMomentumAmplitudes& psi_hat,
                                     Complex gamma_ref);

/// 2D transform of localize_pair(psi, field, ref).
PairMomentumAmplitudes pair_momentum_representation(const TwoParticlePacket& psi, const FieldSpec& field,
                                                    const PairReference& ref);

/// Marginal densities sum_z' |psi|^2 dz and sum_z |psi|^2 dz.
struct PairMarginals {
  std::vector<double> first;
  std::vector<double> second;
};
PairMarginals marginals(const TwoParticlePacket& psi);

}  // namespace scaleqm
