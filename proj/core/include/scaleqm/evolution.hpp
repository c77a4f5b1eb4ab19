#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>

#include "scaleqm/grid.hpp"
#include "scaleqm/operators.hpp"
#include "scaleqm/scaling_field.hpp"
#include "scaleqm/wave_packet.hpp"

namespace scaleqm {

class LinearSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cyclic tridiagonal matrix: row j couples j-1, j, j+1 (indices mod n).
struct TridiagonalOperator {
  Amplitudes lower;  ///< coefficient of psi[j-1] in row j
  Amplitudes diag;
  Amplitudes upper;  ///< coefficient of psi[j+1] in row j

  std::size_t size() const { return diag.size(); }
  Amplitudes apply(std::span<const Complex> psi) const;
};

/// The matrix that hamiltonian_apply uses, row by row.
TridiagonalOperator assemble_hamiltonian(const Grid1D& grid, const FieldSpec& field,
                                         std::span<const double> potential, const PhysicalConstants& constants,
                                         HamiltonianForm form);

/// (1 + i dt H / 2 hbar) psi' = (1 - i dt H / 2 hbar) psi, factorized once.
class CrankNicolsonPropagator {
 public:
  CrankNicolsonPropagator(const TridiagonalOperator& hamiltonian, double dt, const PhysicalConstants& constants);
  ~CrankNicolsonPropagator();
  CrankNicolsonPropagator(CrankNicolsonPropagator&&) noexcept;
  CrankNicolsonPropagator& operator=(CrankNicolsonPropagator&&) noexcept;

  Amplitudes step(std::span<const Complex> psi) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct EvolutionOptions {
  double dt = 1e-3;
  std::size_t steps = 1;
  HamiltonianForm form = HamiltonianForm::scaled;
};

/// No normalization is applied between steps.
WavePacket evolve(const WavePacket& psi, const FieldSpec& field, std::span<const double> potential,
                  const PhysicalConstants& constants, const EvolutionOptions& options);

}  // namespace scaleqm
