#include "scaleqm/evolution.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <cmath>
#include <vector>

namespace scaleqm {

Amplitudes TridiagonalOperator::apply(std::span<const Complex> psi) const {
  const std::size_t n = size();
  if (psi.size() != n) throw std::invalid_argument("operator and vector sizes differ");
  Amplitudes out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = lower[j] * psi[(j + n - 1) % n] + diag[j] * psi[j] + upper[j] * psi[(j + 1) % n];
  }
  return out;
}

TridiagonalOperator assemble_hamiltonian(const Grid1D& grid, const FieldSpec& field,
                                         std::span<const double> potential, const PhysicalConstants& constants,
                                         HamiltonianForm form) {
  constants.validate();
  if (!potential.empty() && potential.size() != grid.size()) {
    throw std::invalid_argument("potential must have one value per grid point");
  }
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  const double prefactor = -constants.hbar * constants.hbar / (2.0 * constants.mass);

  TridiagonalOperator H{Amplitudes(n), Amplitudes(n), Amplitudes(n)};
  const bool scaled = form == HamiltonianForm::scaled;
  const ConnectionGradient gamma = scaled ? field.gradient(grid) : ConnectionGradient{};
  const ConnectionGradient dgamma = scaled ? field.gradient_derivative(grid) : ConnectionGradient{};

  for (std::size_t j = 0; j < n; ++j) {
    const Complex G = scaled ? gamma.at(j) : Complex(0.0);
    const Complex dG = scaled ? dgamma.at(j) : Complex(0.0);
    H.lower[j] = prefactor * (1.0 / (h * h) - G / h);
    H.upper[j] = prefactor * (1.0 / (h * h) + G / h);
    H.diag[j] = prefactor * (-2.0 / (h * h) + dG + G * G);
    if (!potential.empty()) H.diag[j] += potential[j];
  }
  return H;
}

struct CrankNicolsonPropagator::Impl {
  using Matrix = Eigen::SparseMatrix<Complex>;

  TridiagonalOperator explicit_half;
  Eigen::SparseLU<Matrix> solver;
};

CrankNicolsonPropagator::CrankNicolsonPropagator(const TridiagonalOperator& hamiltonian, double dt,
                                                 const PhysicalConstants& constants)
    : impl_(std::make_unique<Impl>()) {
  constants.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive");
  const std::size_t n = hamiltonian.size();
  if (n < 3) throw std::invalid_argument("propagator needs at least 3 points");

  const Complex a(0.0, dt / (2.0 * constants.hbar));
  TridiagonalOperator implicit_half{Amplitudes(n), Amplitudes(n), Amplitudes(n)};
  impl_->explicit_half = implicit_half;
  for (std::size_t j = 0; j < n; ++j) {
    implicit_half.lower[j] = a * hamiltonian.lower[j];
    implicit_half.diag[j] = 1.0 + a * hamiltonian.diag[j];
    implicit_half.upper[j] = a * hamiltonian.upper[j];
    impl_->explicit_half.lower[j] = -a * hamiltonian.lower[j];
    impl_->explicit_half.diag[j] = 1.0 - a * hamiltonian.diag[j];
    impl_->explicit_half.upper[j] = -a * hamiltonian.upper[j];
  }

  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(3 * n);
  const auto idx = [](std::size_t k) { return static_cast<Eigen::Index>(k); };
  for (std::size_t j = 0; j < n; ++j) {
    entries.emplace_back(idx(j), idx((j + n - 1) % n), implicit_half.lower[j]);
    entries.emplace_back(idx(j), idx(j), implicit_half.diag[j]);
    entries.emplace_back(idx(j), idx((j + 1) % n), implicit_half.upper[j]);
  }
  Impl::Matrix m(idx(n), idx(n));
  m.setFromTriplets(entries.begin(), entries.end());
  m.makeCompressed();

  impl_->solver.analyzePattern(m);
  impl_->solver.factorize(m);
  if (impl_->solver.info() != Eigen::Success) {
    throw LinearSolveError("Crank-Nicolson factorization failed: " + impl_->solver.lastErrorMessage());
  }
}

CrankNicolsonPropagator::~CrankNicolsonPropagator() = default;
CrankNicolsonPropagator::CrankNicolsonPropagator(CrankNicolsonPropagator&&) noexcept = default;
CrankNicolsonPropagator& CrankNicolsonPropagator::operator=(CrankNicolsonPropagator&&) noexcept = default;

Amplitudes CrankNicolsonPropagator::step(std::span<const Complex> psi) const {
  const Amplitudes rhs = impl_->explicit_half.apply(psi);
  const Eigen::Map<const Eigen::VectorXcd> b(rhs.data(), static_cast<Eigen::Index>(rhs.size()));
  const Eigen::VectorXcd x = impl_->solver.solve(b);
  if (impl_->solver.info() != Eigen::Success) throw LinearSolveError("Crank-Nicolson solve failed");
  Amplitudes out(x.data(), x.data() + x.size());
  for (const auto& v : out) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw LinearSolveError("Crank-Nicolson step produced non-finite amplitudes");
    }
  }
  return out;
}

WavePacket evolve(const WavePacket& psi, const FieldSpec& field, std::span<const double> potential,
                  const PhysicalConstants& constants, const EvolutionOptions& options) {
  const TridiagonalOperator H = assemble_hamiltonian(psi.grid(), field, potential, constants, options.form);
  const CrankNicolsonPropagator propagator(H, options.dt, constants);
  Amplitudes state = psi.amplitudes();
  for (std::size_t s = 0; s < options.steps; ++s) state = propagator.step(state);
  return WavePacket(psi.grid(), std::move(state));
}

}  // namespace scaleqm
