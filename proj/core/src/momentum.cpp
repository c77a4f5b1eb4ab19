#include "scaleqm/momentum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"

namespace scaleqm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t slot_of(const Grid1D& grid, long k) {
  const long n = static_cast<long>(grid.size());
  if (k < -n / 2 || k >= n / 2) throw std::out_of_range("momentum mode outside [-n/2, n/2)");
  return static_cast<std::size_t>(k < 0 ? k + n : k);
}

// exp(2 pi i d origin / L)
Complex origin_phase(const Grid1D& grid, long d) {
  return std::polar(1.0, kTwoPi * static_cast<double>(d) * grid.origin() / grid.length());
}

// dz * sum_j exp(2 pi i d z_j / L) f_j for |d| < n, given the unnormalized
// positive-sign FFT of f.
std::vector<Complex> kernel_from_transform(const Grid1D& grid, const Amplitudes& transformed) {
  const long n = static_cast<long>(grid.size());
  std::vector<Complex> out(static_cast<std::size_t>(2 * n - 1));
  for (long d = -(n - 1); d <= n - 1; ++d) {
    const auto slot = static_cast<std::size_t>(((d % n) + n) % n);
    out[static_cast<std::size_t>(d + n - 1)] = grid.spacing() * origin_phase(grid, d) * transformed[slot];
  }
  return out;
}

}  // namespace

const Complex& MomentumAmplitudes::at_mode(long k) const { return values.at(slot_of(grid, k)); }

MomentumAmplitudes to_momentum(const WavePacket& psi) {
  const Grid1D& grid = psi.grid();
  Amplitudes data = psi.amplitudes();
  detail::fft_1d(data, detail::FftSign::negative);
  for (std::size_t m = 0; m < grid.size(); ++m) {
    data[m] *= grid.spacing() * std::conj(origin_phase(grid, grid.mode(m)));
  }
  return {grid, std::move(data)};
}

WavePacket from_momentum(const MomentumAmplitudes& psi_hat) {
  const Grid1D& grid = psi_hat.grid;
  if (psi_hat.values.size() != grid.size()) throw std::invalid_argument("momentum amplitudes do not match grid");
  Amplitudes data(grid.size());
  for (std::size_t m = 0; m < grid.size(); ++m) data[m] = origin_phase(grid, grid.mode(m)) * psi_hat.values[m];
  detail::fft_1d(data, detail::FftSign::positive);
  const double inv_length = 1.0 / grid.length();
  for (auto& v : data) v *= inv_length;
  return WavePacket(grid, std::move(data));
}

MomentumKernel::MomentumKernel(Grid1D grid, std::vector<Complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != 2 * grid_.size() - 1) throw std::invalid_argument("kernel needs 2n - 1 entries");
}

const Complex& MomentumKernel::at(long d) const {
  if (d < -span() || d > span()) throw std::out_of_range("kernel index outside [-(n-1), n-1]");
  return values_[static_cast<std::size_t>(d + span())];
}

Complex detail::expm1_complex(Complex gamma) {
  const double a = gamma.real();
  const double b = gamma.imag();
  const double s = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b)};
}

MomentumKernel momentum_kernel(const FieldSpec& field, const Grid1D& grid) {
  Amplitudes excess = field.gamma_on(grid);
  for (auto& g : excess) g = detail::expm1_complex(g);
  detail::fft_1d(excess, detail::FftSign::positive);
  std::vector<Complex> values = kernel_from_transform(grid, excess);
  values[grid.size() - 1] += grid.length();
  return MomentumKernel(grid, std::move(values));
}

MomentumKernel linearized_kernel(const FieldSpec& field, const Grid1D& grid) {
  Amplitudes gamma = field.gamma_on(grid);
  detail::fft_1d(gamma, detail::FftSign::positive);
  std::vector<Complex> values = kernel_from_transform(grid, gamma);
  values[grid.size() - 1] += grid.length();
  return MomentumKernel(grid, std::move(values));
}

MomentumAmplitudes convolve_with_kernel(const MomentumKernel& kernel, const MomentumAmplitudes& psi_hat,
                                        Complex gamma_ref) {
  const Grid1D& grid = psi_hat.grid;
  if (!(kernel.grid() == grid)) throw std::invalid_argument("kernel and amplitudes live on different grids");
  const std::size_t n = grid.size();
  const Complex prefactor = std::exp(-gamma_ref) / grid.length();

  Amplitudes out(n);
  Amplitudes terms(n);
  for (std::size_t m = 0; m < n; ++m) {
    const long k = grid.mode(m);
    for (std::size_t mp = 0; mp < n; ++mp) terms[mp] = kernel.at(grid.mode(mp) - k) * psi_hat.values[mp];
    out[m] = prefactor * pairwise_sum(terms);
  }
  return {grid, std::move(out)};
}

MomentumAmplitudes localized_momentum_representation(const WavePacket& psi, const FieldSpec& field,
                                                     double reference) {
  return to_momentum(localize_packet(psi, field, reference).packet());
}

}  // namespace scaleqm
