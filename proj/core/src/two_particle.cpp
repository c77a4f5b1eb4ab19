#include "scaleqm/two_particle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"
#include "scaleqm/momentum.hpp"

namespace scaleqm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex origin_phase(const Grid1D& grid, long d) {
  return std::polar(1.0, kTwoPi * static_cast<double>(d) * grid.origin() / grid.length());
}

void require_same_grid(const WavePacket& a, const WavePacket& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("packets live on different grids");
}

Complex pair_exponent(const Amplitudes& gamma, std::size_t i, std::size_t j) {
  const Complex g[2] = {gamma[i], gamma[j]};
  return mean_exponent(g);
}

// One axis of the pair kinetic bracket [d^2 + G'/2 + G d + G^2/4] psi at a
// point with neighbours plus/minus along that axis.
Complex axis_kinetic(Complex centre, Complex plus, Complex minus, Complex G, Complex dG, double h) {
  const Complex second = (plus - 2.0 * centre + minus) / (h * h);
  const Complex first = (plus - minus) / (2.0 * h);
  return second + 0.5 * dG * centre + G * first + 0.25 * G * G * centre;
}

bool exactly_symmetric(std::span<const double> v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (v[i * n + j] != v[j * n + i]) return false;
    }
  }
  return true;
}

}  // namespace

const char* to_string(Statistics s) {
  switch (s) {
    case Statistics::fermion: return "fermion";
    case Statistics::boson: return "boson";
    case Statistics::none: break;
  }
  return "none";
}

TwoParticlePacket::TwoParticlePacket(Grid1D grid, Amplitudes amplitudes, Statistics statistics)
    : grid_(std::move(grid)), amplitudes_(std::move(amplitudes)), statistics_(statistics) {
  const std::size_t n = grid_.size();
  if (amplitudes_.size() != n * n) throw std::invalid_argument("pair packet needs n*n amplitudes");
  for (const auto& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("pair packet amplitudes must be finite");
    }
  }
  if (statistics_ == Statistics::none) return;
  const bool fermion = statistics_ == Statistics::fermion;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex a = amplitudes_[i * n + j];
      const Complex b = amplitudes_[j * n + i];
      if (fermion ? a != -b : a != b) {
        throw std::invalid_argument(std::string("amplitudes are not exactly ") +
                                    (fermion ? "antisymmetric" : "symmetric"));
      }
    }
  }
}

double TwoParticlePacket::norm_squared() const {
  std::vector<double> abs2(amplitudes_.size());
  for (std::size_t k = 0; k < abs2.size(); ++k) abs2[k] = std::norm(amplitudes_[k]);
  return pairwise_sum(abs2) * grid_.spacing() * grid_.spacing();
}

TwoParticlePacket product_state(const WavePacket& psi1, const WavePacket& psi2) {
  require_same_grid(psi1, psi2);
  const std::size_t n = psi1.size();
  Amplitudes out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = psi1[i] * psi2[j];
  }
  return TwoParticlePacket(psi1.grid(), std::move(out));
}

TwoParticlePacket slater_combine(const WavePacket& psi1, const WavePacket& psi2, Statistics statistics) {
  require_same_grid(psi1, psi2);
  if (statistics == Statistics::none) throw std::invalid_argument("slater_combine needs fermion or boson");
  const std::size_t n = psi1.size();
  const double s = 1.0 / std::sqrt(2.0);
  const bool fermion = statistics == Statistics::fermion;
  Amplitudes out(n * n);
  // Fill each unordered pair once so the (anti)symmetry holds bit for bit.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex a = psi1[i] * psi2[j];
      const Complex b = psi1[j] * psi2[i];
      if (fermion) {
        out[i * n + j] = (a - b) * s;
        out[j * n + i] = (b - a) * s;
      } else {
        out[i * n + j] = (a + b) * s;
        out[j * n + i] = (b + a) * s;
      }
    }
  }
  return TwoParticlePacket(psi1.grid(), std::move(out), statistics);
}

TwoParticlePacket localize_pair(const TwoParticlePacket& psi, const FieldSpec& field, const PairReference& ref) {
  const Grid1D& grid = psi.grid();
  const std::size_t n = grid.size();
  const std::size_t v = grid.index_of(ref.v);
  const std::size_t w = grid.index_of(ref.w);
  const Amplitudes gamma = field.gamma_on(grid);
  const Complex ref_exponent = pair_exponent(gamma, v, w);

  Amplitudes out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i * n + j] = std::exp(pair_exponent(gamma, i, j) - ref_exponent) * psi(i, j);
    }
  }
  return TwoParticlePacket(grid, std::move(out), psi.statistics());
}

TwoParticlePacket multiply_by_pair_g(const TwoParticlePacket& psi, const FieldSpec& field) {
  const Grid1D& grid = psi.grid();
  const std::size_t n = grid.size();
  const Amplitudes gamma = field.gamma_on(grid);
  Amplitudes out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = std::exp(pair_exponent(gamma, i, j)) * psi(i, j);
  }
  return TwoParticlePacket(grid, std::move(out), psi.statistics());
}

TwoParticlePacket pair_momentum_apply(const TwoParticlePacket& psi, const FieldSpec& field,
                                      const PhysicalConstants& constants) {
  constants.validate();
  const Grid1D& grid = psi.grid();
  const std::size_t n = grid.size();
  const double inv2h = 1.0 / (2.0 * grid.spacing());
  const ConnectionGradient gamma = field.gradient(grid);
  const Complex factor(0.0, -constants.hbar);

  Amplitudes out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ip = (i + 1) % n, im = (i + n - 1) % n;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t jp = (j + 1) % n, jm = (j + n - 1) % n;
      const Complex d1 = (psi(ip, j) - psi(im, j)) * inv2h;
      const Complex d2 = (psi(i, jp) - psi(i, jm)) * inv2h;
      const Complex half_gamma = (gamma.at(i) + gamma.at(j)) / 2.0;
      out[i * n + j] = factor * ((d1 + d2) + half_gamma * psi(i, j));
    }
  }
  return TwoParticlePacket(grid, std::move(out), psi.statistics());
}

TwoParticlePacket pair_hamiltonian_apply(const TwoParticlePacket& psi, const FieldSpec& field,
                                         std::span<const double> potential, const PhysicalConstants& constants,
                                         bool scaled) {
  constants.validate();
  const Grid1D& grid = psi.grid();
  const std::size_t n = grid.size();
  if (!potential.empty() && potential.size() != n * n) {
    throw std::invalid_argument("pair potential must be n x n");
  }
  const double h = grid.spacing();
  const double prefactor = -constants.hbar * constants.hbar / (2.0 * constants.mass);
  ConnectionGradient gamma{std::vector<double>(n), std::vector<double>(n)};
  ConnectionGradient dgamma = gamma;
  if (scaled) {
    gamma = field.gradient(grid);
    dgamma = field.gradient_derivative(grid);
  }

  Amplitudes out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ip = (i + 1) % n, im = (i + n - 1) % n;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t jp = (j + 1) % n, jm = (j + n - 1) % n;
      const Complex c = psi(i, j);
      const Complex k1 = axis_kinetic(c, psi(ip, j), psi(im, j), gamma.at(i), dgamma.at(i), h);
      const Complex k2 = axis_kinetic(c, psi(i, jp), psi(i, jm), gamma.at(j), dgamma.at(j), h);
      Complex value = prefactor * (k1 + k2);
      if (!potential.empty()) value += potential[i * n + j] * c;
      out[i * n + j] = value;
    }
  }
  const bool keeps = potential.empty() || exactly_symmetric(potential, n);
  return TwoParticlePacket(grid, std::move(out), keeps ? psi.statistics() : Statistics::none);
}

PairMomentumAmplitudes to_momentum_2d(const TwoParticlePacket& psi) {
  const Grid1D& grid = psi.grid();
  const std::size_t n = grid.size();
  Amplitudes data = psi.amplitudes();
  detail::fft_2d(data, n, n, detail::FftSign::negative);
  const double area = grid.spacing() * grid.spacing();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      data[a * n + b] *= area * std::conj(origin_phase(grid, grid.mode(a) + grid.mode(b)));
    }
  }
  return {grid, std::move(data)};
}

TwoParticlePacket from_momentum_2d(const PairMomentumAmplitudes& psi_hat, Statistics statistics) {
  const Grid1D& grid = psi_hat.grid;
  const std::size_t n = grid.size();
  if (psi_hat.values.size() != n * n) throw std::invalid_argument("pair momentum amplitudes do not match grid");
  Amplitudes data(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      data[a * n + b] = origin_phase(grid, grid.mode(a) + grid.mode(b)) * psi_hat.values[a * n + b];
    }
  }
  detail::fft_2d(data, n, n, detail::FftSign::positive);
  const double inv_area = 1.0 / (grid.length() * grid.length());
  for (auto& v : data) v *= inv_area;
  return TwoParticlePacket(grid, std::move(data), statistics);
}

PairKernel::PairKernel(Grid1D grid, std::vector<Complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  const std::size_t side = 2 * grid_.size() - 1;
  if (values_.size() != side * side) throw std::invalid_argument("pair kernel needs (2n - 1)^2 entries");
}

const Complex& PairKernel::at(long d1, long d2) const {
  const long s = span();
  if (d1 < -s || d1 > s || d2 < -s || d2 > s) throw std::out_of_range("pair kernel index out of range");
  const auto side = static_cast<std::size_t>(2 * s + 1);
  return values_[static_cast<std::size_t>(d1 + s) * side + static_cast<std::size_t>(d2 + s)];
}

PairKernel pair_kernel(const FieldSpec& field, const Grid1D& grid) {
  const std::size_t n = grid.size();
  const long ln = static_cast<long>(n);
  const Amplitudes gamma = field.gamma_on(grid);
  Amplitudes excess(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) excess[i * n + j] = detail::expm1_complex(pair_exponent(gamma, i, j));
  }
  detail::fft_2d(excess, n, n, detail::FftSign::positive);

  const double area = grid.spacing() * grid.spacing();
  const auto side = static_cast<std::size_t>(2 * ln - 1);
  std::vector<Complex> values(side * side);
  for (long d1 = -(ln - 1); d1 <= ln - 1; ++d1) {
    const auto s1 = static_cast<std::size_t>(((d1 % ln) + ln) % ln);
    for (long d2 = -(ln - 1); d2 <= ln - 1; ++d2) {
      const auto s2 = static_cast<std::size_t>(((d2 % ln) + ln) % ln);
      values[static_cast<std::size_t>(d1 + ln - 1) * side + static_cast<std::size_t>(d2 + ln - 1)] =
          area * origin_phase(grid, d1 + d2) * excess[s1 * n + s2];
    }
  }
  values[(n - 1) * side + (n - 1)] += grid.length() * grid.length();
  return PairKernel(grid, std::move(values));
}

PairMomentumAmplitudes convolve_pair(const PairKernel& kernel, const PairMomentumAmplitudes& psi_hat,
                                     Complex gamma_ref) {
  const Grid1D& grid = psi_hat.grid;
  if (!(kernel.grid() == grid)) throw std::invalid_argument("kernel and amplitudes live on different grids");
  const std::size_t n = grid.size();
  const Complex prefactor = std::exp(-gamma_ref) / (grid.length() * grid.length());

  Amplitudes out(n * n);
  Amplitudes terms(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const long k1 = grid.mode(a);
    for (std::size_t b = 0; b < n; ++b) {
      const long k2 = grid.mode(b);
      for (std::size_t ap = 0; ap < n; ++ap) {
        const long d1 = grid.mode(ap) - k1;
        for (std::size_t bp = 0; bp < n; ++bp) {
          terms[ap * n + bp] = kernel.at(d1, grid.mode(bp) - k2) * psi_hat.values[ap * n + bp];
        }
      }
      out[a * n + b] = prefactor * pairwise_sum(terms);
    }
  }
  return {grid, std::move(out)};
}

PairMomentumAmplitudes pair_momentum_representation(const TwoParticlePacket& psi, const FieldSpec& field,
                                                    const PairReference& ref) {
  return to_momentum_2d(localize_pair(psi, field, ref));
}

PairMarginals marginals(const TwoParticlePacket& psi) {
  const std::size_t n = psi.axis_size();
  const double dz = psi.grid().spacing();
  PairMarginals m{std::vector<double>(n), std::vector<double>(n)};
  std::vector<double> row(n), col(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = std::norm(psi(i, j));
      col[j] = std::norm(psi(j, i));
    }
    m.first[i] = pairwise_sum(row) * dz;
    m.second[i] = pairwise_sum(col) * dz;
  }
  return m;
}

}  // namespace scaleqm
