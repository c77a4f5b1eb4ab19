#include "scaleqm/wave_packet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scaleqm {

WavePacket::WavePacket(Grid1D grid, Amplitudes amplitudes)
    : grid_(std::move(grid)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != grid_.size()) {
    throw std::invalid_argument("wave packet needs one amplitude per grid point");
  }
  for (const auto& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("wave packet amplitudes must be finite");
    }
  }
}

WavePacket WavePacket::gaussian(const Grid1D& grid, double center, double width, double k0) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian width must be positive");
  const double norm = std::pow(2.0 * std::numbers::pi * width * width, -0.25);
  Amplitudes a(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double z = grid.coordinate(j);
    const double u = z - center;
    a[j] = norm * std::exp(Complex(-u * u / (4.0 * width * width), k0 * z));
  }
  return WavePacket(grid, std::move(a));
}

double WavePacket::norm_squared() const {
  const double n = norm();
  return n * n;
}

double WavePacket::norm() const { return l2_norm(amplitudes_, grid_.spacing()); }

LocalizedPacket::LocalizedPacket(WavePacket packet, double reference, FieldSpec field)
    : packet_(std::move(packet)), reference_(reference), field_(std::move(field)) {
  (void)packet_.grid().index_of(reference_);
}

LocalizedPacket localize_packet(const WavePacket& psi, const FieldSpec& field, double reference) {
  const Grid1D& grid = psi.grid();
  const std::size_t xr = grid.index_of(reference);
  const Amplitudes gamma = field.gamma_on(grid);
  const Complex ref_mean = mean_exponent(std::span(&gamma[xr], 1));

  Amplitudes out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    out[j] = std::exp(mean_exponent(std::span(&gamma[j], 1)) - ref_mean) * psi[j];
  }
  return LocalizedPacket(WavePacket(grid, std::move(out)), grid.coordinate(xr),
                         field.lift_to_chart(grid.coordinate(xr)));
}

LocalizedPacket translate_reference(const LocalizedPacket& packet, double new_reference) {
  const Grid1D& grid = packet.packet().grid();
  const std::size_t xr = grid.index_of(packet.reference());
  const std::size_t wr = grid.index_of(new_reference);
  const Amplitudes gamma = packet.field().gamma_on(grid);
  const Complex factor = std::exp(gamma[xr] - gamma[wr]);

  Amplitudes out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) out[j] = factor * packet.packet()[j];
  return LocalizedPacket(WavePacket(grid, std::move(out)), grid.coordinate(wr),
                         packet.field().lift_to_chart(grid.coordinate(wr)));
}

}  // namespace scaleqm
