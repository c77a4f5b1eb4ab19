#pragma once

#include <span>

#include "scaleqm/grid.hpp"
#include "scaleqm/scaling_field.hpp"

namespace scaleqm {

/// Complex amplitudes on a Grid1D. Norms are computed on demand and never
/// restored; scaled operators are not unitary.
class WavePacket {
 public:
  WavePacket(Grid1D grid, Amplitudes amplitudes);

  /// (2 pi s^2)^(-1/4) exp(-(z - z0)^2 / (4 s^2) + i k0 z): unit norm on the real line.
  static WavePacket gaussian(const Grid1D& grid, double center, double width, double k0 = 0.0);

  const Grid1D& grid() const { return grid_; }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  std::size_t size() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t j) const { return amplitudes_[j]; }

  double norm_squared() const;
  double norm() const;

 private:
  Grid1D grid_;
  Amplitudes amplitudes_;
};

/// psi_{g,x}: a packet expressed in the fiber at reference point x.
class LocalizedPacket {
 public:
  LocalizedPacket(WavePacket packet, double reference, FieldSpec field);

  const WavePacket& packet() const { return packet_; }
  double reference() const { return reference_; }
  const FieldSpec& field() const { return field_; }

 private:
  WavePacket packet_;
  double reference_;
  FieldSpec field_;
};

/// psi_{g,x}(z) = exp(gamma(z) - gamma(z_x)) psi(z).
LocalizedPacket localize_packet(const WavePacket& psi, const FieldSpec& field, double reference);

/// Moves the description from fiber x to fiber w: multiplies by
/// exp(gamma(z_x) - gamma(z_w)). The support of the packet does not move.
LocalizedPacket translate_reference(const LocalizedPacket& packet, double new_reference);

}  // namespace scaleqm
