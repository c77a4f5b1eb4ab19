#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace scaleqm {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

class OffGridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Periodic 1D grid z_j = origin + j*dz, j = 0..n-1, with n a power of two >= 8.
///
/// Momentum modes are stored in FFT order: slot m holds k = m for m < n/2 and
/// k = m - n otherwise, so p_k = 2*pi*hbar*k / L covers k in [-n/2, n/2).
class Grid1D {
 public:
  Grid1D(std::size_t n, double dz, double origin = 0.0);

  /// n points spanning [-length/2, length/2).
  static Grid1D centered(std::size_t n, double length);

  std::size_t size() const { return n_; }
  double spacing() const { return dz_; }
  double origin() const { return origin_; }
  double length() const { return static_cast<double>(n_) * dz_; }

  double coordinate(std::size_t j) const { return origin_ + static_cast<double>(j) * dz_; }
  std::vector<double> coordinates() const;

  /// Signed mode number of FFT slot m.
  long mode(std::size_t slot) const;
  double momentum(std::size_t slot, double hbar) const;

  /// Index of the node at z (within 1e-9 dz); throws OffGridError otherwise.
  std::size_t index_of(double z) const;
  bool contains(double z) const;

  friend bool operator==(const Grid1D&, const Grid1D&) = default;

 private:
  std::size_t n_;
  double dz_;
  double origin_;
};

struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;

  /// Throws std::invalid_argument unless both are finite and positive.
  void validate() const;
};

/// Pairwise (cascade) summation in a fixed order, so results do not depend on
/// how a caller might split the work.
double pairwise_sum(std::span<const double> values);
Complex pairwise_sum(std::span<const Complex> values);

/// sqrt(sum |a_j|^2 dz)
double l2_norm(std::span<const Complex> values, double dz);
double max_abs(std::span<const Complex> values);

}  // namespace scaleqm
