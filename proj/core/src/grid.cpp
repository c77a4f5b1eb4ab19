#include "scaleqm/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace scaleqm {

Grid1D::Grid1D(std::size_t n, double dz, double origin) : n_(n), dz_(dz), origin_(origin) {
  if (n < 8 || !std::has_single_bit(n)) {
    throw std::invalid_argument("grid size must be a power of two >= 8, got " + std::to_string(n));
  }
  if (!(dz > 0.0) || !std::isfinite(dz)) throw std::invalid_argument("grid spacing must be positive and finite");
  if (!std::isfinite(origin)) throw std::invalid_argument("grid origin must be finite");
}

Grid1D Grid1D::centered(std::size_t n, double length) {
  const double dz = length / static_cast<double>(n);
  return Grid1D(n, dz, -0.5 * length);
}

std::vector<double> Grid1D::coordinates() const {
  std::vector<double> z(n_);
  for (std::size_t j = 0; j < n_; ++j) z[j] = coordinate(j);
  return z;
}

long Grid1D::mode(std::size_t slot) const {
  const auto m = static_cast<long>(slot);
  const auto n = static_cast<long>(n_);
  return m < n / 2 ? m : m - n;
}

double Grid1D::momentum(std::size_t slot, double hbar) const {
  return 2.0 * std::numbers::pi * hbar * static_cast<double>(mode(slot)) / length();
}

std::size_t Grid1D::index_of(double z) const {
  const double position = (z - origin_) / dz_;
  const double nearest = std::round(position);
  if (!std::isfinite(position) || std::abs(position - nearest) > 1e-9 || nearest < 0.0 ||
      nearest >= static_cast<double>(n_)) {
    throw OffGridError("coordinate " + std::to_string(z) + " is not a grid node");
  }
  return static_cast<std::size_t>(nearest);
}

bool Grid1D::contains(double z) const {
  try {
    (void)index_of(z);
    return true;
  } catch (const OffGridError&) {
    return false;
  }
}

void PhysicalConstants::validate() const {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw std::invalid_argument("hbar must be positive and finite");
  if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("mass must be positive and finite");
}

namespace {

template <class T>
T cascade(std::span<const T> values) {
  if (values.size() <= 8) {
    T acc{};
    for (const auto& v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return cascade(values.first(half)) + cascade(values.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> values) { return cascade(values); }
Complex pairwise_sum(std::span<const Complex> values) { return cascade(values); }

double l2_norm(std::span<const Complex> values, double dz) {
  std::vector<double> sq(values.size());
  std::transform(values.begin(), values.end(), sq.begin(), [](const Complex& c) { return std::norm(c); });
  return std::sqrt(pairwise_sum(sq) * dz);
}

double max_abs(std::span<const Complex> values) {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace scaleqm
