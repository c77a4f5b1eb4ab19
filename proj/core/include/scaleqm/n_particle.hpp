#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "scaleqm/grid.hpp"
#include "scaleqm/scaling_field.hpp"

namespace scaleqm {

inline constexpr std::size_t kMaxTensorPoints = std::size_t{1} << 20;
inline constexpr std::size_t kMaxTensorRank = 3;

class TensorSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Rank-n amplitudes (n = 1..3) on grid^n, row-major with the last axis fastest.
class Tensor {
 public:
  /// Throws TensorSizeError when n_points^rank exceeds kMaxTensorPoints.
  Tensor(Grid1D grid, std::size_t rank, Amplitudes values);
  static Tensor zeros(const Grid1D& grid, std::size_t rank);

  const Grid1D& grid() const { return grid_; }
  std::size_t rank() const { return rank_; }
  std::size_t axis_size() const { return grid_.size(); }
  const Amplitudes& values() const { return values_; }
  Amplitudes& values() { return values_; }

  std::size_t flat_index(std::span<const std::size_t> index) const;

 private:
  Grid1D grid_;
  std::size_t rank_;
  Amplitudes values_;
};

/// Multiplies by exp(mean_j gamma(z_j) - mean_j gamma(t_j)), one reference t_j
/// per axis. Rank 1 matches localize_packet and rank 2 matches localize_pair.
Tensor localize_n(const Tensor& amplitudes, const FieldSpec& field, std::span<const double> references);

/// out[i_perm[0], ..., i_perm[r-1]] = in[i_0, ..., i_{r-1}]: axis a of the
/// input becomes axis perm[a] of the output.
Tensor permute_axes(const Tensor& t, std::span<const std::size_t> perm);

}  // namespace scaleqm
