#include "scaleqm/n_particle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace scaleqm {

namespace {

std::size_t checked_volume(std::size_t side, std::size_t rank) {
  if (rank == 0 || rank > kMaxTensorRank) throw std::invalid_argument("tensor rank must be 1, 2 or 3");
  std::size_t total = 1;
  for (std::size_t r = 0; r < rank; ++r) {
    if (total > kMaxTensorPoints / side) {
      throw TensorSizeError("tensor of " + std::to_string(side) + "^" + std::to_string(rank) +
                            " points exceeds the limit of " + std::to_string(kMaxTensorPoints));
    }
    total *= side;
  }
  return total;
}

}  // namespace

Tensor::Tensor(Grid1D grid, std::size_t rank, Amplitudes values)
    : grid_(std::move(grid)), rank_(rank), values_(std::move(values)) {
  if (values_.size() != checked_volume(grid_.size(), rank_)) {
    throw std::invalid_argument("tensor values do not match grid^rank");
  }
}

Tensor Tensor::zeros(const Grid1D& grid, std::size_t rank) {
  return Tensor(grid, rank, Amplitudes(checked_volume(grid.size(), rank)));
}

std::size_t Tensor::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != rank_) throw std::invalid_argument("index rank mismatch");
  std::size_t flat = 0;
  for (std::size_t a = 0; a < rank_; ++a) {
    if (index[a] >= grid_.size()) throw std::out_of_range("tensor index out of range");
    flat = flat * grid_.size() + index[a];
  }
  return flat;
}

Tensor localize_n(const Tensor& amplitudes, const FieldSpec& field, std::span<const double> references) {
  const std::size_t rank = amplitudes.rank();
  if (references.size() != rank) throw std::invalid_argument("need one reference per particle");
  const Grid1D& grid = amplitudes.grid();
  const std::size_t n = grid.size();
  const Amplitudes gamma = field.gamma_on(grid);

  std::array<Complex, kMaxTensorRank> buffer{};
  for (std::size_t a = 0; a < rank; ++a) buffer[a] = gamma[grid.index_of(references[a])];
  const Complex ref_exponent = mean_exponent(std::span(buffer.data(), rank));

  Amplitudes out(amplitudes.values().size());
  std::array<std::size_t, kMaxTensorRank> idx{};
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    std::size_t rest = flat;
    for (std::size_t a = rank; a-- > 0;) {
      idx[a] = rest % n;
      rest /= n;
    }
    for (std::size_t a = 0; a < rank; ++a) buffer[a] = gamma[idx[a]];
    out[flat] = std::exp(mean_exponent(std::span(buffer.data(), rank)) - ref_exponent) * amplitudes.values()[flat];
  }
  return Tensor(grid, rank, std::move(out));
}

Tensor permute_axes(const Tensor& t, std::span<const std::size_t> perm) {
  const std::size_t rank = t.rank();
  if (perm.size() != rank) throw std::invalid_argument("permutation rank mismatch");
  std::array<bool, kMaxTensorRank> seen{};
  for (std::size_t p : perm) {
    if (p >= rank || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  const std::size_t n = t.axis_size();
  Tensor out = Tensor::zeros(t.grid(), rank);
  std::array<std::size_t, kMaxTensorRank> in_idx{};
  std::array<std::size_t, kMaxTensorRank> out_idx{};
  for (std::size_t flat = 0; flat < t.values().size(); ++flat) {
    std::size_t rest = flat;
    for (std::size_t a = rank; a-- > 0;) {
      in_idx[a] = rest % n;
      rest /= n;
    }
    for (std::size_t a = 0; a < rank; ++a) out_idx[perm[a]] = in_idx[a];
    out.values()[out.flat_index(std::span(out_idx.data(), rank))] = t.values()[flat];
  }
  return out;
}

}  // namespace scaleqm
