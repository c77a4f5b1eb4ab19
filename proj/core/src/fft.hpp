#pragma once

#include <cstddef>
#include <span>

#include "scaleqm/grid.hpp"

namespace scaleqm::detail {

enum class FftSign { negative, positive };

/// Unnormalized in-place DFT: out[m] = sum_j exp(+-2 pi i j m / n) in[j].
void fft_1d(std::span<Complex> data, FftSign sign);

/// Same, over a row-major rows x cols array.
void fft_2d(std::span<Complex> data, std::size_t rows, std::size_t cols, FftSign sign);

}  // namespace scaleqm::detail
