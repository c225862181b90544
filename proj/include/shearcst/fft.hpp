#pragma once

#include "shearcst/grid.hpp"

#include <span>

namespace shearcst::fft {

/// In-place unnormalised DFT of length data.size().
/// forward:  X_m = sum_k x_k exp(-2 pi i k m / n)
/// backward: x_k = sum_m X_m exp(+2 pi i k m / n)
/// Safe to call concurrently; plans are cached per length.
void forward(std::span<cplx> data);
void backward(std::span<cplx> data);

}  // namespace shearcst::fft
