#pragma once

#include "shearcst/errors.hpp"
#include "shearcst/kernels.hpp"

#include <cmath>
#include <numbers>

namespace shearcst::detail {

using std::numbers::pi;

// Multiplier of the order-th derivative for DFT index k of an n-point periodic line.
inline cplx spectral_symbol(std::size_t k, std::size_t n, double length, int order) {
  if (n % 2 == 0 && k == n / 2) return 0.0;
  const double kk = k <= n / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
  const cplx ik(0.0, 2.0 * pi * kk / length);
  cplx r = 1.0;
  for (int i = 0; i < order; ++i) r *= ik;
  return r;
}

inline void check_shape(std::span<cplx> data, std::size_t n1, std::size_t n3) {
  if (data.size() != n1 * n3) throw Error(ErrorCode::InvalidArgument, "array shape mismatch");
}


struct CstLayout {
  std::size_t n;
  long offset;  // index of y = 0
};

inline CstLayout check_cst(std::span<const cplx> phi, const CstGeometry& geo, bool need_fft_grid) {
  const std::size_t n = geo.y.count;
  if (phi.size() != n) throw Error(ErrorCode::GridMismatch, "fiducial and state must share the y grid");
  const double o = -geo.y.origin / geo.y.step;
  if (std::abs(o - std::round(o)) > 1e-9)
    throw Error(ErrorCode::GridMismatch, "y grid must contain 0 for grid-exact x1 shifts");
  if (need_fft_grid) {
    const double expected = 1.0 / (geo.hbar4 * static_cast<double>(n) * geo.y.step);
    if (geo.x3.count != n || std::abs(geo.x3.step - expected) > 1e-12 * expected)
      throw Error(ErrorCode::GridMismatch, "x3 grid is not the hbar4-scaled dual of the y grid");
  }
  return {n, static_cast<long>(std::lround(o))};
}


}  // namespace shearcst::detail
