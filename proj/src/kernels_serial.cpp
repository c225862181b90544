#include "shearcst/kernels.hpp"
#include "kernel_support.hpp"

#include <cmath>
#include <numbers>

namespace shearcst {

using std::numbers::pi;
using detail::check_cst;
using detail::check_shape;
using detail::spectral_symbol;

namespace reference {

void spectral_derivative(std::span<cplx> data, std::size_t n1, std::size_t n3, Axis axis, double step, int order) {
  check_shape(data, n1, n3);
  if (order == 0) return;
  const std::size_t len = axis == Axis::x3 ? n3 : n1;
  const std::size_t lines = axis == Axis::x3 ? n1 : n3;
  const double length = static_cast<double>(len) * step;
  std::vector<cplx> in(len), coeff(len);
  for (std::size_t l = 0; l < lines; ++l) {
    for (std::size_t i = 0; i < len; ++i) in[i] = axis == Axis::x3 ? data[l * n3 + i] : data[i * n3 + l];
    for (std::size_t k = 0; k < len; ++k) {
      cplx acc = 0.0;
      for (std::size_t i = 0; i < len; ++i)
        acc += in[i] * std::polar(1.0, -2.0 * pi * static_cast<double>((i * k) % len) / static_cast<double>(len));
      coeff[k] = acc * spectral_symbol(k, len, length, order);
    }
    for (std::size_t i = 0; i < len; ++i) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < len; ++k)
        acc += coeff[k] * std::polar(1.0, 2.0 * pi * static_cast<double>((i * k) % len) / static_cast<double>(len));
      acc /= static_cast<double>(len);
      if (axis == Axis::x3)
        data[l * n3 + i] = acc;
      else
        data[i * n3 + l] = acc;
    }
  }
}

void cst_slice(std::span<const cplx> f, std::span<const cplx> phi, const CstGeometry& geo, std::span<cplx> out,
               std::size_t stride1, std::size_t stride3) {
  const auto [n, o] = check_cst(phi, geo, false);
  const std::size_t n3 = geo.x3.count;
  if (f.size() != n || out.size() != n * n3) throw Error(ErrorCode::GridMismatch, "cst array sizes");
  const long nl = static_cast<long>(n);
  for (std::size_t a = 0; a < n; a += stride1) {
    for (std::size_t m = 0; m < n3; m += stride3) {
      const double x3 = geo.x3.at(m);
      cplx acc = 0.0;
      for (long k = 0; k < nl; ++k) {
        const long j = k - static_cast<long>(a) + o;
        if (j < 0 || j >= nl) continue;
        const double y = geo.y.at(static_cast<std::size_t>(k));
        acc += f[static_cast<std::size_t>(k)] * std::conj(phi[static_cast<std::size_t>(j)]) *
               std::polar(1.0, -2.0 * pi * geo.hbar4 * (-x3 * y + 0.5 * geo.x2 * y * y));
      }
      out[a * n3 + m] = geo.weight * std::polar(1.0, -2.0 * pi * geo.h2 * geo.x2) * acc;
    }
  }
}

void reconstruct(std::span<const cplx> slice, std::span<const cplx> phi, const CstGeometry& geo,
                 std::span<cplx> out) {
  const auto [n, o] = check_cst(phi, geo, false);
  const std::size_t n3 = geo.x3.count;
  if (slice.size() != n * n3 || out.size() != n) throw Error(ErrorCode::GridMismatch, "reconstruct array sizes");
  const long nl = static_cast<long>(n);
  for (long k = 0; k < nl; ++k) {
    const double y = geo.y.at(static_cast<std::size_t>(k));
    cplx acc = 0.0;
    for (long a = 0; a < nl; ++a) {
      const long j = k - a + o;
      if (j < 0 || j >= nl) continue;
      cplx inner = 0.0;
      for (std::size_t m = 0; m < n3; ++m)
        inner += slice[static_cast<std::size_t>(a) * n3 + m] * std::polar(1.0, -2.0 * pi * geo.hbar4 * geo.x3.at(m) * y);
      acc += phi[static_cast<std::size_t>(j)] * inner;
    }
    out[static_cast<std::size_t>(k)] = geo.hbar4 * geo.y.step * geo.x3.step * acc *
                                       std::polar(1.0, 2.0 * pi * geo.h2 * geo.x2 + pi * geo.hbar4 * geo.x2 * y * y);
  }
}

}  // namespace reference

}  // namespace shearcst
