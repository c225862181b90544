#include "shearcst/errors.hpp"
#include "shearcst/fft.hpp"
#include "shearcst/kernels.hpp"
#include "kernel_support.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace shearcst {

using std::numbers::pi;
using detail::check_cst;
using detail::check_shape;
using detail::spectral_symbol;

std::vector<double> finite_difference_weights(double x0, std::span<const double> nodes, int derivative_order) {
  const auto n = nodes.size();
  const auto mmax = static_cast<std::size_t>(derivative_order);
  if (n == 0 || mmax >= n) throw Error(ErrorCode::InvalidArgument, "stencil too short for derivative order");
  // c[j][k]: weight of node j for the k-th derivative.
  std::vector<std::vector<double>> c(n, std::vector<double>(mmax + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min(i, mmax);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k)
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = c[j][mmax];
  return w;
}


namespace kernels {

void spectral_derivative(std::span<cplx> data, std::size_t n1, std::size_t n3, Axis axis, double step, int order) {
  check_shape(data, n1, n3);
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "negative derivative order");
  if (order == 0) return;
  const std::size_t len = axis == Axis::x3 ? n3 : n1;
  const std::size_t lines = axis == Axis::x3 ? n1 : n3;
  const double length = static_cast<double>(len) * step;
  std::vector<cplx> symbol(len);
  for (std::size_t k = 0; k < len; ++k) symbol[k] = spectral_symbol(k, len, length, order) / static_cast<double>(len);

#pragma omp parallel
  {
    std::vector<cplx> buf(len);
#pragma omp for schedule(static)
    for (long li = 0; li < static_cast<long>(lines); ++li) {
      const auto l = static_cast<std::size_t>(li);
      if (axis == Axis::x3) {
        std::span<cplx> row = data.subspan(l * n3, n3);
        fft::forward(row);
        for (std::size_t k = 0; k < len; ++k) row[k] *= symbol[k];
        fft::backward(row);
      } else {
        for (std::size_t i = 0; i < len; ++i) buf[i] = data[i * n3 + l];
        fft::forward(buf);
        for (std::size_t k = 0; k < len; ++k) buf[k] *= symbol[k];
        fft::backward(buf);
        for (std::size_t i = 0; i < len; ++i) data[i * n3 + l] = buf[i];
      }
    }
  }
}

void central_derivative(std::span<cplx> data, std::size_t n1, std::size_t n3, Axis axis, double step, int order,
                        int accuracy) {
  check_shape(data, n1, n3);
  const std::size_t len = axis == Axis::x3 ? n3 : n1;
  const std::size_t lines = axis == Axis::x3 ? n1 : n3;
  if (accuracy < 1) throw Error(ErrorCode::InvalidArgument, "accuracy must be positive");
  auto npts = static_cast<std::size_t>(accuracy) + 1;
  if (npts % 2 == 0) ++npts;
  npts = std::min(len, npts);
  if (npts <= static_cast<std::size_t>(order)) throw Error(ErrorCode::InvalidArgument, "axis too short for stencil");

  // Weights per output position (edge windows differ, interior share one stencil).
  std::vector<std::size_t> start(len);
  std::vector<std::vector<double>> weights(len);
  std::vector<double> nodes(npts);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t half = npts / 2;
    std::size_t s = i >= half ? i - half : 0;
    if (s + npts > len) s = len - npts;
    start[i] = s;
    for (std::size_t j = 0; j < npts; ++j) nodes[j] = static_cast<double>(s + j) - static_cast<double>(i);
    weights[i] = finite_difference_weights(0.0, nodes, order);
    const double scale = std::pow(step, -order);
    for (auto& w : weights[i]) w *= scale;
  }

#pragma omp parallel
  {
    std::vector<cplx> in(len);
#pragma omp for schedule(static)
    for (long li = 0; li < static_cast<long>(lines); ++li) {
      const auto l = static_cast<std::size_t>(li);
      for (std::size_t i = 0; i < len; ++i) in[i] = axis == Axis::x3 ? data[l * n3 + i] : data[i * n3 + l];
      for (std::size_t i = 0; i < len; ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < npts; ++j) acc += weights[i][j] * in[start[i] + j];
        if (axis == Axis::x3)
          data[l * n3 + i] = acc;
        else
          data[i * n3 + l] = acc;
      }
    }
  }
}


void cst_slice(std::span<const cplx> f, std::span<const cplx> phi, const CstGeometry& geo, std::span<cplx> out) {
  const auto [n, o] = check_cst(phi, geo, true);
  if (f.size() != n || out.size() != n * n) throw Error(ErrorCode::GridMismatch, "cst array sizes");
  const double y0 = geo.y.origin, dy = geo.y.step, x30 = geo.x3.origin;
  std::vector<cplx> pre(n), post(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double y = geo.y.at(k);
    pre[k] = f[k] * std::polar(1.0, -pi * geo.hbar4 * geo.x2 * y * y + 2.0 * pi * geo.hbar4 * static_cast<double>(k) * dy * x30);
  }
  const cplx global = geo.weight * std::polar(1.0, -2.0 * pi * geo.h2 * geo.x2);
  for (std::size_t m = 0; m < n; ++m) post[m] = global * std::polar(1.0, 2.0 * pi * geo.hbar4 * y0 * geo.x3.at(m));

  const long nl = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long a = 0; a < nl; ++a) {
    std::span<cplx> row = out.subspan(static_cast<std::size_t>(a) * n, n);
    for (long k = 0; k < nl; ++k) {
      const long j = k - a + o;
      row[static_cast<std::size_t>(k)] =
          (j >= 0 && j < nl) ? pre[static_cast<std::size_t>(k)] * std::conj(phi[static_cast<std::size_t>(j)]) : cplx{};
    }
    fft::backward(row);
    for (std::size_t m = 0; m < n; ++m) row[m] *= post[m];
  }
}

void reconstruct(std::span<const cplx> slice, std::span<const cplx> phi, const CstGeometry& geo,
                 std::span<cplx> out) {
  const auto [n, o] = check_cst(phi, geo, true);
  if (slice.size() != n * n || out.size() != n) throw Error(ErrorCode::GridMismatch, "reconstruct array sizes");
  const double y0 = geo.y.origin, dx3 = geo.x3.step, x30 = geo.x3.origin;
  std::vector<cplx> pre(n);
  for (std::size_t m = 0; m < n; ++m) pre[m] = std::polar(1.0, -2.0 * pi * geo.hbar4 * static_cast<double>(m) * dx3 * y0);

  // rows[a, k] = sum_m F[a, m] exp(-2 pi i hbar4 x3_m y_k) without the k-only phase.
  std::vector<cplx> rows(n * n);
  const long nl = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long a = 0; a < nl; ++a) {
    std::span<cplx> row(rows.data() + static_cast<std::size_t>(a) * n, n);
    for (std::size_t m = 0; m < n; ++m) row[m] = slice[static_cast<std::size_t>(a) * n + m] * pre[m];
    fft::forward(row);
  }
  const double scale = geo.hbar4 * geo.y.step * dx3;
#pragma omp parallel for schedule(static)
  for (long k = 0; k < nl; ++k) {
    cplx acc = 0.0;
    for (long a = 0; a < nl; ++a) {
      const long j = k - a + o;
      if (j < 0 || j >= nl) continue;
      acc += phi[static_cast<std::size_t>(j)] * rows[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(k)];
    }
    const double y = geo.y.at(static_cast<std::size_t>(k));
    out[static_cast<std::size_t>(k)] =
        scale * acc * std::polar(1.0, 2.0 * pi * geo.h2 * geo.x2 + pi * geo.hbar4 * geo.x2 * y * y - 2.0 * pi * geo.hbar4 * x30 * y);
  }
}

}  // namespace kernels

}  // namespace shearcst
