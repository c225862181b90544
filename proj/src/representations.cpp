#include "shearcst/representations.hpp"

#include "shearcst/errors.hpp"
#include "shearcst/kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace shearcst {

using std::numbers::pi;

namespace {

long grid_shift(double amount, double step, const char* what) {
  const double s = amount / step;
  const double r = std::round(s);
  if (std::abs(s - r) > 1e-9) {
    std::ostringstream msg;
    msg << what << " shift " << amount << " is not a multiple of the step " << step;
    throw Error(ErrorCode::OffGridShift, msg.str());
  }
  return static_cast<long>(r);
}

bool in_range(long i, std::size_t n) { return i >= 0 && i < static_cast<long>(n); }

}  // namespace

SampledLine apply_pi(const GroupElement& g, const SampledLine& f, const ModelParams& p) {
  f.validate();
  const long s = grid_shift(g.x1, f.grid.step, "x1");
  SampledLine out{f.grid, std::vector<cplx>(f.values.size()), f.measure};
  const std::size_t n = f.values.size();
  for (std::size_t k = 0; k < n; ++k) {
    const long src = static_cast<long>(k) - s;
    if (!in_range(src, n)) continue;
    const double y = f.grid.at(k);
    const double phase = 2.0 * pi * (p.h2 * g.x2 + p.hbar4 * (g.x4 - g.x3 * y + 0.5 * g.x2 * y * y));
    out.values[k] = std::polar(1.0, phase) * f.values[static_cast<std::size_t>(src)];
  }
  return out;
}

PhaseVolume apply_pi_tilde(const GroupElement& g, const PhaseVolume& F, const ModelParams& p) {
  const UniformGrid g1 = F.grid1(), g3 = F.grid3(), g2 = F.grid2();
  const long s1 = grid_shift(g.x1, g1.step, "x1");
  const long s2 = F.size() > 1 ? grid_shift(g.x2, g2.step, "x2") : grid_shift(g.x2, 1.0, "x2");
  if (F.size() == 1 && g.x2 != 0.0) throw Error(ErrorCode::OffGridShift, "x2 shift on a single-slice volume");
  PhaseVolume out = F;
  for (std::size_t k = 0; k < F.size(); ++k) {
    auto& dst = out[k];
    std::fill(dst.values.begin(), dst.values.end(), cplx{});
    const long src_k = static_cast<long>(k) - s2;
    const double x2 = dst.x2;
    const long s3 = grid_shift(g.x3 + g.x1 * x2 - g.x1 * g.x2, g3.step, "x3");
    if (!in_range(src_k, F.size())) continue;
    const auto& src = F[static_cast<std::size_t>(src_k)];
    const long n1 = static_cast<long>(g1.count);
#pragma omp parallel for schedule(static)
    for (long i1 = 0; i1 < n1; ++i1) {
      const long j1 = i1 - s1;
      if (!in_range(j1, g1.count)) continue;
      for (std::size_t i3 = 0; i3 < g3.count; ++i3) {
        const long j3 = static_cast<long>(i3) - s3;
        if (!in_range(j3, g3.count)) continue;
        const double x3 = g3.at(i3);
        const double phase = 2.0 * pi * p.hbar4 *
                             (g.x4 - g.x1 * g.x3 + 0.5 * g.x1 * g.x1 * g.x2 + g.x1 * x3 - 0.5 * g.x1 * g.x1 * x2);
        dst.at(static_cast<std::size_t>(i1), i3) =
            std::polar(1.0, phase) * src.at(static_cast<std::size_t>(j1), static_cast<std::size_t>(j3));
      }
    }
  }
  return out;
}

SampledLine derived_pi(const AlgebraVector& X, const SampledLine& f, const ModelParams& p) {
  f.validate();
  SampledLine out{f.grid, std::vector<cplx>(f.values.size()), f.measure};
  if (X[1] != 0.0) {
    check_boundary(f, "derived_pi");
    std::vector<cplx> d = f.values;
    kernels::spectral_derivative(d, 1, d.size(), Axis::x3, f.grid.step, 1);
    for (std::size_t k = 0; k < d.size(); ++k) out.values[k] -= X[1] * d[k];
  }
  const cplx i(0.0, 1.0);
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    const double y = f.grid.at(k);
    const cplx mult = X[2] * (2.0 * pi * i * p.h2 + i * pi * p.hbar4 * y * y) + X[3] * (-2.0 * pi * i * p.hbar4 * y) +
                      X[4] * (2.0 * pi * i * p.hbar4);
    out.values[k] += mult * f.values[k];
  }
  return out;
}

PhaseVolume derived_pi_tilde(const AlgebraVector& X, const PhaseVolume& F, const ModelParams& p,
                             const StencilOptions& opts) {
  const cplx i(0.0, 1.0);
  if (opts.in_plane == Differencing::spectral && (X[1] != 0.0 || X[3] != 0.0)) check_boundary(F, "derived_pi_tilde");
  PhaseVolume out = multiply_by(F, [&](double, double, double x3) {
    return X[1] * (2.0 * pi * i * p.hbar4 * x3) + X[4] * (2.0 * pi * i * p.hbar4);
  });
  if (X[1] != 0.0) {
    out -= cplx(X[1]) * partial(F, Axis::x1, 1, opts);
  }
  if (X[1] != 0.0 || X[3] != 0.0) {
    const PhaseVolume d3 = partial(F, Axis::x3, 1, opts);
    out -= multiply_by(d3, [&](double, double x2, double) { return cplx(X[1] * x2 + X[3]); });
  }
  if (X[2] != 0.0) out -= cplx(X[2]) * partial_x2(F, 1, opts);
  return out;
}

PhaseVolume lie_derivative(const AlgebraVector& X, const PhaseVolume& F, const ModelParams& p,
                           const StencilOptions& opts) {
  const cplx i(0.0, 1.0);
  if (opts.in_plane == Differencing::spectral && (X[1] != 0.0 || X[2] != 0.0 || X[3] != 0.0))
    check_boundary(F, "lie_derivative");
  PhaseVolume out = multiply_by(F, [&](double x1, double, double) {
    return X[2] * (-i * pi * p.hbar4 * x1 * x1) + X[3] * (-2.0 * pi * i * p.hbar4 * x1) + X[4] * (-2.0 * pi * i * p.hbar4);
  });
  if (X[1] != 0.0) out += cplx(X[1]) * partial(F, Axis::x1, 1, opts);
  if (X[2] != 0.0 || X[3] != 0.0) {
    const PhaseVolume d3 = partial(F, Axis::x3, 1, opts);
    out += multiply_by(d3, [&](double x1, double, double) { return cplx(X[2] * x1 + X[3]); });
  }
  if (X[2] != 0.0) out += cplx(X[2]) * partial_x2(F, 1, opts);
  return out;
}

}  // namespace shearcst
