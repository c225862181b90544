#include "shearcst/stencil.hpp"

#include "shearcst/diagnostics.hpp"
#include "shearcst/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace shearcst {

PhaseSlice partial(const PhaseSlice& s, Axis axis, int order, const StencilOptions& opts) {
  PhaseSlice out = s;
  const double step = axis == Axis::x1 ? s.grid1.step : s.grid3.step;
  if (opts.in_plane == Differencing::spectral)
    kernels::spectral_derivative(out.values, s.n1(), s.n3(), axis, step, order);
  else
    kernels::central_derivative(out.values, s.n1(), s.n3(), axis, step, order, opts.accuracy);
  return out;
}

PhaseVolume partial(const PhaseVolume& v, Axis axis, int order, const StencilOptions& opts) {
  std::vector<PhaseSlice> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = partial(v[k], axis, order, opts);
  return PhaseVolume(std::move(out));
}

std::size_t slices_required(const StencilOptions& opts) {
  auto n = static_cast<std::size_t>(std::max(opts.x2_accuracy, 1)) + 1;
  if (n % 2 == 0) ++n;
  return n;
}

PhaseVolume partial_x2(const PhaseVolume& v, int order, const StencilOptions& opts) {
  const std::size_t npts = slices_required(opts);
  if (v.size() < npts || npts <= static_cast<std::size_t>(order)) {
    std::ostringstream msg;
    msg << "x2 derivative needs " << npts << " slices, volume has " << v.size();
    throw Error(ErrorCode::InsufficientSlices, msg.str());
  }
  const UniformGrid g2 = v.grid2();
  const std::size_t n = v.size();
  PhaseVolume out = v;
  for (std::size_t k = 0; k < n; ++k) std::fill(out[k].values.begin(), out[k].values.end(), cplx{});
  std::vector<double> nodes(npts);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t s = k >= npts / 2 ? k - npts / 2 : 0;
    if (s + npts > n) s = n - npts;
    for (std::size_t j = 0; j < npts; ++j) nodes[j] = static_cast<double>(s + j) - static_cast<double>(k);
    auto w = finite_difference_weights(0.0, nodes, order);
    const double scale = std::pow(g2.step, -order);
    auto& dst = out[k].values;
    for (std::size_t j = 0; j < npts; ++j) {
      const double wj = w[j] * scale;
      if (wj == 0.0) continue;
      const auto& src = v[s + j].values;
      const long len = static_cast<long>(dst.size());
#pragma omp parallel for schedule(static)
      for (long i = 0; i < len; ++i) dst[static_cast<std::size_t>(i)] += wj * src[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

double boundary_ratio(const PhaseSlice& s) {
  const double peak = max_abs(s.values);
  if (peak == 0.0) return 0.0;
  double edge = 0.0;
  const std::size_t n1 = s.n1(), n3 = s.n3();
  for (std::size_t i = 0; i < n1; ++i) edge = std::max({edge, std::abs(s.at(i, 0)), std::abs(s.at(i, n3 - 1))});
  for (std::size_t j = 0; j < n3; ++j) edge = std::max({edge, std::abs(s.at(0, j)), std::abs(s.at(n1 - 1, j))});
  return edge / peak;
}

double boundary_ratio(const SampledLine& f) {
  const double peak = max_abs(f.values);
  if (peak == 0.0 || f.values.empty()) return 0.0;
  return std::max(std::abs(f.values.front()), std::abs(f.values.back())) / peak;
}

void check_boundary(const PhaseVolume& v, const char* where, double threshold) {
  double worst = 0.0;
  for (const auto& s : v.slices()) worst = std::max(worst, boundary_ratio(s));
  if (worst > threshold) {
    std::ostringstream msg;
    msg << where << ": boundary mass " << worst << " of peak exceeds " << threshold;
    warn(msg.str());
  }
}

void check_boundary(const SampledLine& f, const char* where, double threshold) {
  const double r = boundary_ratio(f);
  if (r > threshold) {
    std::ostringstream msg;
    msg << where << ": boundary mass " << r << " of peak exceeds " << threshold;
    warn(msg.str());
  }
}

}  // namespace shearcst
