#include "shearcst/cst.hpp"

#include "shearcst/diagnostics.hpp"
#include "shearcst/errors.hpp"
#include "shearcst/kernels.hpp"
#include "shearcst/stencil.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace shearcst {

using std::numbers::pi;

void FiducialSpec::validate(const ModelParams& p) const {
  p.validate();
  if (!(E > 0.0) || !std::isfinite(E)) throw Error(ErrorCode::InvalidArgument, "fiducial squeeze E must be positive");
  if (!std::isfinite(a)) throw Error(ErrorCode::InvalidArgument, "fiducial parameter a must be finite");
  if (kind == FiducialKind::gaussian && a != 0.0)
    throw Error(ErrorCode::InvalidArgument, "gaussian fiducial has a = 0");
}

SampledLine make_fiducial(const FiducialSpec& spec, const UniformGrid& grid, const ModelParams& p) {
  spec.validate(p);
  grid.validate();
  const double scale = spec.normalization == Measure::dimensionless ? p.h2 : p.hbar4;
  if (!(scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "dimensionless normalisation requires h2 > 0");
  const double c = std::pow(2.0 * scale * spec.E, 0.25);
  const double a = spec.kind == FiducialKind::generic ? spec.a : 0.0;
  SampledLine phi = SampledLine::sample(
      grid,
      [&](double y) {
        const double phase = pi * a * p.hbar4 / 3.0 * y * y * y + 2.0 * pi * a * p.h2 * y;
        return c * std::polar(std::exp(-pi * spec.E * p.hbar4 * y * y), phase);
      },
      spec.normalization);
  const double ratio = boundary_ratio(phi);
  if (ratio > 1e-12) {
    std::ostringstream msg;
    msg << "fiducial edge samples reach " << ratio << " of the peak; widen the grid";
    throw Error(ErrorCode::DomainTooNarrow, msg.str());
  }
  return phi;
}

namespace {

CstGeometry geometry(const UniformGrid& y, const UniformGrid& x3, double x2, Measure measure, const ModelParams& p) {
  return {y, x3, x2, p.hbar4, p.h2, y.step * measure_factor(measure, p)};
}

void check_pair(const SampledLine& f, const SampledLine& phi) {
  f.validate();
  phi.validate();
  if (!f.grid.matches(phi.grid)) throw Error(ErrorCode::GridMismatch, "state and fiducial on different grids");
  if (f.measure != phi.measure) throw Error(ErrorCode::GridMismatch, "state and fiducial use different measures");
}

}  // namespace

PhaseSlice cst_slice(const SampledLine& f, const SampledLine& phi, double x2, const ModelParams& p) {
  check_pair(f, phi);
  p.validate();
  PhaseSlice out(f.grid, f.grid.dual(p.hbar4), x2);
  kernels::cst_slice(f.values, phi.values, geometry(out.grid1, out.grid3, x2, f.measure, p), out.values);
  return out;
}

PhaseVolume cst_volume(const SampledLine& f, const SampledLine& phi, const UniformGrid& grid2, const ModelParams& p) {
  grid2.validate(1);
  std::vector<PhaseSlice> slices;
  slices.reserve(grid2.count);
  for (std::size_t k = 0; k < grid2.count; ++k) slices.push_back(cst_slice(f, phi, grid2.at(k), p));
  return PhaseVolume(std::move(slices));
}

PhaseSlice cst_slice_direct(const SampledLine& f, const SampledLine& phi, double x2, const UniformGrid& grid3,
                            const ModelParams& p, std::size_t stride1, std::size_t stride3) {
  check_pair(f, phi);
  if (stride1 == 0 || stride3 == 0) throw Error(ErrorCode::InvalidArgument, "zero stride");
  PhaseSlice out(f.grid, grid3, x2);
  reference::cst_slice(f.values, phi.values, geometry(f.grid, grid3, x2, f.measure, p), out.values, stride1, stride3);
  return out;
}

cplx cst_closed_form(double q, double E, double x1, double x2, double x3, const ModelParams& p) {
  const cplx i(0.0, 1.0);
  const cplx d = i * x2 + E + q;
  const cplx zeta = x3 - i * E * x1;
  const cplx expo = -pi * p.hbar4 * E * x1 * x1 - 2.0 * pi * i * p.h2 * x2 - pi * p.hbar4 * zeta * zeta / d;
  return std::sqrt(2.0) * std::pow(q * E, 0.25) * std::exp(expo) / std::sqrt(d);
}

PhaseSlice cst_closed_form_slice(double q, double E, const UniformGrid& grid1, const UniformGrid& grid3, double x2,
                                 const ModelParams& p) {
  return PhaseVolume::sample(grid1, grid3, {x2, 1.0, 1},
                             [&](double x1, double, double x3) { return cst_closed_form(q, E, x1, x2, x3, p); })[0];
}

cplx inner_product_x2(const PhaseSlice& u, const PhaseSlice& v, const ModelParams& p) {
  if (!u.same_grid(v) || std::abs(u.x2 - v.x2) > 1e-12)
    throw Error(ErrorCode::GridMismatch, "inner product of slices on different grids");
  cplx acc = 0.0;
  for (std::size_t k = 0; k < u.values.size(); ++k) acc += u.values[k] * std::conj(v.values[k]);
  return acc * p.hbar4 * u.grid1.step * u.grid3.step;
}

double norm_x2(const PhaseSlice& u, const ModelParams& p) {
  return std::sqrt(std::max(0.0, inner_product_x2(u, u, p).real()));
}

SampledLine reconstruct(const PhaseSlice& F, const SampledLine& phi, const ModelParams& p) {
  phi.validate();
  F.validate();
  if (!F.grid1.matches(phi.grid)) throw Error(ErrorCode::GridMismatch, "slice x1 grid differs from the fiducial grid");
  SampledLine out{phi.grid, std::vector<cplx>(phi.values.size()), phi.measure};
  const CstGeometry geo = geometry(F.grid1, F.grid3, F.x2, phi.measure, p);
  const UniformGrid dual = F.grid1.dual(p.hbar4);
  if (F.grid3.matches(dual, 1e-9))
    kernels::reconstruct(F.values, phi.values, geo, out.values);
  else
    reference::reconstruct(F.values, phi.values, geo, out.values);
  return out;
}

}  // namespace shearcst
