#include "shearcst/grid.hpp"
#include "shearcst/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace shearcst {

void ModelParams::validate() const {
  if (!(hbar4 > 0.0) || !std::isfinite(hbar4))
    throw Error(ErrorCode::InvalidArgument, "hbar4 must be positive");
  if (!(m > 0.0) || !std::isfinite(m)) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw Error(ErrorCode::InvalidArgument, "omega must be positive");
  if (!std::isfinite(h2)) throw Error(ErrorCode::InvalidArgument, "h2 must be finite");
}

std::vector<double> UniformGrid::points() const {
  std::vector<double> pts(count);
  for (std::size_t i = 0; i < count; ++i) pts[i] = at(i);
  return pts;
}

std::optional<std::size_t> UniformGrid::index_of(double x, double tol) const {
  const double r = (x - origin) / step;
  const double k = std::round(r);
  if (std::abs(r - k) > tol || k < 0.0 || k >= static_cast<double>(count)) return std::nullopt;
  return static_cast<std::size_t>(k);
}

UniformGrid UniformGrid::centered(std::size_t count, double step) {
  return {-static_cast<double>(count / 2) * step, step, count};
}

UniformGrid UniformGrid::dual(double hbar4) const {
  return centered(count, 1.0 / (hbar4 * static_cast<double>(count) * step));
}

void UniformGrid::validate(std::size_t min_count) const {
  if (count < min_count)
    throw Error(ErrorCode::InvalidArgument, "grid needs at least " + std::to_string(min_count) + " points");
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(origin))
    throw Error(ErrorCode::InvalidArgument, "grid step must be positive and finite");
}

bool UniformGrid::matches(const UniformGrid& other, double tol) const {
  const double scale = std::max({std::abs(step), std::abs(other.step), 1e-300});
  return count == other.count && std::abs(step - other.step) <= tol * scale &&
         std::abs(origin - other.origin) <= tol * std::max(scale, std::abs(origin));
}

double measure_factor(Measure measure, const ModelParams& p) {
  if (measure == Measure::lebesgue) return 1.0;
  if (!(p.h2 > 0.0)) throw Error(ErrorCode::InvalidArgument, "dimensionless measure requires h2 > 0");
  return std::sqrt(p.hbar4 / p.h2);
}

SampledLine SampledLine::sample(const UniformGrid& grid, const std::function<cplx(double)>& f, Measure measure) {
  SampledLine line{grid, std::vector<cplx>(grid.count), measure};
  for (std::size_t i = 0; i < grid.count; ++i) line.values[i] = f(grid.at(i));
  return line;
}

cplx SampledLine::inner(const SampledLine& other, const ModelParams& p) const {
  if (!grid.matches(other.grid) || measure != other.measure)
    throw Error(ErrorCode::GridMismatch, "inner product of lines on different grids or measures");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) acc += values[i] * std::conj(other.values[i]);
  return acc * grid.step * measure_factor(measure, p);
}

double SampledLine::norm(const ModelParams& p) const { return std::sqrt(std::max(0.0, inner(*this, p).real())); }

void SampledLine::validate() const {
  grid.validate();
  if (values.size() != grid.count) throw Error(ErrorCode::InvalidArgument, "line value count mismatch");
  for (const auto& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::InvalidArgument, "line contains non-finite values");
}

PhaseSlice::PhaseSlice(UniformGrid g1, UniformGrid g3, double x2_value)
    : grid1(g1), grid3(g3), x2(x2_value), values(g1.count * g3.count) {}

bool PhaseSlice::same_grid(const PhaseSlice& other) const {
  return grid1.matches(other.grid1) && grid3.matches(other.grid3);
}

void PhaseSlice::validate() const {
  grid1.validate();
  grid3.validate();
  if (values.size() != grid1.count * grid3.count)
    throw Error(ErrorCode::InvalidArgument, "slice value count mismatch");
}

namespace {

void require_same(const PhaseSlice& a, const PhaseSlice& b) {
  if (!a.same_grid(b) || a.values.size() != b.values.size())
    throw Error(ErrorCode::GridMismatch, "slices live on different grids");
}

}  // namespace

PhaseSlice& PhaseSlice::operator+=(const PhaseSlice& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

PhaseSlice& PhaseSlice::operator-=(const PhaseSlice& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

PhaseSlice& PhaseSlice::operator*=(cplx s) {
  for (auto& v : values) v *= s;
  return *this;
}

PhaseSlice operator+(PhaseSlice a, const PhaseSlice& b) { return a += b; }
PhaseSlice operator-(PhaseSlice a, const PhaseSlice& b) { return a -= b; }
PhaseSlice operator*(cplx s, PhaseSlice a) { return a *= s; }

PhaseVolume::PhaseVolume(std::vector<PhaseSlice> slices) : slices_(std::move(slices)) {
  if (slices_.empty()) throw Error(ErrorCode::InvalidArgument, "volume needs at least one slice");
  for (const auto& s : slices_) {
    s.validate();
    if (!s.same_grid(slices_.front())) throw Error(ErrorCode::GridMismatch, "volume slices must share grids");
  }
  if (slices_.size() > 1) {
    const double step = slices_[1].x2 - slices_[0].x2;
    if (!(step > 0.0)) throw Error(ErrorCode::InvalidArgument, "x2 must be strictly increasing");
    for (std::size_t k = 1; k < slices_.size(); ++k) {
      const double d = slices_[k].x2 - slices_[k - 1].x2;
      if (std::abs(d - step) > 1e-9 * step) throw Error(ErrorCode::InvalidArgument, "x2 grid must be uniform");
    }
  }
}

PhaseVolume PhaseVolume::sample(const UniformGrid& grid1, const UniformGrid& grid3, const UniformGrid& grid2,
                                const std::function<cplx(double, double, double)>& f) {
  grid2.validate(1);
  std::vector<PhaseSlice> slices;
  slices.reserve(grid2.count);
  for (std::size_t k = 0; k < grid2.count; ++k) slices.emplace_back(grid1, grid3, grid2.at(k));
  const auto n1 = static_cast<long>(grid1.count);
  for (auto& s : slices) {
#pragma omp parallel for schedule(static)
    for (long i1 = 0; i1 < n1; ++i1) {
      const double x1 = grid1.at(static_cast<std::size_t>(i1));
      for (std::size_t i3 = 0; i3 < grid3.count; ++i3)
        s.at(static_cast<std::size_t>(i1), i3) = f(x1, s.x2, grid3.at(i3));
    }
  }
  return PhaseVolume(std::move(slices));
}

PhaseVolume PhaseVolume::zeros(const UniformGrid& grid1, const UniformGrid& grid3, const UniformGrid& grid2) {
  std::vector<PhaseSlice> slices;
  for (std::size_t k = 0; k < grid2.count; ++k) slices.emplace_back(grid1, grid3, grid2.at(k));
  return PhaseVolume(std::move(slices));
}

UniformGrid PhaseVolume::grid2() const {
  const double step = slices_.size() > 1 ? slices_[1].x2 - slices_[0].x2 : 1.0;
  return {slices_.front().x2, step, slices_.size()};
}

bool PhaseVolume::same_grid(const PhaseVolume& other) const {
  if (size() != other.size()) return false;
  for (std::size_t k = 0; k < size(); ++k) {
    if (!slices_[k].same_grid(other.slices_[k])) return false;
    if (std::abs(slices_[k].x2 - other.slices_[k].x2) > 1e-12) return false;
  }
  return true;
}

PhaseVolume& PhaseVolume::operator+=(const PhaseVolume& o) {
  if (!same_grid(o)) throw Error(ErrorCode::GridMismatch, "volumes live on different grids");
  for (std::size_t k = 0; k < size(); ++k) slices_[k] += o.slices_[k];
  return *this;
}

PhaseVolume& PhaseVolume::operator-=(const PhaseVolume& o) {
  if (!same_grid(o)) throw Error(ErrorCode::GridMismatch, "volumes live on different grids");
  for (std::size_t k = 0; k < size(); ++k) slices_[k] -= o.slices_[k];
  return *this;
}

PhaseVolume& PhaseVolume::operator*=(cplx s) {
  for (auto& sl : slices_) sl *= s;
  return *this;
}

PhaseVolume operator+(PhaseVolume a, const PhaseVolume& b) { return a += b; }
PhaseVolume operator-(PhaseVolume a, const PhaseVolume& b) { return a -= b; }
PhaseVolume operator*(cplx s, PhaseVolume a) { return a *= s; }

PhaseSlice multiply_by(PhaseSlice s, const std::function<cplx(double, double)>& f) {
  const auto n1 = static_cast<long>(s.n1());
#pragma omp parallel for schedule(static)
  for (long i1 = 0; i1 < n1; ++i1) {
    const double x1 = s.grid1.at(static_cast<std::size_t>(i1));
    for (std::size_t i3 = 0; i3 < s.n3(); ++i3) s.at(static_cast<std::size_t>(i1), i3) *= f(x1, s.grid3.at(i3));
  }
  return s;
}

PhaseVolume multiply_by(PhaseVolume v, const std::function<cplx(double, double, double)>& f) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double x2 = v[k].x2;
    v[k] = multiply_by(std::move(v[k]), [&](double x1, double x3) { return f(x1, x2, x3); });
  }
  return v;
}

double max_abs(std::span<const cplx> values) {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

double max_abs(const PhaseVolume& v) {
  double m = 0.0;
  for (const auto& s : v.slices()) m = std::max(m, max_abs(s.values));
  return m;
}

}  // namespace shearcst
