#include "shearcst/conditions.hpp"

#include "shearcst/diagnostics.hpp"
#include "shearcst/errors.hpp"
#include "shearcst/group.hpp"
#include "shearcst/representations.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace shearcst {

using std::numbers::pi;
using polyop::DiffOp;
using polyop::Poly;

polyop::DiffOp analyticity_operator(double E, const ModelParams& p) {
  const cplx i(0.0, 1.0);
  return DiffOp(Poly(-i)) * DiffOp::d(1) + DiffOp(Poly(E)) * DiffOp::d(3) +
         DiffOp(Poly(-2.0 * pi * i * p.hbar4 * E) * Poly::var(1));
}

polyop::DiffOp structural_operator(const ModelParams& p) {
  const cplx i(0.0, 1.0);
  return DiffOp::d(0, 0, 2) + DiffOp(Poly(4.0 * pi * i * p.hbar4)) * DiffOp::d(2) +
         DiffOp(Poly(-8.0 * pi * pi * p.h2 * p.hbar4));
}

PhaseVolume apply_C(const PhaseVolume& F, double E, const ModelParams& p, const StencilOptions& opts) {
  if (!(E > 0.0)) throw Error(ErrorCode::InvalidArgument, "E must be positive");
  return polyop::apply(analyticity_operator(E, p), F, opts);
}

PhaseSlice apply_C(const PhaseSlice& F, double E, const ModelParams& p, const StencilOptions& opts) {
  return apply_C(PhaseVolume({F}), E, p, opts)[0];
}

PhaseVolume apply_S(const PhaseVolume& F, const ModelParams& p, const StencilOptions& opts) {
  return polyop::apply(structural_operator(p), F, opts);
}

PhaseVolume casimir_action(const PhaseVolume& F, CasimirAction action, const ModelParams& p,
                           const StencilOptions& opts) {
  auto act = [&](int k, const PhaseVolume& v) {
    const AlgebraVector X = AlgebraVector::basis(k);
    return action == CasimirAction::lie_derivative ? lie_derivative(X, v, p, opts) : derived_pi_tilde(X, v, p, opts);
  };
  PhaseVolume out = F;
  out *= 0.0;
  for (const auto& term : casimir_coefficients().terms)
    out += cplx(term.coefficient) * act(term.left, act(term.right, F));
  return out;
}

PhaseSlice peel(const PhaseSlice& F, double E, const ModelParams& p) {
  const double edge = std::max(std::abs(F.grid1.at(0)), std::abs(F.grid1.at(F.n1() - 1)));
  if (pi * p.hbar4 * E * edge * edge > std::log(std::numeric_limits<double>::max()) - 1.0) {
    std::ostringstream msg;
    msg << "peel: exp(pi hbar4 E x1^2) overflows at |x1| = " << edge;
    warn(msg.str());
  }
  return multiply_by(F, [&](double x1, double) { return cplx(std::exp(pi * p.hbar4 * E * x1 * x1)); });
}

PhaseSlice unpeel(const PhaseSlice& B, double E, const ModelParams& p) {
  return multiply_by(B, [&](double x1, double) { return cplx(std::exp(-pi * p.hbar4 * E * x1 * x1)); });
}

PhaseSlice cauchy_riemann(const PhaseSlice& B, double E, const StencilOptions& opts) {
  const cplx i(0.0, 1.0);
  PhaseSlice out = partial(B, Axis::x1, 1, opts);
  out *= -i;
  out += cplx(E) * partial(B, Axis::x3, 1, opts);
  return out;
}

namespace {

std::pair<std::size_t, std::size_t> interior_range(std::size_t n, double frame) {
  const auto cut = static_cast<std::size_t>(std::floor(frame * static_cast<double>(n)));
  if (2 * cut >= n) throw Error(ErrorCode::InvalidArgument, "residual frame leaves no interior");
  return {cut, n - cut};
}

double interior_sum(const PhaseSlice& s, double frame) {
  const auto [a1, b1] = interior_range(s.n1(), frame);
  const auto [a3, b3] = interior_range(s.n3(), frame);
  double acc = 0.0;
  for (std::size_t i = a1; i < b1; ++i)
    for (std::size_t j = a3; j < b3; ++j) acc += std::norm(s.at(i, j));
  return acc;
}

}  // namespace

double interior_norm(const PhaseSlice& s, const ModelParams& p, double frame) {
  return std::sqrt(interior_sum(s, frame) * p.hbar4 * s.grid1.step * s.grid3.step);
}

double interior_norm(const PhaseVolume& v, const ModelParams& p, double frame) {
  double acc = 0.0;
  for (const auto& s : v.slices()) acc += interior_sum(s, frame) * p.hbar4 * s.grid1.step * s.grid3.step;
  return std::sqrt(acc);
}

ConditionResidual residual(const PhaseVolume& input, const PhaseVolume& image, ConditionOperator op,
                           const ModelParams& p, double frame) {
  if (!input.same_grid(image)) throw Error(ErrorCode::GridMismatch, "residual of volumes on different grids");
  ConditionResidual r;
  r.op = op;
  r.absolute = interior_norm(image, p, frame);
  const double base = interior_norm(input, p, frame);
  r.relative = base > 0.0 ? r.absolute / base : r.absolute;
  return r;
}

ConditionResidual residual(const PhaseSlice& input, const PhaseSlice& image, ConditionOperator op,
                           const ModelParams& p, double frame) {
  return residual(PhaseVolume({input}), PhaseVolume({image}), op, p, frame);
}

HolomorphicFit fit_holomorphic(const PhaseSlice& B, double E, int degree, double frame) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  const auto [a1, b1] = interior_range(B.n1(), frame);
  const auto [a3, b3] = interior_range(B.n3(), frame);
  const auto rows = static_cast<Eigen::Index>((b1 - a1) * (b3 - a3));
  const auto cols = static_cast<Eigen::Index>(degree + 1);
  // Scale z so the monomial columns stay comparable.
  const double zscale = std::max({std::abs(B.grid1.at(a1)) * E, std::abs(B.grid1.at(b1 - 1)) * E,
                                  std::abs(B.grid3.at(a3)), std::abs(B.grid3.at(b3 - 1)), 1e-300});
  Eigen::MatrixXcd A(rows, cols);
  Eigen::VectorXcd rhs(rows);
  Eigen::Index r = 0;
  const cplx i(0.0, 1.0);
  for (std::size_t i1 = a1; i1 < b1; ++i1)
    for (std::size_t i3 = a3; i3 < b3; ++i3, ++r) {
      const cplx z = (B.grid3.at(i3) - i * E * B.grid1.at(i1)) / zscale;
      cplx zn = 1.0;
      for (Eigen::Index c = 0; c < cols; ++c, zn *= z) A(r, c) = zn;
      rhs(r) = B.at(i1, i3);
    }
  const Eigen::VectorXcd sol = A.colPivHouseholderQr().solve(rhs);
  HolomorphicFit fit;
  fit.coefficients.resize(static_cast<std::size_t>(cols));
  for (Eigen::Index c = 0; c < cols; ++c)
    fit.coefficients[static_cast<std::size_t>(c)] = sol(c) / std::pow(zscale, static_cast<double>(c));
  const double denom = rhs.norm();
  fit.relative_residual = denom > 0.0 ? (A * sol - rhs).norm() / denom : 0.0;
  return fit;
}

}  // namespace shearcst
