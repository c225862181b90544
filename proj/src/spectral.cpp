#include "shearcst/spectral.hpp"

#include "shearcst/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace shearcst {

using std::numbers::pi;
using polyop::DiffOp;
using polyop::Poly;

namespace {

const cplx I(0.0, 1.0);

void check_degree(int j) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  if (j > max_eigen_degree) {
    std::ostringstream msg;
    msg << "degree " << j << " above " << max_eigen_degree;
    throw Error(ErrorCode::DegreeTooHigh, msg.str());
  }
}

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

std::vector<double> hermite_coefficients(int j) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  std::vector<double> c(static_cast<std::size_t>(j) + 1, 0.0);
  for (int k = 0; 2 * k <= j; ++k) {
    const double term = (k % 2 == 0 ? 1.0 : -1.0) * factorial(j) / (factorial(k) * factorial(j - 2 * k)) *
                        std::pow(2.0, j - 2 * k);
    c[static_cast<std::size_t>(j - 2 * k)] = term;
  }
  return c;
}

cplx hermite(int j, cplx y) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  cplx prev = 1.0;
  if (j == 0) return prev;
  cplx cur = 2.0 * y;
  for (int n = 1; n < j; ++n) {
    const cplx next = 2.0 * y * cur - 2.0 * n * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx hermite_sum(int j, cplx y) {
  const auto c = hermite_coefficients(j);
  cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
  return acc;
}

polyop::DiffOp ladder_operator(int sign, const ModelParams& p) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "ladder sign must be +1 or -1");
  const double mw = p.m_omega();
  const cplx k = I / (2.0 * std::sqrt(pi * mw * p.hbar4));
  const DiffOp body = DiffOp(Poly(-1.0)) * DiffOp::d(1) -
                      DiffOp(Poly::var(2) + Poly(static_cast<double>(sign) * I * mw)) * DiffOp::d(3) +
                      DiffOp(Poly(2.0 * pi * I * p.hbar4) * Poly::var(3));
  return DiffOp(Poly(k)) * body;
}

PhaseVolume ladder_plus(const PhaseVolume& F, const ModelParams& p, const StencilOptions& opts) {
  return polyop::apply(ladder_operator(1, p), F, opts);
}

PhaseVolume ladder_minus(const PhaseVolume& F, const ModelParams& p, const StencilOptions& opts) {
  return polyop::apply(ladder_operator(-1, p), F, opts);
}

cplx vacuum_value(double x1, double x2, double x3, double E, const ModelParams& p) {
  const double mw = p.m_omega(), h = p.hbar4;
  const cplx d = I * x2 + E + mw;
  const cplx zeta = x3 - I * E * x1;
  const cplx expo = -pi * h * E * x1 * x1 - 2.0 * pi * I * p.h2 * x2 - pi * h * zeta * zeta / d;
  return std::sqrt(2.0) * std::pow(mw * E, 0.25) / std::sqrt(d) * std::exp(expo);
}

PhaseVolume vacuum(const UniformGrid& grid1, const UniformGrid& grid3, const UniformGrid& grid2, double E,
                   const ModelParams& p) {
  p.validate();
  if (!(E > 0.0)) throw Error(ErrorCode::InvalidArgument, "E must be positive");
  return PhaseVolume::sample(grid1, grid3, grid2,
                             [&](double x1, double x2, double x3) { return vacuum_value(x1, x2, x3, E, p); });
}

cplx vacuum_zu(cplx z, cplx u, double E, const ModelParams& p) {
  const double mw = p.m_omega(), h = p.hbar4;
  const cplx one_u = 1.0 - u;
  const cplx inner = z + (E / mw * (-1.0 + u) + u) * std::conj(z);
  const cplx e1 = pi * h * E * mw * mw / (one_u * one_u) * inner * inner;
  const cplx e2 = -2.0 * pi * mw / one_u * (p.h2 * (1.0 + u) + h * z * z);
  return std::pow(E / mw, 0.25) * std::exp(2.0 * pi * p.h2 * E) * std::sqrt(one_u) * std::exp(e1 + e2);
}

PhaseVolume vacuum_zu_volume(const UniformGrid& grid1, const UniformGrid& grid3, const UniformGrid& grid2, double E,
                             const ModelParams& p) {
  return PhaseVolume::sample(grid1, grid3, grid2, [&](double x1, double x2, double x3) {
    const auto zu = zu_coords(x1, x2, x3, E, p);
    return vacuum_zu(zu.z, zu.u, E, p);
  });
}

HeatPolynomial eigen_profile(int j, const ModelParams& p) {
  check_degree(j);
  const double c = 2.0 * pi * p.hbar4 * p.m_omega();
  std::vector<cplx> seed(static_cast<std::size_t>(j) + 1, 0.0);
  seed.back() = (j % 2 == 0 ? 1.0 : -1.0) * std::pow(2.0 * std::sqrt(c), j) / std::sqrt(std::pow(2.0, j) * factorial(j));
  return HeatPolynomial(std::move(seed), p);
}

PhaseVolume eigenstate(int j, const UniformGrid& grid1, const UniformGrid& grid3, const UniformGrid& grid2, double E,
                       const ModelParams& p) {
  return evolve_eigenstate(j, 0.0, grid1, grid3, grid2, E, p);
}

PhaseVolume evolve_eigenstate(int j, double t, const UniformGrid& grid1, const UniformGrid& grid3,
                              const UniformGrid& grid2, double E, const ModelParams& p) {
  const HeatPolynomial profile = eigen_profile(j, p);
  p.validate();
  if (!(E > 0.0)) throw Error(ErrorCode::InvalidArgument, "E must be positive");
  const cplx rot = std::polar(1.0, -p.omega * t), rot2 = std::polar(1.0, -2.0 * p.omega * t);
  const cplx phase = std::polar(1.0, -p.omega * t / 2.0);
  return PhaseVolume::sample(grid1, grid3, grid2, [&](double x1, double x2, double x3) {
    const auto zu = zu_coords(x1, x2, x3, E, p);
    return phase * vacuum_value(x1, x2, x3, E, p) * profile.value(rot * zu.z, rot2 * zu.u);
  });
}

ProportionalityFit fit_proportional(const PhaseSlice& a, const PhaseSlice& b) {
  if (!a.same_grid(b)) throw Error(ErrorCode::GridMismatch, "fit of slices on different grids");
  cplx ab = 0.0;
  double bb = 0.0, aa = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    ab += a.values[k] * std::conj(b.values[k]);
    bb += std::norm(b.values[k]);
    aa += std::norm(a.values[k]);
  }
  ProportionalityFit fit;
  fit.constant = bb > 0.0 ? ab / bb : cplx{};
  double misfit = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) misfit += std::norm(a.values[k] - fit.constant * b.values[k]);
  fit.spread = aa > 0.0 ? std::sqrt(misfit / aa) : 0.0;
  return fit;
}

}  // namespace shearcst
