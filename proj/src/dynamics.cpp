#include "shearcst/dynamics.hpp"

#include "shearcst/conditions.hpp"
#include "shearcst/errors.hpp"
#include "shearcst/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace shearcst {

using std::numbers::pi;
using polyop::DiffOp;
using polyop::Poly;

namespace {

const cplx I(0.0, 1.0);

Poly x(int k) { return Poly::var(k); }
DiffOp mul(const Poly& q) { return DiffOp(q); }

/// x2 = 0 analyticity operator with E = m w, written in the Heisenberg chart.
DiffOp heisenberg_analyticity(const ModelParams& p) { return analyticity_operator(p.m_omega(), p); }

}  // namespace

polyop::DiffOp hamiltonian_heisenberg_operator(const ModelParams& p) {
  const double m = p.m, w = p.omega, h = p.hbar4;
  return mul(-1.0 / (4.0 * pi * m)) * DiffOp::d(2, 0, 0) + mul(-m * w * w / (4.0 * pi)) * DiffOp::d(0, 0, 2) +
         mul(I * h / m * x(3)) * DiffOp::d(1) + mul(pi * h * h / m * x(3) * x(3));
}

polyop::DiffOp reduced_heisenberg_operator(const ModelParams& p) {
  const double m = p.m, w = p.omega, h = p.hbar4;
  return mul(I * h / m * x(3)) * DiffOp::d(1) + mul(-I * h * m * w * w * x(1)) * DiffOp::d(3) +
         mul(0.5 * h * w + pi * h * h / m * (x(3) * x(3) - m * m * w * w * x(1) * x(1)));
}

polyop::DiffOp hamiltonian_G_operator(const ModelParams& p) {
  const double m = p.m, w = p.omega, h = p.hbar4;
  const DiffOp X1 = mul(-1.0) * DiffOp::d(1) - mul(x(2)) * DiffOp::d(3) + mul(2.0 * pi * I * h * x(3));
  return mul(-1.0 / (4.0 * pi * m)) * (X1 * X1) + mul(-m * w * w / (4.0 * pi)) * DiffOp::d(0, 0, 2);
}

polyop::DiffOp reduced_H1_operator(double E, const ModelParams& p) {
  const double m = p.m, mw = p.m_omega(), h = p.hbar4, h2 = p.h2;
  const Poly x1 = x(1), x2 = x(2), x3 = x(3);
  const Poly ix2E = I * x2 + E;
  DiffOp first = mul(x3 + x1 * x2) * DiffOp::d(1) - mul(ix2E * ix2E - mw * mw) * DiffOp::d(2) -
                 mul(E * E * x1 - x2 * x3) * DiffOp::d(3);
  first = mul(I * h / m) * first;
  const Poly zeroth = -8.0 * I * pi * h2 * E * x2 - I * x2 + 4.0 * pi * h2 * x2 * x2 - 2.0 * pi * h * x3 * x3 +
                      4.0 * pi * h2 * mw * mw - E - 4.0 * pi * h2 * E * E - 4.0 * I * pi * E * h * x1 * x1 * x2 +
                      2.0 * pi * h * E * E * x1 * x1;
  return first + mul(cplx(-h / (2.0 * m)) * zeroth);
}

ReductionCoefficients reduction_coefficients_heisenberg(const ModelParams& p) {
  ReductionCoefficients r;
  r.A = I / (4.0 * pi * p.m);
  r.B = -I * p.omega / (4.0 * pi);
  r.C = -I * p.hbar4 * p.omega / 2.0 * x(1);
  return r;
}

ReductionCoefficients reduction_coefficients_G(double E, const ModelParams& p) {
  const double m = p.m, w = p.omega;
  ReductionCoefficients r;
  r.A = I / (4.0 * pi * m);
  r.B = Poly{};
  r.C = I / (2.0 * pi * m) * (-I * E / 2.0 + x(2));
  r.K = I * p.hbar4 / (2.0 * m) * x(1) * (-E + 2.0 * I * x(2));
  const Poly ix2E = I * x(2) + E;
  r.F = -1.0 / (4.0 * pi * m) * ix2E * ix2E + m * w * w / (4.0 * pi);
  return r;
}

polyop::DiffOp reduction_expansion_heisenberg(const ModelParams& p) {
  const auto r = reduction_coefficients_heisenberg(p);
  const DiffOp adjust = mul(r.A) * DiffOp::d(1) + mul(I * r.B) * DiffOp::d(3) + mul(r.C);
  return hamiltonian_heisenberg_operator(p) + adjust * heisenberg_analyticity(p);
}

polyop::DiffOp reduction_expansion_G(double E, const ModelParams& p) {
  const auto r = reduction_coefficients_G(E, p);
  const DiffOp adjust = mul(r.A) * DiffOp::d(1) + mul(r.B) * DiffOp::d(2) + mul(r.C) * DiffOp::d(3) + mul(r.K);
  return hamiltonian_G_operator(p) + adjust * analyticity_operator(E, p) + mul(r.F) * structural_operator(p);
}

PhaseSlice hamiltonian_heisenberg(const PhaseSlice& F, const ModelParams& p, const StencilOptions& opts) {
  return polyop::apply(hamiltonian_heisenberg_operator(p), PhaseVolume({F}), opts)[0];
}

PhaseSlice reduced_heisenberg(const PhaseSlice& F, const ModelParams& p, const StencilOptions& opts) {
  return polyop::apply(reduced_heisenberg_operator(p), PhaseVolume({F}), opts)[0];
}

PhaseVolume hamiltonian_G(const PhaseVolume& F, const ModelParams& p, const StencilOptions& opts) {
  return polyop::apply(hamiltonian_G_operator(p), F, opts);
}

PhaseVolume reduced_H1(const PhaseVolume& F, double E, const ModelParams& p, const StencilOptions& opts) {
  return polyop::apply(reduced_H1_operator(E, p), F, opts);
}

// ---- heat-like equation ---------------------------------------------------------

double heat_diffusion(const ModelParams& p) { return -1.0 / (8.0 * pi * p.hbar4 * p.m_omega()); }

HeatPolynomial::HeatPolynomial(std::vector<cplx> seed_coefficients, const ModelParams& p)
    : seed_(std::move(seed_coefficients)) {
  p.validate();
  const double D = heat_diffusion(p);
  // k-th term: (D u)^k / k! g^(2k)(z).
  std::vector<cplx> deriv = seed_;
  double fact = 1.0;
  for (std::size_t k = 0; !deriv.empty(); ++k) {
    if (k > 0) fact *= static_cast<double>(k);
    std::vector<cplx> term(deriv.size());
    for (std::size_t n = 0; n < deriv.size(); ++n) term[n] = deriv[n] * std::pow(D, static_cast<double>(k)) / fact;
    u_coeffs_.push_back(std::move(term));
    std::vector<cplx> next;
    for (std::size_t n = 2; n < deriv.size(); ++n) {
      if (next.empty()) next.resize(deriv.size() - 2);
      next[n - 2] = deriv[n] * static_cast<double>(n * (n - 1));
    }
    deriv = std::move(next);
  }
}

cplx HeatPolynomial::value(cplx z, cplx u) const {
  cplx acc = 0.0, uk = 1.0;
  for (const auto& c : u_coeffs_) {
    cplx poly = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) poly = poly * z + *it;
    acc += uk * poly;
    uk *= u;
  }
  return acc;
}

GaussianSeed::GaussianSeed(cplx alpha, const ModelParams& p, cplx amplitude)
    : alpha_(alpha), amplitude_(amplitude), D_(heat_diffusion(p)) {
  p.validate();
  if (alpha == cplx{}) throw Error(ErrorCode::InvalidArgument, "gaussian seed needs alpha != 0");
  radius_ = 2.0 * pi * p.hbar4 * p.m_omega() / std::abs(alpha);
}

cplx GaussianSeed::value(cplx z, cplx u) const {
  const cplx s = 1.0 + 4.0 * alpha_ * D_ * u;
  return amplitude_ * std::exp(-alpha_ * z * z / s) / std::sqrt(s);
}

GriddedSeed::GriddedSeed(SampledLine g, double declared_radius, const ModelParams& p)
    : g_(std::move(g)), radius_(declared_radius), p_(p) {
  g_.validate();
  p.validate();
  if (!(declared_radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "declared radius must be positive");
}

cplx GriddedSeed::value(cplx z, cplx u) const { return heat_propagate_at(g_, z, u, p_); }

cplx heat_propagate_at(const SampledLine& g, cplx z, cplx u, const ModelParams& p) {
  if (u == cplx{}) throw Error(ErrorCode::InvalidArgument, "heat kernel needs u != 0");
  const cplx inv = 1.0 / u;
  if (inv.real() > 0.0) {
    std::ostringstream msg;
    msg << "kernel exp(2 pi hbar m w (z - xi)^2 / u) grows along the contour for u = " << u;
    throw Error(ErrorCode::KernelDivergent, msg.str());
  }
  const double c = 2.0 * pi * p.hbar4 * p.m_omega();
  cplx acc = 0.0;
  for (std::size_t k = 0; k < g.values.size(); ++k) {
    const cplx d = z - g.grid.at(k);
    acc += g.values[k] * std::exp(c * d * d * inv);
  }
  return std::sqrt(-2.0 * p.hbar4 * p.m_omega() * inv) * acc * g.grid.step;
}

SampledLine heat_propagate(const SampledLine& g, cplx u, const ModelParams& p) {
  g.validate();
  SampledLine out{g.grid, std::vector<cplx>(g.values.size()), g.measure};
  const long n = static_cast<long>(g.values.size());
  if (u == cplx{} || (1.0 / u).real() > 0.0) heat_propagate_at(g, 0.0, u, p);  // raises
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k)
    out.values[static_cast<std::size_t>(k)] = heat_propagate_at(g, g.grid.at(static_cast<std::size_t>(k)), u, p);
  return out;
}

// ---- evolutions -----------------------------------------------------------------

std::function<cplx(cplx)> power_series(std::vector<cplx> coefficients) {
  return [c = std::move(coefficients)](cplx w) {
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + *it;
    return acc;
  };
}

std::function<cplx(cplx)> hermite_series(std::vector<cplx> coefficients, double scale) {
  return [c = std::move(coefficients), scale](cplx w) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) acc += c[j] * hermite(static_cast<int>(j), scale * w);
    return acc;
  };
}

std::function<cplx(cplx)> heisenberg_profile(const HeatProfile& seed, const ModelParams& p) {
  const double two_mw = 2.0 * p.m_omega();
  return [&seed, two_mw](cplx w) { return seed.value(w / two_mw, 0.0); };
}

PhaseSlice evolve_heisenberg(const std::function<cplx(cplx)>& f2, double t, const UniformGrid& grid1,
                             const UniformGrid& grid3, const ModelParams& p) {
  p.validate();
  const double mw = p.m_omega(), h = p.hbar4, w = p.omega;
  const cplx rot = std::polar(1.0, -w * t);
  return PhaseVolume::sample(grid1, grid3, {0.0, 1.0, 1}, [&](double x1, double, double x3) {
    const cplx expo = -I * w * t / 2.0 + pi * I * h * x1 * x3 - pi * h / (2.0 * mw) * (mw * mw * x1 * x1 + x3 * x3);
    return std::exp(expo) * f2(rot * (x3 - I * mw * x1));
  })[0];
}

ZUCoords zu_coords(double x1, double x2, double x3, double E, const ModelParams& p) {
  return {(x3 - I * E * x1) / (I * x2 + E + p.m_omega()), cayley_map(x2, E, p)};
}

PhaseVolume evolve_G(const HeatProfile& seed, double E, double t, const UniformGrid& grid1, const UniformGrid& grid3,
                     const UniformGrid& grid2, const ModelParams& p) {
  p.validate();
  if (!(E > 0.0)) throw Error(ErrorCode::InvalidArgument, "E must be positive");
  const double R = seed.radius();
  if (std::isfinite(R) && R < 1.0) {
    const auto [lo, hi] = squeeze_bounds(R, p);
    if (!(E > lo && E < hi)) {
      std::ostringstream msg;
      msg << "E = " << E << " outside the squeeze range (" << lo << ", " << hi << ") for R = " << R;
      throw Error(ErrorCode::SqueezeOutOfRange, msg.str());
    }
  }
  for (std::size_t k = 0; k < grid2.count; ++k) {
    const double r = std::abs(cayley_map(grid2.at(k), E, p));
    if (!(r < R)) {
      std::ostringstream msg;
      msg << "|u| = " << r << " at x2 = " << grid2.at(k) << " is not below R = " << R;
      throw Error(ErrorCode::SqueezeOutOfRange, msg.str());
    }
  }
  const double mw = p.m_omega(), h = p.hbar4, w = p.omega;
  const cplx rot = std::polar(1.0, -w * t), rot2 = std::polar(1.0, -2.0 * w * t);
  const cplx phase_t = std::polar(1.0, -w * t / 2.0);
  const double norm = std::sqrt(E + mw);
  return PhaseVolume::sample(grid1, grid3, grid2, [&](double x1, double x2, double x3) {
    const cplx d = I * x2 + E + mw;
    const cplx zeta = x3 - I * E * x1;
    const cplx expo = -pi * h * E * x1 * x1 - 2.0 * pi * I * p.h2 * x2 - pi * h * zeta * zeta / d;
    const cplx u = (mw - (I * x2 + E)) / d;
    return norm / std::sqrt(d) * phase_t * std::exp(expo) * seed.value(rot * zeta / d, rot2 * u);
  });
}

// ---- squeeze geometry -------------------------------------------------------------

cplx cayley_map(double x2, double E, const ModelParams& p) {
  const double mw = p.m_omega();
  if (!(mw + E > 0.0)) throw Error(ErrorCode::InvalidArgument, "cayley map needs m w + E > 0");
  const cplx s = I * x2 + E;
  return (mw - s) / (mw + s);
}

SqueezeGeometry squeeze_geometry(double E, const ModelParams& p) {
  const double mw = p.m_omega();
  return {-E / (mw + E), mw / (mw + E), std::abs(mw - E) / (mw + E)};
}

std::pair<double, double> squeeze_bounds(double R, const ModelParams& p) {
  if (!(R > 0.0 && R < 1.0)) throw Error(ErrorCode::InvalidArgument, "squeeze bounds need 0 < R < 1");
  const double mw = p.m_omega();
  const double ratio = 2.0 / (1.0 + R) - 1.0;
  return {ratio * mw, mw / ratio};
}

std::optional<double> admissible_x2(double R, double E, const ModelParams& p) {
  if (!(R > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  const double mw = p.m_omega();
  if (R >= 1.0) return std::numeric_limits<double>::infinity();
  const double num = R * R * (mw + E) * (mw + E) - (mw - E) * (mw - E);
  if (!(num > 0.0)) return std::nullopt;
  return std::sqrt(num / (1.0 - R * R));
}

std::vector<double> jump_times(double x2, double E, const ModelParams& p) {
  const cplx u = cayley_map(x2, E, p);
  if (std::abs(u) < 1e-15) throw Error(ErrorCode::CenterPoint, "u = 0 has no jump times");
  const double period = pi / p.omega;
  std::vector<double> times;
  for (int k = -2; k <= 3; ++k) {
    double t = (std::arg(u) - pi / 2.0 + k * pi) / (2.0 * p.omega);
    if (t >= 0.0 && t < period) times.push_back(t);
  }
  std::sort(times.begin(), times.end());
  return times;
}

std::pair<double, double> shear(double x1, double x3, double x2) { return {x1, x3 - x2 * x1}; }

}  // namespace shearcst
