#pragma once

// Harmonic oscillator on the image spaces of the Heisenberg group and of G: Hamiltonians,
// their first-order reductions, closed-form evolutions, the heat kernel for the f2
// factor and the squeeze geometry of the Cayley-type map.

#include "shearcst/grid.hpp"
#include "shearcst/polyop.hpp"
#include "shearcst/stencil.hpp"

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace shearcst {

// ---- operators --------------------------------------------------------------

/// -(1/4 pi m) d11 - (m w^2 / 4 pi) d33 + (i hbar/m) x3 d1 + (pi hbar^2/m) x3^2.
polyop::DiffOp hamiltonian_heisenberg_operator(const ModelParams& p);
/// (i hbar/m) x3 d1 - i hbar m w^2 x1 d3 + hbar w / 2 + (pi hbar^2/m)(x3^2 - m^2 w^2 x1^2).
polyop::DiffOp reduced_heisenberg_operator(const ModelParams& p);
/// -(1/4 pi m) (dpi~ X1)^2 - (m w^2 / 4 pi) d33 with dpi~ X1 = -d1 - x2 d3 + 2 pi i hbar4 x3.
polyop::DiffOp hamiltonian_G_operator(const ModelParams& p);
/// First-order operator H1 written out term by term.
polyop::DiffOp reduced_H1_operator(double E, const ModelParams& p);

/// Coefficients used to cancel the second-order part of a Hamiltonian with the
/// image-space conditions.
///   Heisenberg: H~ = H + (A d1 + i B d3 + C) D, D the x2 = 0 analyticity operator, E = m w.
///   G:          H1 = H + (A d1 + B d2 + C d3 + K) C_E + F S.
struct ReductionCoefficients {
  polyop::Poly A, B, C, K, F;
};
ReductionCoefficients reduction_coefficients_heisenberg(const ModelParams& p);
ReductionCoefficients reduction_coefficients_G(double E, const ModelParams& p);

/// The adjusted operators assembled from ReductionCoefficients by exact composition.
polyop::DiffOp reduction_expansion_heisenberg(const ModelParams& p);
polyop::DiffOp reduction_expansion_G(double E, const ModelParams& p);

PhaseSlice hamiltonian_heisenberg(const PhaseSlice& F, const ModelParams& p, const StencilOptions& opts = {});
PhaseSlice reduced_heisenberg(const PhaseSlice& F, const ModelParams& p, const StencilOptions& opts = {});
/// H_G has no x2 derivative, so any number of slices is accepted.
PhaseVolume hamiltonian_G(const PhaseVolume& F, const ModelParams& p, const StencilOptions& opts = {});
/// Needs slices_required(opts) slices for its d2 term.
PhaseVolume reduced_H1(const PhaseVolume& F, double E, const ModelParams& p, const StencilOptions& opts = {});

// ---- heat-like equation for f2 ----------------------------------------------

/// Diffusion constant of d_u f2 = D d_zz f2: D = -1 / (8 pi hbar4 m w).
double heat_diffusion(const ModelParams& p);

/// A solution f2(z, u) of the heat-like equation, analytic for |u| < radius().
class HeatProfile {
public:
  virtual ~HeatProfile() = default;
  virtual cplx value(cplx z, cplx u) const = 0;
  /// Analytic-extension radius in u; infinity for entire profiles.
  virtual double radius() const = 0;
};

/// Heat polynomial sum_k (D u)^k / k! g^(2k)(z) of the polynomial seed g.
class HeatPolynomial final : public HeatProfile {
public:
  HeatPolynomial(std::vector<cplx> seed_coefficients, const ModelParams& p);
  cplx value(cplx z, cplx u) const override;
  double radius() const override { return std::numeric_limits<double>::infinity(); }
  const std::vector<cplx>& seed() const { return seed_; }

private:
  std::vector<cplx> seed_;
  /// u_coeffs_[k] holds the z-polynomial multiplying u^k.
  std::vector<std::vector<cplx>> u_coeffs_;
};

/// amplitude * exp(-alpha xi^2) propagated in closed form:
/// (1 + 4 alpha D u)^(-1/2) exp(-alpha z^2 / (1 + 4 alpha D u)), R = 2 pi hbar4 m w / |alpha|.
class GaussianSeed final : public HeatProfile {
public:
  GaussianSeed(cplx alpha, const ModelParams& p, cplx amplitude = 1.0);
  cplx value(cplx z, cplx u) const override;
  double radius() const override { return radius_; }

private:
  cplx alpha_, amplitude_;
  double D_, radius_;
};

/// Sampled initial data g on a real grid, propagated by kernel quadrature. The radius
/// is declared by the caller; u = 0 is not available from samples.
class GriddedSeed final : public HeatProfile {
public:
  GriddedSeed(SampledLine g, double declared_radius, const ModelParams& p);
  cplx value(cplx z, cplx u) const override;
  double radius() const override { return radius_; }

private:
  SampledLine g_;
  double radius_;
  ModelParams p_;
};

/// f2(z, u) = (-2 hbar4 m w / u)^(1/2) int g(xi) exp(2 pi hbar4 m w (z - xi)^2 / u) dxi,
/// principal root, trapezoidal sum over the grid of g. Throws KernelDivergent when
/// Re(1/u) > 0 and InvalidArgument for u = 0.
cplx heat_propagate_at(const SampledLine& g, cplx z, cplx u, const ModelParams& p);
/// heat_propagate_at on every node of g's grid.
SampledLine heat_propagate(const SampledLine& g, cplx u, const ModelParams& p);

// ---- evolutions -------------------------------------------------------------

/// Profile w -> sum_n c_n w^n.
std::function<cplx(cplx)> power_series(std::vector<cplx> coefficients);
/// Profile w -> sum_j c_j H_j(scale w).
std::function<cplx(cplx)> hermite_series(std::vector<cplx> coefficients, double scale);
/// Heisenberg profile f2^H(w) = f2(w / (2 m w), 0) matching evolve_G at x2 = 0, E = m w.
std::function<cplx(cplx)> heisenberg_profile(const HeatProfile& seed, const ModelParams& p);

/// exp(-i w t/2 + pi i hbar x1 x3 - (pi hbar / 2 m w)(m^2 w^2 x1^2 + x3^2)) f2(e^{-i w t} w),
/// w = x3 - i m w x1, on the x2 = 0 slice.
PhaseSlice evolve_heisenberg(const std::function<cplx(cplx)>& f2, double t, const UniformGrid& grid1,
                             const UniformGrid& grid3, const ModelParams& p);

/// z = (x3 - i E x1) / (i x2 + E + m w) and u = cayley_map(x2, E).
struct ZUCoords {
  cplx z;
  cplx u;
};
ZUCoords zu_coords(double x1, double x2, double x3, double E, const ModelParams& p);

/// sqrt(E + m w) / sqrt(i x2 + E + m w) exp(-i w t/2 - pi hbar4 E x1^2 - 2 pi i h2 x2
///   - pi hbar4 (x3 - i E x1)^2 / (i x2 + E + m w)) f2(e^{-i w t} z, e^{-2 i w t} u).
/// Throws SqueezeOutOfRange when E is outside squeeze_bounds(R) or |u| >= R on a slice.
PhaseVolume evolve_G(const HeatProfile& seed, double E, double t, const UniformGrid& grid1, const UniformGrid& grid3,
                     const UniformGrid& grid2, const ModelParams& p);

// ---- squeeze geometry -------------------------------------------------------

/// u = (m w - (i x2 + E)) / (m w + (i x2 + E)).
cplx cayley_map(double x2, double E, const ModelParams& p);

/// Circle traced by cayley_map over x2: center -E/(m w + E), radius m w/(m w + E);
/// c = |m w - E|/(m w + E) is the distance of u(x2 = 0) from the origin.
struct SqueezeGeometry {
  double center = 0.0;
  double radius = 0.0;
  double c = 0.0;
};
SqueezeGeometry squeeze_geometry(double E, const ModelParams& p);

/// ((1 - R)/(1 + R) m w, (1 + R)/(1 - R) m w) for 0 < R < 1.
std::pair<double, double> squeeze_bounds(double R, const ModelParams& p);

/// Half-width of the x2 interval with |u| < R, if nonempty.
std::optional<double> admissible_x2(double R, double E, const ModelParams& p);

/// Times in [0, pi/w) with Re(e^{-2 i w t} u) = 0. Throws CenterPoint when u = 0.
std::vector<double> jump_times(double x2, double E, const ModelParams& p);

/// Shear (x1, x3) -> (x1, x3 - x2 x1).
std::pair<double, double> shear(double x1, double x3, double x2);

}  // namespace shearcst
