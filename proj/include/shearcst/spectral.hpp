#pragma once

// Ladder operators on the image space of G, the vacuum and the eigenfunction family.

#include "shearcst/dynamics.hpp"
#include "shearcst/grid.hpp"
#include "shearcst/polyop.hpp"
#include "shearcst/stencil.hpp"

#include <vector>

namespace shearcst {

/// Largest degree accepted by eigenstate().
inline constexpr int max_eigen_degree = 16;

/// Coefficients of H_j(y) = sum_k (-1)^k j! / (k! (j - 2k)!) (2y)^(j - 2k), lowest power
/// first.
std::vector<double> hermite_coefficients(int j);
/// H_j(y) by the three-term recurrence H_{n+1} = 2y H_n - 2n H_{n-1}.
cplx hermite(int j, cplx y);
/// H_j(y) by the explicit sum.
cplx hermite_sum(int j, cplx y);

/// L+- = (i / (2 sqrt(pi m w hbar4))) (-d1 - (x2 +- i m w) d3 + 2 pi i hbar4 x3).
polyop::DiffOp ladder_operator(int sign, const ModelParams& p);
PhaseVolume ladder_plus(const PhaseVolume& F, const ModelParams& p, const StencilOptions& opts = {});
PhaseVolume ladder_minus(const PhaseVolume& F, const ModelParams& p, const StencilOptions& opts = {});

/// Phi_0 = sqrt(2) (m w E)^(1/4) / sqrt(i x2 + E + m w)
///       * exp(-pi hbar4 E x1^2 - 2 pi i h2 x2 - pi hbar4 (x3 - i E x1)^2 / (i x2 + E + m w)).
cplx vacuum_value(double x1, double x2, double x3, double E, const ModelParams& p);
PhaseVolume vacuum(const UniformGrid& grid1, const UniformGrid& grid3, const UniformGrid& grid2, double E,
                   const ModelParams& p);

/// The vacuum written through (z, u):
/// (E/mw)^(1/4) e^(2 pi h2 E) sqrt(1 - u) exp(pi hbar4 E m^2 w^2 / (1 - u)^2
///   (z + (E/mw (u - 1) + u) conj(z))^2) exp(-2 pi m w / (1 - u) (h2 (1 + u) + hbar4 z^2)).
cplx vacuum_zu(cplx z, cplx u, double E, const ModelParams& p);
PhaseVolume vacuum_zu_volume(const UniformGrid& grid1, const UniformGrid& grid3, const UniformGrid& grid2, double E,
                             const ModelParams& p);

/// Phi_j / Phi_0 as a heat polynomial in (z, u):
/// (-1)^j (2^j j!)^(-1/2) sum_k (-1)^k j! / (k! (j-2k)!) (2 sqrt(c) z)^(j-2k) u^k, c = 2 pi hbar4 m w.
/// Integer powers of u only, so u = 0 needs no special handling. Throws DegreeTooHigh.
HeatPolynomial eigen_profile(int j, const ModelParams& p);

/// Phi_j = eigen_profile(j)(z, u) Phi_0, equal to (j!)^(-1/2) (L+)^j Phi_0.
PhaseVolume eigenstate(int j, const UniformGrid& grid1, const UniformGrid& grid3, const UniformGrid& grid2, double E,
                       const ModelParams& p);

/// e^(-i w t / 2) Phi_0 eigen_profile(j)(e^(-i w t) z, e^(-2 i w t) u) = e^(-i w (j + 1/2) t) Phi_j.
PhaseVolume evolve_eigenstate(int j, double t, const UniformGrid& grid1, const UniformGrid& grid3,
                              const UniformGrid& grid2, double E, const ModelParams& p);

/// Best constant c with a ~ c b in the least-squares sense, and the relative misfit.
struct ProportionalityFit {
  cplx constant;
  double spread = 0.0;
};
ProportionalityFit fit_proportional(const PhaseSlice& a, const PhaseSlice& b);

}  // namespace shearcst
