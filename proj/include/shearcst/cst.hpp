#pragma once

// Induced coherent state transform on G/Z: fiducial vectors, the shift / chirp /
// scaled-DFT pipeline, the Gaussian closed form, image inner products and the adjoint.

#include "shearcst/grid.hpp"

namespace shearcst {

enum class FiducialKind { gaussian, generic };

/// Fiducial exp((pi i a hbar4 / 3) y^3 - pi E hbar4 y^2 + 2 pi i a h2 y); a = 0 is the
/// squeezed Gaussian.
struct FiducialSpec {
  FiducialKind kind = FiducialKind::gaussian;
  double E = 1.0;
  double a = 0.0;
  Measure normalization = Measure::dimensionless;
  void validate(const ModelParams& p) const;
};

/// Samples the fiducial with unit norm under the selected measure. The cubic phase of
/// the generic kind does not change |phi|, so both kinds share the Gaussian constant
/// (2 h2 E)^(1/4) (dimensionless) or (2 hbar4 E)^(1/4) (Lebesgue).
/// Throws DomainTooNarrow when the edge samples exceed 1e-12 of the peak.
SampledLine make_fiducial(const FiducialSpec& spec, const UniformGrid& grid, const ModelParams& p);

/// W_phi f on the slice x2: x1 runs over the y grid of f, x3 over y.dual(hbar4).
/// f and phi must share grid and measure; the grid must contain y = 0.
PhaseSlice cst_slice(const SampledLine& f, const SampledLine& phi, double x2, const ModelParams& p);

/// cst_slice on every node of grid2.
PhaseVolume cst_volume(const SampledLine& f, const SampledLine& phi, const UniformGrid& grid2, const ModelParams& p);

/// Direct trapezoidal evaluation of the transform on an arbitrary x3 grid, filling
/// every stride1-th x1 row and stride3-th x3 column (other entries are zero).
PhaseSlice cst_slice_direct(const SampledLine& f, const SampledLine& phi, double x2, const UniformGrid& grid3,
                            const ModelParams& p, std::size_t stride1 = 1, std::size_t stride3 = 1);

/// Transform of the normalised squeezed state phi_q by phi_E (dimensionless measure):
/// sqrt(2) (qE)^(1/4) exp(-pi hbar4 E x1^2 - 2 pi i h2 x2
///   - pi hbar4 (x3 - i E x1)^2 / (i x2 + E + q)) / sqrt(i x2 + E + q), principal root.
cplx cst_closed_form(double q, double E, double x1, double x2, double x3, const ModelParams& p);
PhaseSlice cst_closed_form_slice(double q, double E, const UniformGrid& grid1, const UniformGrid& grid3, double x2,
                                 const ModelParams& p);

/// <u, v>_{x2} = sum u conj(v) hbar4 dx1 dx3. Throws GridMismatch.
cplx inner_product_x2(const PhaseSlice& u, const PhaseSlice& v, const ModelParams& p);
double norm_x2(const PhaseSlice& u, const ModelParams& p);

/// Adjoint transform M_phi(x2) F = int F(x1,x2,x3) pi(x1,x2,x3,0) phi hbar4 dx1 dx3,
/// so that reconstruct(cst_slice(f, phi), psi) = <psi, phi> f.
SampledLine reconstruct(const PhaseSlice& F, const SampledLine& phi, const ModelParams& p);

}  // namespace shearcst
