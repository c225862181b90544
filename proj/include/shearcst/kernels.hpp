#pragma once

// Data-parallel inner loops. `shearcst::kernels` holds the OpenMP/FFT versions used by
// the library; `shearcst::reference` holds serial O(n^2) direct-sum versions of the same
// kernels, kept for cross-checking in tests and for the benchmark.

#include "shearcst/grid.hpp"

#include <span>
#include <vector>

namespace shearcst {

/// Axis of an x1-major (n1 x n3) array.
enum class Axis { x1, x3 };

/// Weights w_j with f^(m)(x0) ~ sum_j w_j f(nodes[j]) (Fornberg's recursion).
std::vector<double> finite_difference_weights(double x0, std::span<const double> nodes, int derivative_order);

/// Geometry of one discretised CST slice. The y grid must contain 0 so that x1 shifts
/// of the fiducial are grid-exact; x1 uses the y grid.
struct CstGeometry {
  UniformGrid y;
  UniformGrid x3;
  double x2 = 0.0;
  double hbar4 = 1.0;
  double h2 = 0.5;
  /// Quadrature weight per sample: dy times the measure factor.
  double weight = 1.0;
};

namespace kernels {

/// Spectral derivative (order 1 or 2) along `axis`, periodic over count*step.
/// The Nyquist mode is dropped so that order 2 equals order 1 applied twice.
void spectral_derivative(std::span<cplx> data, std::size_t n1, std::size_t n3, Axis axis, double step, int order);

/// Central difference of the given derivative order with `accuracy`+1 point stencils
/// (one-sided windows at the edges). Exact for polynomials of degree <= accuracy.
void central_derivative(std::span<cplx> data, std::size_t n1, std::size_t n3, Axis axis, double step,
                        int order, int accuracy = 4);

/// Coherent state transform of one slice via shift, chirp and hbar4-scaled DFT.
///
/// Discretisation: with y_k = y0 + k dy, x1_a = y_a, x3_m = x30 + m dx3 and
/// dx3 = 1 / (hbar4 N dy),
///   out[a, m] = weight * exp(-2 pi i h2 x2) * exp(2 pi i hbar4 y0 x3_m)
///             * sum_k f_k conj(phi(y_k - x1_a)) exp(-pi i hbar4 x2 y_k^2)
///                     exp(2 pi i hbar4 k dy x30) exp(2 pi i k m / N)
/// where phi(y_k - x1_a) = phi[k - a + o], o = -y0/dy, and is zero off the grid.
/// Requires x3.count == y.count and x3.step == dx3.
void cst_slice(std::span<const cplx> f, std::span<const cplx> phi, const CstGeometry& geo, std::span<cplx> out);

/// Adjoint of cst_slice without the measure weight:
///   out_k = exp(2 pi i h2 x2 + pi i hbar4 x2 y_k^2)
///         * sum_{a,m} F[a, m] phi(y_k - x1_a) exp(-2 pi i hbar4 x3_m y_k) hbar4 dx1 dx3
void reconstruct(std::span<const cplx> slice, std::span<const cplx> phi, const CstGeometry& geo,
                 std::span<cplx> out);

}  // namespace kernels

namespace reference {

/// Same contract as kernels::spectral_derivative, by direct trigonometric sums.
void spectral_derivative(std::span<cplx> data, std::size_t n1, std::size_t n3, Axis axis, double step, int order);

/// Direct trapezoidal evaluation of the CST integral at the listed (a, m) index pairs,
/// for any x3 grid. Entries not listed are left untouched.
void cst_slice(std::span<const cplx> f, std::span<const cplx> phi, const CstGeometry& geo, std::span<cplx> out,
               std::size_t stride1 = 1, std::size_t stride3 = 1);

/// Direct double sum for the adjoint transform.
void reconstruct(std::span<const cplx> slice, std::span<const cplx> phi, const CstGeometry& geo,
                 std::span<cplx> out);

}  // namespace reference

}  // namespace shearcst
