#pragma once

// The irreducible representation pi on L2(R), the reducible representation on
// functions over G/Z, and the three families of first-order operators they induce.

#include "shearcst/grid.hpp"
#include "shearcst/group.hpp"
#include "shearcst/stencil.hpp"

namespace shearcst {

/// [pi(g) f](y) = exp(2 pi i (h2 x2 + hbar4 (x4 - x3 y + x2 y^2 / 2))) f(y - x1).
/// Throws OffGridShift unless x1 is a whole number of grid steps.
SampledLine apply_pi(const GroupElement& g, const SampledLine& f, const ModelParams& p);

/// [pi~(y) F](x') = exp(2 pi i hbar4 (y4 - y1 y3 + y1^2 y2 / 2 + y1 x3' - y1^2 x2' / 2))
///                 * F(x1' - y1, x2' - y2, x3' - y3 - y1 x2' + y1 y2).
/// Every shift must land on grid nodes (OffGridShift otherwise); samples shifted in
/// from outside the volume are zero.
PhaseVolume apply_pi_tilde(const GroupElement& g, const PhaseVolume& F, const ModelParams& p);

/// dpi(X): X1 = -d/dy, X2 = 2 pi i h2 + i pi hbar4 y^2, X3 = -2 pi i hbar4 y,
/// X4 = 2 pi i hbar4. The y derivative is spectral.
SampledLine derived_pi(const AlgebraVector& X, const SampledLine& f, const ModelParams& p);

/// dpi~(X): X1 = -d1 - x2 d3 + 2 pi i hbar4 x3, X2 = -d2, X3 = -d3, X4 = 2 pi i hbar4.
/// A nonzero X2 component needs slices_required(opts) slices.
PhaseVolume derived_pi_tilde(const AlgebraVector& X, const PhaseVolume& F, const ModelParams& p,
                             const StencilOptions& opts = {});

/// Left-invariant vector fields: L X1 = d1, L X2 = d2 + x1 d3 - i pi hbar4 x1^2,
/// L X3 = d3 - 2 pi i hbar4 x1, L X4 = -2 pi i hbar4.
PhaseVolume lie_derivative(const AlgebraVector& X, const PhaseVolume& F, const ModelParams& p,
                           const StencilOptions& opts = {});

}  // namespace shearcst
