#pragma once

// Image-space conditions: the analyticity operator C, the structural operator S, the
// Gaussian peeling to a Cauchy-Riemann operator, and residual norms.

#include "shearcst/grid.hpp"
#include "shearcst/polyop.hpp"
#include "shearcst/stencil.hpp"

#include <vector>

namespace shearcst {

enum class ConditionOperator { C, S, CR };

struct ConditionResidual {
  double absolute = 0.0;
  double relative = 0.0;
  ConditionOperator op = ConditionOperator::C;
};

/// C = -i d1 + E d3 - 2 pi i hbar4 E x1.
polyop::DiffOp analyticity_operator(double E, const ModelParams& p);
/// S = d33 + 4 pi i hbar4 d2 - 8 pi^2 h2 hbar4.
polyop::DiffOp structural_operator(const ModelParams& p);

PhaseVolume apply_C(const PhaseVolume& F, double E, const ModelParams& p, const StencilOptions& opts = {});
PhaseSlice apply_C(const PhaseSlice& F, double E, const ModelParams& p, const StencilOptions& opts = {});
/// Throws InsufficientSlices below slices_required(opts).
PhaseVolume apply_S(const PhaseVolume& F, const ModelParams& p, const StencilOptions& opts = {});

/// Casimir X3^2 - 2 X2 X4 acting through the Lie derivatives (right action) or
/// through dpi~ (left action); both equal d33 + 4 pi i hbar4 d2.
enum class CasimirAction { lie_derivative, derived_pi_tilde };
PhaseVolume casimir_action(const PhaseVolume& F, CasimirAction action, const ModelParams& p,
                           const StencilOptions& opts = {});

/// B = exp(pi hbar4 E x1^2) F. Warns when the factor overflows at the grid edge.
PhaseSlice peel(const PhaseSlice& F, double E, const ModelParams& p);
PhaseSlice unpeel(const PhaseSlice& B, double E, const ModelParams& p);

/// (-i d1 + E d3) B, zero exactly when B is holomorphic in z = x3 - i E x1.
/// Central differences are the natural choice since B grows along x1.
PhaseSlice cauchy_riemann(const PhaseSlice& B, double E, const StencilOptions& opts = {});

/// Norms over the interior that drops `frame` of each in-plane axis at both ends.
double interior_norm(const PhaseSlice& s, const ModelParams& p, double frame = 0.1);
double interior_norm(const PhaseVolume& v, const ModelParams& p, double frame = 0.1);

/// absolute = interior norm of `image`, relative = absolute / interior norm of `input`.
ConditionResidual residual(const PhaseVolume& input, const PhaseVolume& image, ConditionOperator op,
                           const ModelParams& p, double frame = 0.1);
ConditionResidual residual(const PhaseSlice& input, const PhaseSlice& image, ConditionOperator op,
                           const ModelParams& p, double frame = 0.1);

/// Least-squares fit of a slice by sum_n c_n z^n, z = x3 - i E x1, on the interior.
struct HolomorphicFit {
  std::vector<cplx> coefficients;
  double relative_residual = 0.0;
};
HolomorphicFit fit_holomorphic(const PhaseSlice& B, double E, int degree, double frame = 0.1);

}  // namespace shearcst
