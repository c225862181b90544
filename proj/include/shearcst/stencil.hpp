#pragma once

// Partial derivatives of slices and volumes. In-plane axes (x1, x3) use spectral or
// central differences; x2 uses central differences across neighbouring slices.

#include "shearcst/grid.hpp"
#include "shearcst/kernels.hpp"

namespace shearcst {

enum class Differencing { spectral, central };

struct StencilOptions {
  Differencing in_plane = Differencing::spectral;
  /// Order of accuracy of central differences in x1 and x3.
  int accuracy = 4;
  /// Order of accuracy of the x2 stencil; uses accuracy + 1 neighbouring slices.
  int x2_accuracy = 4;
};

/// d^order / dx1^order or d^order / dx3^order of a slice.
PhaseSlice partial(const PhaseSlice& s, Axis axis, int order, const StencilOptions& opts = {});
PhaseVolume partial(const PhaseVolume& v, Axis axis, int order, const StencilOptions& opts = {});

/// d^order / dx2^order across slices. Throws InsufficientSlices when the volume has
/// fewer than x2_accuracy + 1 slices.
PhaseVolume partial_x2(const PhaseVolume& v, int order, const StencilOptions& opts = {});

/// Number of slices partial_x2 needs.
std::size_t slices_required(const StencilOptions& opts);

/// Largest boundary sample relative to the peak. Spectral differentiation assumes
/// this is negligible; warns through the diagnostic handler when above `threshold`.
double boundary_ratio(const PhaseSlice& s);
double boundary_ratio(const SampledLine& f);
void check_boundary(const PhaseVolume& v, const char* where, double threshold = 1e-12);
void check_boundary(const SampledLine& f, const char* where, double threshold = 1e-12);

}  // namespace shearcst
