#pragma once

#include <array>
#include <vector>

namespace shearcst {

/// Point of the step-3 group in canonical coordinates
/// (x1, x2, x3, x4) = exp(x4 X4) exp(x3 X3) exp(x2 X2) exp(x1 X1).
///
/// Physical units: x1 ~ T/(M L), x2 ~ M/T, x3 ~ 1/L, x4 ~ T/(M L^2).
struct GroupElement {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double x4 = 0.0;

  static constexpr GroupElement identity() { return {}; }
  bool is_finite() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Heisenberg group element in polarised coordinates, law
/// (x,y,s)(x',y',s') = (x+x', y+y', s+s'+x y').
struct HeisenbergElement {
  double x = 0.0;
  double y = 0.0;
  double s = 0.0;
  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

/// Coefficients over the basis {X1, X2, X3, X4}.
struct AlgebraVector {
  std::array<double, 4> c{};

  static AlgebraVector basis(int index);  ///< index in 1..4
  double operator[](int index) const { return c[static_cast<std::size_t>(index - 1)]; }

  AlgebraVector operator+(const AlgebraVector& o) const;
  AlgebraVector operator-(const AlgebraVector& o) const;
  AlgebraVector operator*(double s) const;
  friend bool operator==(const AlgebraVector&, const AlgebraVector&) = default;
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
HeisenbergElement multiply(const HeisenbergElement& g, const HeisenbergElement& h);
GroupElement embed_heisenberg(const HeisenbergElement& h);

/// Bilinear extension of [X1,X2] = X3, [X1,X3] = X4.
AlgebraVector bracket(const AlgebraVector& u, const AlgebraVector& v);

/// A product X_i X_j in the universal enveloping algebra, with a coefficient.
struct EnvelopingMonomial {
  int left = 0;
  int right = 0;
  double coefficient = 0.0;
  friend bool operator==(const EnvelopingMonomial&, const EnvelopingMonomial&) = default;
};

/// Quadratic Casimir element X3^2 - 2 X2 X4 of the group's Lie algebra.
struct CasimirDescriptor {
  std::vector<EnvelopingMonomial> terms;
};

CasimirDescriptor casimir_coefficients();

/// Scalar by which the Casimir acts in the irreducible representation
/// labelled by (h2, hbar4): 8 pi^2 h2 hbar4.
double casimir_value(double h2, double hbar4);

}  // namespace shearcst
