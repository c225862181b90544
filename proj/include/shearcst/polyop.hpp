#pragma once

// Linear differential operators in (x1, x2, x3) with polynomial coefficients. They are
// composed exactly (Leibniz rule on the coefficients) for coefficient audits and
// applied to volumes through the stencil layer.

#include "shearcst/grid.hpp"
#include "shearcst/stencil.hpp"

#include <array>
#include <map>
#include <string>

namespace shearcst::polyop {

/// Exponents of (x1, x2, x3), or derivative orders (d1, d2, d3).
using Index = std::array<int, 3>;

class Poly {
public:
  Poly() = default;
  Poly(cplx c);  // NOLINT: constants convert implicitly
  Poly(double c) : Poly(cplx(c)) {}  // NOLINT
  static Poly var(int axis);  ///< axis in 1..3

  const std::map<Index, cplx>& terms() const { return terms_; }
  cplx coefficient(const Index& k) const;
  bool is_zero() const { return terms_.empty(); }
  cplx eval(double x1, double x2, double x3) const;
  Poly derivative(int axis, int order = 1) const;
  double max_abs() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a) { return cplx(-1.0) * a; }

private:
  void add(const Index& k, cplx c);
  std::map<Index, cplx> terms_;
};

/// sum over derivative indices alpha of coefficient_alpha(x) * d^alpha.
class DiffOp {
public:
  DiffOp() = default;
  DiffOp(const Poly& multiplier);  // NOLINT: zeroth-order operators convert implicitly
  /// d1^a d2^b d3^c.
  static DiffOp d(int a, int b, int c);
  static DiffOp d(int axis) { return d(axis == 1, axis == 2, axis == 3); }

  const std::map<Index, Poly>& terms() const { return terms_; }
  Poly coefficient(const Index& alpha) const;
  int order() const;
  /// Highest derivative order in x2.
  int x2_order() const;

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  /// Composition (a after b acts as a(b(F))).
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

  /// Largest |coefficient| over all monomials of all derivative terms.
  double max_abs() const;

private:
  void add(const Index& alpha, const Poly& c);
  std::map<Index, Poly> terms_;
};

/// [a, b] = ab - ba.
DiffOp commutator(const DiffOp& a, const DiffOp& b);

/// max |coefficient(a) - coefficient(b)| over all monomials.
double max_coefficient_difference(const DiffOp& a, const DiffOp& b);

/// Human-readable listing, one derivative term per line.
std::string to_string(const DiffOp& op);

/// Evaluates the operator on a volume: d2 across slices first, then in-plane derivatives,
/// then pointwise multiplication by the coefficient polynomials.
PhaseVolume apply(const DiffOp& op, const PhaseVolume& F, const StencilOptions& opts = {});

}  // namespace shearcst::polyop
