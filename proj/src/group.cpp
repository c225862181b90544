#include "shearcst/group.hpp"
#include "shearcst/errors.hpp"

#include <cmath>
#include <numbers>

namespace shearcst {

bool GroupElement::is_finite() const {
  return std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3) && std::isfinite(x4);
}

AlgebraVector AlgebraVector::basis(int index) {
  if (index < 1 || index > 4) throw Error(ErrorCode::InvalidArgument, "basis index must be in 1..4");
  AlgebraVector v;
  v.c[static_cast<std::size_t>(index - 1)] = 1.0;
  return v;
}

AlgebraVector AlgebraVector::operator+(const AlgebraVector& o) const {
  AlgebraVector r;
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

AlgebraVector AlgebraVector::operator-(const AlgebraVector& o) const {
  AlgebraVector r;
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

AlgebraVector AlgebraVector::operator*(double s) const {
  AlgebraVector r;
  for (std::size_t i = 0; i < 4; ++i) r.c[i] = c[i] * s;
  return r;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  // Evaluated term by term in the order of the group law.
  return {g.x1 + h.x1,
          g.x2 + h.x2,
          g.x3 + h.x3 + g.x1 * h.x2,
          g.x4 + h.x4 + g.x1 * h.x3 + 0.5 * g.x1 * g.x1 * h.x2};
}

GroupElement inverse(const GroupElement& g) {
  return {-g.x1, -g.x2, -g.x3 + g.x1 * g.x2, -g.x4 + g.x1 * g.x3 - 0.5 * g.x1 * g.x1 * g.x2};
}

HeisenbergElement multiply(const HeisenbergElement& g, const HeisenbergElement& h) {
  return {g.x + h.x, g.y + h.y, g.s + h.s + g.x * h.y};
}

GroupElement embed_heisenberg(const HeisenbergElement& h) { return {h.x, 0.0, h.y, h.s}; }

AlgebraVector bracket(const AlgebraVector& u, const AlgebraVector& v) {
  // [u, v] = (u1 v2 - u2 v1) X3 + (u1 v3 - u3 v1) X4
  AlgebraVector r;
  r.c[2] = u.c[0] * v.c[1] - u.c[1] * v.c[0];
  r.c[3] = u.c[0] * v.c[2] - u.c[2] * v.c[0];
  return r;
}

CasimirDescriptor casimir_coefficients() {
  return {{{3, 3, 1.0}, {2, 4, -2.0}}};
}

double casimir_value(double h2, double hbar4) {
  return 8.0 * std::numbers::pi * std::numbers::pi * h2 * hbar4;
}

}  // namespace shearcst
