#include "shearcst/polyop.hpp"

#include "shearcst/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace shearcst::polyop {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Poly::Poly(cplx c) { add({0, 0, 0}, c); }

Poly Poly::var(int axis) {
  if (axis < 1 || axis > 3) throw Error(ErrorCode::InvalidArgument, "polynomial variable index out of range");
  Poly p;
  Index k{0, 0, 0};
  k[static_cast<std::size_t>(axis - 1)] = 1;
  p.add(k, 1.0);
  return p;
}

void Poly::add(const Index& k, cplx c) {
  if (c == cplx{}) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx{}) terms_.erase(it);
  }
}

cplx Poly::coefficient(const Index& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? cplx{} : it->second;
}

cplx Poly::eval(double x1, double x2, double x3) const {
  cplx acc = 0.0;
  for (const auto& [k, c] : terms_) acc += c * std::pow(x1, k[0]) * std::pow(x2, k[1]) * std::pow(x3, k[2]);
  return acc;
}

Poly Poly::derivative(int axis, int order) const {
  const auto a = static_cast<std::size_t>(axis - 1);
  Poly r;
  for (const auto& [k, c] : terms_) {
    if (k[a] < order) continue;
    Index nk = k;
    double f = 1.0;
    for (int i = 0; i < order; ++i) f *= k[a] - i;
    nk[a] -= order;
    r.add(nk, c * f);
  }
  return r;
}

double Poly::max_abs() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
  return r;
}

DiffOp::DiffOp(const Poly& multiplier) { add({0, 0, 0}, multiplier); }

DiffOp DiffOp::d(int a, int b, int c) {
  DiffOp op;
  op.add({a, b, c}, Poly(1.0));
  return op;
}

void DiffOp::add(const Index& alpha, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly DiffOp::coefficient(const Index& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Poly{} : it->second;
}

int DiffOp::order() const {
  int r = 0;
  for (const auto& [a, c] : terms_) r = std::max(r, a[0] + a[1] + a[2]);
  return r;
}

int DiffOp::x2_order() const {
  int r = 0;
  for (const auto& [a, c] : terms_) r = std::max(r, a[1]);
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [a, c] : o.terms_) add(a, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [a, c] : o.terms_) add(a, -c);
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  // p d^alpha (q d^beta) = p sum_{gamma <= alpha} C(alpha, gamma) (d^gamma q) d^(alpha - gamma + beta)
  DiffOp r;
  for (const auto& [alpha, p] : a.terms_)
    for (const auto& [beta, q] : b.terms_)
      for (int g1 = 0; g1 <= alpha[0]; ++g1)
        for (int g2 = 0; g2 <= alpha[1]; ++g2)
          for (int g3 = 0; g3 <= alpha[2]; ++g3) {
            Poly dq = q.derivative(1, g1).derivative(2, g2).derivative(3, g3);
            if (dq.is_zero()) continue;
            const double w = binomial(alpha[0], g1) * binomial(alpha[1], g2) * binomial(alpha[2], g3);
            r.add({alpha[0] - g1 + beta[0], alpha[1] - g2 + beta[1], alpha[2] - g3 + beta[2]}, cplx(w) * p * dq);
          }
  return r;
}

double DiffOp::max_abs() const {
  double m = 0.0;
  for (const auto& [a, c] : terms_) m = std::max(m, c.max_abs());
  return m;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

double max_coefficient_difference(const DiffOp& a, const DiffOp& b) { return (a - b).max_abs(); }

std::string to_string(const DiffOp& op) {
  std::ostringstream out;
  for (const auto& [alpha, p] : op.terms()) {
    out << "d[" << alpha[0] << "," << alpha[1] << "," << alpha[2] << "]:";
    for (const auto& [k, c] : p.terms())
      out << " (" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)x1^" << k[0] << "x2^" << k[1] << "x3^"
          << k[2];
    out << '\n';
  }
  return out.str();
}

PhaseVolume apply(const DiffOp& op, const PhaseVolume& F, const StencilOptions& opts) {
  PhaseVolume out = F;
  for (std::size_t k = 0; k < out.size(); ++k) std::fill(out[k].values.begin(), out[k].values.end(), cplx{});
  std::map<int, PhaseVolume> by_x2;
  for (const auto& [alpha, poly] : op.terms()) {
    auto it = by_x2.find(alpha[1]);
    if (it == by_x2.end()) {
      PhaseVolume base = alpha[1] == 0 ? F : partial_x2(F, alpha[1], opts);
      it = by_x2.emplace(alpha[1], std::move(base)).first;
    }
    PhaseVolume d = it->second;
    if (alpha[0] > 0) d = partial(d, Axis::x1, alpha[0], opts);
    if (alpha[2] > 0) d = partial(d, Axis::x3, alpha[2], opts);
    out += multiply_by(std::move(d), [&poly](double x1, double x2, double x3) { return poly.eval(x1, x2, x3); });
  }
  return out;
}

}  // namespace shearcst::polyop
