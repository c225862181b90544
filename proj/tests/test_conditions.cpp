#include "shearcst/conditions.hpp"
#include "shearcst/cst.hpp"
#include "shearcst/diagnostics.hpp"
#include "shearcst/errors.hpp"

#include <gtest/gtest.h>

using namespace shearcst;

namespace {

const ModelParams p;

PhaseVolume image(double q, double E) {
  const auto y = UniformGrid::centered(64, 0.125);
  const auto phi = make_fiducial({FiducialKind::gaussian, E}, y, p);
  const auto f = make_fiducial({FiducialKind::gaussian, q}, y, p);
  return cst_volume(f, phi, {-4.0 / 256.0, 1.0 / 256.0, 9}, p);
}

}  // namespace

TEST(Conditions, OperatorShapes) {
  const auto C = analyticity_operator(1.5, p);
  EXPECT_EQ(C.order(), 1);
  EXPECT_EQ(C.x2_order(), 0);
  const auto S = structural_operator(p);
  EXPECT_EQ(S.order(), 2);
  EXPECT_EQ(S.x2_order(), 1);
}

TEST(Conditions, AnnihilateCstImages) {
  ScopedDiagnosticHandler quiet([](const std::string&) {});
  for (auto [q, E] : {std::pair{1.0, 1.5}, {2.0, 0.7}}) {
    const auto W = image(q, E);
    EXPECT_LT(residual(W, apply_C(W, E, p), ConditionOperator::C, p).relative, 1e-5);
    EXPECT_LT(residual(W, apply_S(W, p), ConditionOperator::S, p).relative, 1e-5);
  }
}

TEST(Conditions, WrongSqueezeIsDetected) {
  ScopedDiagnosticHandler quiet([](const std::string&) {});
  const auto W = image(1.0, 1.5);
  EXPECT_GT(residual(W, apply_C(W, 1.0, p), ConditionOperator::C, p).relative, 1e-2);
}

TEST(Conditions, CasimirActionsAgree) {
  ScopedDiagnosticHandler quiet([](const std::string&) {});
  const auto W = image(1.0, 1.5);
  const auto a = casimir_action(W, CasimirAction::lie_derivative, p);
  const auto b = casimir_action(W, CasimirAction::derived_pi_tilde, p);
  EXPECT_LT(max_abs(a - b), 1e-10 * max_abs(a));
}

TEST(Conditions, S_NeedsSlices) {
  const auto W = image(1.0, 1.5);
  EXPECT_THROW(apply_S(PhaseVolume({W[0], W[1]}), p), Error);
}

TEST(Conditions, PeeledImageIsHolomorphic) {
  ScopedDiagnosticHandler quiet([](const std::string&) {});
  const double E = 1.5;
  const auto y = UniformGrid::centered(256, 1.0 / 16.0);
  const auto phi = make_fiducial({FiducialKind::gaussian, E}, y, p);
  const auto f = make_fiducial({FiducialKind::gaussian, 1.0}, y, p);
  const auto W = cst_slice(f, phi, 0.0, p);
  StencilOptions central;
  central.in_plane = Differencing::central;
  central.accuracy = 12;
  const auto r = residual(W, unpeel(cauchy_riemann(peel(W, E, p), E, central), E, p), ConditionOperator::CR, p);
  EXPECT_LT(r.relative, 1e-6);
}

TEST(Conditions, HolomorphicFitOfPolynomial) {
  const double E = 1.5;
  const auto g = UniformGrid::centered(64, 1.0 / 16.0);
  PhaseSlice B(g, g, 0.0);
  for (std::size_t i = 0; i < g.count; ++i)
    for (std::size_t k = 0; k < g.count; ++k) {
      const cplx z(g.at(k), -E * g.at(i));
      B.values[i * g.count + k] = 1.0 + 2.0 * z - z * z * z;
    }
  const auto fit = fit_holomorphic(B, E, 4);
  EXPECT_LT(fit.relative_residual, 1e-12);
  EXPECT_NEAR(std::abs(fit.coefficients[3] + 1.0), 0.0, 1e-9);
}
