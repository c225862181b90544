#include "shearcst/dynamics.hpp"
#include "shearcst/conditions.hpp"
#include "shearcst/errors.hpp"
#include "shearcst/spectral.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace shearcst;
using std::numbers::pi;

namespace {

const ModelParams p;
const UniformGrid g1 = UniformGrid::centered(96, 0.125);
const UniformGrid g3 = UniformGrid::centered(128, 0.125);

double max_diff(const PhaseSlice& a, const PhaseSlice& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) m = std::max(m, std::abs(a.values[k] - b.values[k]));
  return m;
}

}  // namespace

TEST(Dynamics, HeatDiffusionOracle) { EXPECT_NEAR(heat_diffusion(p), -0.0397887357729738339, 1e-16); }

TEST(Dynamics, GaussianSeedOracle) {
  const GaussianSeed g(0.7, p);
  const cplx v = g.value({0.4, 0.1}, {-0.3, 0.2});
  EXPECT_NEAR(v.real(), 0.888711838892531649, 1e-14);
  EXPECT_NEAR(v.imag(), -0.0405306656233372410, 1e-14);
  EXPECT_NEAR(g.radius(), 2.0 * pi / 0.7, 1e-12);
}

TEST(Dynamics, HeatPolynomialSolvesHeatEquation) {
  const HeatPolynomial h({0.3, cplx(0.0, 1.0), 0.5, 0.2, -0.1}, p);
  const double D = heat_diffusion(p), e = 1e-4;
  const cplx z(0.3, -0.2), u(0.1, 0.05);
  const cplx fu = (h.value(z, u + e) - h.value(z, u - e)) / (2.0 * e);
  const cplx fzz = (h.value(z + e, u) - 2.0 * h.value(z, u) + h.value(z - e, u)) / (e * e);
  EXPECT_NEAR(std::abs(fu - D * fzz), 0.0, 1e-6);
}

TEST(Dynamics, QuadratureMatchesGaussianClosedForm) {
  const double alpha = 0.7;
  const SampledLine g =
      SampledLine::sample(UniformGrid::centered(2048, 1.0 / 128.0), [&](double s) { return std::exp(-alpha * s * s); });
  const GaussianSeed closed(alpha, p);
  for (double z : {-0.5, 0.0, 0.9}) EXPECT_NEAR(std::abs(heat_propagate_at(g, z, {-0.3, 0.2}, p) - closed.value(z, {-0.3, 0.2})), 0.0, 1e-6);
  EXPECT_THROW(heat_propagate_at(g, 0.0, {0.3, 0.0}, p), Error);
}

TEST(Dynamics, ReductionCoefficientAudit) {
  for (double E : {0.7, 1.0, 1.5}) {
    const auto target = reduced_H1_operator(E, p);
    EXPECT_LT(polyop::max_coefficient_difference(reduction_expansion_G(E, p), target), 1e-13 * target.max_abs());
    EXPECT_EQ(reduction_expansion_G(E, p).order(), 1);
  }
  EXPECT_LT(polyop::max_coefficient_difference(reduction_expansion_heisenberg(p), reduced_heisenberg_operator(p)), 1e-14);
}

TEST(Dynamics, ReductionIdentityAtCentre) {
  const GaussianSeed seed(0.5, p);
  for (double t : {0.0, 0.4, 2.0}) {
    const auto G = evolve_G(seed, p.m_omega(), t, g1, g3, {0.0, 1.0, 1}, p)[0];
    const auto H = evolve_heisenberg(heisenberg_profile(seed, p), t, g1, g3, p);
    EXPECT_LT(max_diff(G, H), 1e-10);
  }
}

TEST(Dynamics, EvolutionIsPeriodic) {
  const HeatPolynomial seed({0.3, 1.0, 0.5}, p);
  const double T = 2.0 * pi / p.omega;
  const auto a = evolve_G(seed, 1.5, 0.3, g1, g3, {0.0, 1.0, 1}, p)[0];
  auto b = evolve_G(seed, 1.5, 0.3 + 2.0 * T, g1, g3, {0.0, 1.0, 1}, p)[0];
  EXPECT_LT(max_diff(a, b), 1e-10 * max_abs(a.values));
}

TEST(Dynamics, SqueezeOutOfRange) {
  const GaussianSeed seed(4.0 * pi, p);  // radius 1/2
  EXPECT_THROW(evolve_G(seed, 5.0, 0.0, g1, g3, {0.0, 1.0, 1}, p), Error);
  EXPECT_NO_THROW(evolve_G(seed, 1.5, 0.0, g1, g3, {0.0, 1.0, 1}, p));
}

TEST(Geometry, CayleyOracleAndCircle) {
  const cplx u = cayley_map(0.7, 1.5, p);
  EXPECT_NEAR(u.real(), -0.258160237388724029, 1e-15);
  EXPECT_NEAR(u.imag(), -0.207715133531157259, 1e-15);
  const auto geo = squeeze_geometry(1.5, p);
  EXPECT_NEAR(geo.center, -0.6, 1e-15);
  EXPECT_NEAR(geo.radius, 0.4, 1e-15);
  EXPECT_NEAR(std::abs(u - geo.center), geo.radius, 1e-15);
  EXPECT_EQ(cayley_map(0.0, p.m_omega(), p), cplx(0.0));
}

TEST(Geometry, SqueezeBoundsAndArcs) {
  const auto [lo, hi] = squeeze_bounds(1.0 / 3.0, p);
  EXPECT_EQ(lo, 0.5);
  EXPECT_EQ(hi, 2.0);
  EXPECT_TRUE(admissible_x2(1.0 / 3.0, 1.0, p).has_value());
  EXPECT_TRUE(admissible_x2(1.0 / 3.0, 1.9, p).has_value());
  EXPECT_FALSE(admissible_x2(1.0 / 3.0, 0.45, p).has_value());
  EXPECT_FALSE(admissible_x2(1.0 / 3.0, 2.1, p).has_value());
}

TEST(Geometry, JumpTimesAndShear) {
  for (double t : jump_times(0.5, 1.5, p)) {
    EXPECT_NEAR((std::polar(1.0, -2.0 * p.omega * t) * cayley_map(0.5, 1.5, p)).real(), 0.0, 1e-12);
    EXPECT_GE(t, 0.0);
    EXPECT_LT(t, pi / p.omega);
  }
  EXPECT_THROW(jump_times(0.0, p.m_omega(), p), Error);
  EXPECT_EQ(shear(1.0, 0.0, 1.0), (std::pair{1.0, -1.0}));
}
