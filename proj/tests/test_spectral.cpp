#include "shearcst/spectral.hpp"
#include "shearcst/cst.hpp"
#include "shearcst/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace shearcst;

namespace {

const ModelParams p;
const UniformGrid g1 = UniformGrid::centered(96, 0.125);
const UniformGrid g3 = UniformGrid::centered(128, 0.125);
const UniformGrid g2{0.25, 1.0, 1};

double rel(const PhaseVolume& a, const PhaseVolume& b) {
  double n = 0.0, d = 0.0;
  for (std::size_t k = 0; k < a[0].values.size(); ++k) {
    n += std::norm(a[0].values[k] - b[0].values[k]);
    d += std::norm(b[0].values[k]);
  }
  return std::sqrt(n / d);
}

}  // namespace

TEST(Spectral, HermiteOracle) {
  const cplx h = hermite(5, {0.3, 0.2});
  EXPECT_NEAR(h.real(), 37.24896, 1e-11);
  EXPECT_NEAR(h.imag(), 16.67904, 1e-11);
  for (int j = 0; j <= 12; ++j) EXPECT_NEAR(std::abs(hermite(j, {0.7, -0.4}) - hermite_sum(j, {0.7, -0.4})), 0.0, 1e-8);
  EXPECT_EQ(hermite_coefficients(2), (std::vector<double>{-2.0, 0.0, 4.0}));
}

TEST(Spectral, EigenProfileOracle) {
  const cplx z(0.4, 0.1), u(-0.3, 0.2);
  const cplx e2 = eigen_profile(2, p).value(z, u), e3 = eigen_profile(3, p).value(z, u);
  EXPECT_NEAR(e2.real(), 1.54499691580347427, 1e-13);
  EXPECT_NEAR(e2.imag(), 0.569439913868029166, 1e-13);
  EXPECT_NEAR(e3.real(), -1.55350137417556742, 1e-13);
  EXPECT_NEAR(e3.imag(), -0.637665528561197757, 1e-13);
  EXPECT_THROW(eigen_profile(max_eigen_degree + 1, p), Error);
}

TEST(Spectral, VacuumIsCstOfOscillatorGroundState) {
  EXPECT_NEAR(std::abs(vacuum_value(0.3, 0.25, -0.4, 1.5, p) - cst_closed_form(p.m_omega(), 1.5, 0.3, 0.25, -0.4, p)), 0.0,
              1e-15);
}

TEST(Spectral, LadderRelations) {
  const double E = 1.5;
  std::vector<PhaseVolume> modes;
  for (int j = 0; j <= 5; ++j) modes.push_back(eigenstate(j, g1, g3, g2, E, p));
  EXPECT_LT(max_abs(ladder_minus(modes[0], p)), 1e-9);
  for (int j = 1; j <= 5; ++j) {
    EXPECT_LT(rel(ladder_minus(modes[j], p), std::sqrt(double(j)) * modes[j - 1]), 1e-8);
    EXPECT_LT(rel(ladder_plus(modes[j - 1], p), std::sqrt(double(j)) * modes[j]), 1e-8);
  }
  for (int j = 0; j <= 5; ++j)
    for (int k = 0; k <= 5; ++k)
      EXPECT_NEAR(std::abs(inner_product_x2(modes[j][0], modes[k][0], p) - (j == k ? 1.0 : 0.0)), 0.0, 1e-9);
}

TEST(Spectral, EigenstatesEvolveByPhase) {
  const double E = 1.5, t = 0.7;
  for (int j : {0, 3}) {
    const auto a = evolve_eigenstate(j, t, g1, g3, g2, E, p);
    const auto b = std::polar(1.0, -p.omega * (j + 0.5) * t) * eigenstate(j, g1, g3, g2, E, p);
    EXPECT_LT(rel(a, b), 1e-12);
  }
}

TEST(Spectral, VacuumInZUCoordinates) {
  const UniformGrid c{0.0, 1.0, 1};
  const auto a = vacuum_zu_volume(g1, g3, c, p.m_omega(), p);
  const auto fit = fit_proportional(a[0], vacuum(g1, g3, c, p.m_omega(), p)[0]);
  EXPECT_LT(fit.spread, 1e-10);
}
