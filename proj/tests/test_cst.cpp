#include "shearcst/cst.hpp"
#include "shearcst/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace shearcst;

namespace {
const ModelParams p;
}

TEST(Cst, ClosedFormOracle) {
  const cplx a = cst_closed_form(1.0, 1.5, 0.3, 0.25, -0.4, p);
  EXPECT_NEAR(a.real(), 0.181482378135860125, 1e-14);
  EXPECT_NEAR(a.imag(), -0.625547931462797651, 1e-14);
  const cplx b = cst_closed_form(2.0, 0.7, -0.6, -0.25, 0.9, p);
  EXPECT_NEAR(b.real(), 0.219626198571849906, 1e-14);
  EXPECT_NEAR(b.imag(), -0.0238760992507436988, 1e-14);
}

TEST(Cst, FiducialIsNormalised) {
  const auto y = UniformGrid::centered(128, 0.0625);
  for (auto m : {Measure::dimensionless, Measure::lebesgue})
    for (double a : {0.0, 0.4}) {
      const auto phi = make_fiducial({a == 0.0 ? FiducialKind::gaussian : FiducialKind::generic, 1.3, a, m}, y, p);
      EXPECT_NEAR(phi.norm(p), 1.0, 1e-12);
    }
}

TEST(Cst, NarrowDomainRejected) {
  EXPECT_THROW(make_fiducial({FiducialKind::gaussian, 0.2}, UniformGrid::centered(16, 0.125), p), Error);
}

TEST(Cst, PipelineMatchesClosedForm) {
  const auto y = UniformGrid::centered(64, 0.125);
  for (auto [q, E] : {std::pair{1.0, 1.0}, {1.0, 1.5}, {2.0, 0.7}}) {
    const auto phi = make_fiducial({FiducialKind::gaussian, E}, y, p);
    const auto f = make_fiducial({FiducialKind::gaussian, q}, y, p);
    for (double x2 : {-0.25, 0.0, 0.25}) {
      const auto s = cst_slice(f, phi, x2, p);
      const auto c = cst_closed_form_slice(q, E, s.grid1, s.grid3, x2, p);
      double n = 0.0, d = 0.0;
      for (std::size_t k = 0; k < s.values.size(); ++k) {
        n += std::norm(s.values[k] - c.values[k]);
        d += std::norm(c.values[k]);
      }
      EXPECT_LT(std::sqrt(n / d), 1e-8) << q << ' ' << E << ' ' << x2;
    }
  }
}

TEST(Cst, ReconstructInvertsUpToFiducialNorm) {
  const auto y = UniformGrid::centered(64, 0.125);
  const auto phi = make_fiducial({FiducialKind::gaussian, 1.5}, y, p);
  const auto f = SampledLine::sample(y, [](double t) { return std::polar(std::exp(-2.0 * (t - 0.3) * (t - 0.3)), 0.8 * t); },
                                     phi.measure);
  const auto back = reconstruct(cst_slice(f, phi, 0.2, p), phi, p);
  for (std::size_t k = 0; k < f.values.size(); ++k) EXPECT_NEAR(std::abs(back.values[k] - f.values[k]), 0.0, 1e-8);
}

TEST(Cst, GridMismatchRejected) {
  const auto y = UniformGrid::centered(64, 0.125);
  const auto phi = make_fiducial({}, y, p);
  const auto s = cst_slice(phi, phi, 0.0, p);
  const auto t = cst_slice(phi, phi, 0.5, p);
  EXPECT_THROW(inner_product_x2(s, t, p), Error);
}
