#include "shearcst/group.hpp"
#include "shearcst/errors.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace shearcst;

TEST(Group, MultiplyOracle) {
  const GroupElement g{1.0, 2.0, 3.0, 4.0}, h{0.5, -1.0, 2.0, 0.25};
  EXPECT_EQ(multiply(g, h), (GroupElement{1.5, 1.0, 4.0, 5.75}));
}

TEST(Group, IdentityAndInverse) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int n = 0; n < 200; ++n) {
    const GroupElement g{d(rng), d(rng), d(rng), d(rng)};
    EXPECT_EQ(multiply(g, GroupElement::identity()), g);
    EXPECT_EQ(multiply(GroupElement::identity(), g), g);
    const auto e = multiply(g, inverse(g));
    EXPECT_NEAR(e.x1, 0.0, 1e-12);
    EXPECT_NEAR(e.x2, 0.0, 1e-12);
    EXPECT_NEAR(e.x3, 0.0, 1e-12);
    EXPECT_NEAR(e.x4, 0.0, 1e-12);
  }
}

TEST(Group, NotCommutative) {
  const GroupElement g{1.0, 0.0, 0.0, 0.0}, h{0.0, 1.0, 0.0, 0.0};
  EXPECT_NE(multiply(g, h), multiply(h, g));
}

TEST(Group, HeisenbergEmbedsAsSubgroup) {
  const HeisenbergElement a{0.5, -1.5, 2.0}, b{1.25, 0.75, -0.5};
  EXPECT_EQ(embed_heisenberg(multiply(a, b)), multiply(embed_heisenberg(a), embed_heisenberg(b)));
}

TEST(Group, BracketTable) {
  const auto X = [](int k) { return AlgebraVector::basis(k); };
  EXPECT_EQ(bracket(X(1), X(2)), X(3));
  EXPECT_EQ(bracket(X(1), X(3)), X(4));
  EXPECT_EQ(bracket(X(2), X(1)), X(3) * -1.0);
  EXPECT_EQ(bracket(X(2), X(3)), AlgebraVector{});
  EXPECT_EQ(bracket(X(1), X(4)), AlgebraVector{});
  EXPECT_THROW(AlgebraVector::basis(5), Error);
}

TEST(Group, CasimirIsX3SquaredMinusTwoX2X4) {
  const auto c = casimir_coefficients();
  ASSERT_EQ(c.terms.size(), 2u);
  EXPECT_EQ(c.terms[0], (EnvelopingMonomial{3, 3, 1.0}));
  EXPECT_EQ(c.terms[1], (EnvelopingMonomial{2, 4, -2.0}));
  EXPECT_DOUBLE_EQ(casimir_value(0.5, 1.0), 4.0 * std::numbers::pi * std::numbers::pi);
}
