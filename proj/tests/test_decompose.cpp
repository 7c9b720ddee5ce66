#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tricop/decompose.hpp"
#include "tricop/error.hpp"

namespace tricop {
namespace {

constexpr double kPi = std::numbers::pi;

double angle_gap(double x, double y) { return std::abs(std::remainder(x - y, 2.0 * kPi)); }

void expect_consistent(const MixtureDecomposition& d, double recon_tol = 1e-10) {
  ASSERT_GE(d.components.size(), 1u);
  ASSERT_LE(d.components.size(), 2u);
  EXPECT_NEAR(d.total_weight(), 1.0, 1e-12);
  const CorrelationMatrix3 back = d.reconstruct();
  EXPECT_NEAR(back.p, d.target.p, recon_tol);
  EXPECT_NEAR(back.q, d.target.q, recon_tol);
  EXPECT_NEAR(back.r, d.target.r, recon_tol);
  for (const auto& c : d.components) {
    EXPECT_GE(c.weight, 0.0);
    EXPECT_LE(c.weight, 1.0);
    EXPECT_LE(std::abs(delta(c.point.matrix())), 1e-12);
  }
}

TEST(Decompose, IdentitySplitsIntoPlusMinusOne) {
  const MixtureDecomposition d = decompose({0, 0, 0});
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_NEAR(d.components[0].weight, 0.5, 1e-15);
  EXPECT_NEAR(d.components[1].weight, 0.5, 1e-15);
  EXPECT_NEAR(d.components[0].point.matrix().r, 1.0, 1e-15);
  EXPECT_NEAR(d.components[1].point.matrix().r, -1.0, 1e-15);
  EXPECT_NEAR(d.components[0].point.a(), kPi / 2, 1e-15);
  EXPECT_NEAR(d.components[0].point.b(), -kPi / 2, 1e-15);
  EXPECT_NEAR(d.components[0].point.c(), 0.0, 1e-15);
  EXPECT_NEAR(d.components[1].point.a(), kPi / 2, 1e-15);
  EXPECT_NEAR(d.components[1].point.b(), kPi / 2, 1e-15);
  EXPECT_LT(angle_gap(d.components[1].point.c(), -kPi), 1e-15);
  expect_consistent(d);
}

TEST(Decompose, ExtremalInputIsSingleComponent) {
  const MixtureDecomposition d = decompose({-0.5, -0.5, -0.5});
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0].weight, 1.0);
  for (double a : d.components[0].point.angles()) EXPECT_LT(angle_gap(a, 2 * kPi / 3), 1e-12);
  expect_consistent(d);

  const MixtureDecomposition ones = decompose({1, 1, 1});
  ASSERT_EQ(ones.components.size(), 1u);
  EXPECT_EQ(ones.components[0].point.rank(), 1);
}

TEST(Decompose, GenericInteriorExample) {
  // Roots from the closed form and, independently, from bisection on delta.
  const double p = 0.3, q = 0.5, r = 0.2;
  const double r_hi = p * q + std::sqrt((1 - p * p) * (1 - q * q));
  const double r_lo = p * q - std::sqrt((1 - p * p) * (1 - q * q));
  const auto [bis_lo, bis_hi] = testing::delta_roots_by_bisection(p, q);
  EXPECT_NEAR(r_hi, bis_hi, 1e-14);
  EXPECT_NEAR(r_lo, bis_lo, 1e-14);
  EXPECT_NEAR(r_hi, 0.15 + 0.8261355820929152, 1e-12);
  const double lambda = (r - r_lo) / (r_hi - r_lo);
  EXPECT_NEAR(lambda, 0.5303, 5e-5);

  const MixtureDecomposition d = decompose({p, q, r});
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_NEAR(d.components[0].weight, lambda, 1e-14);
  EXPECT_NEAR(d.components[0].point.matrix().r, r_hi, 1e-14);
  EXPECT_NEAR(d.components[1].point.matrix().r, r_lo, 1e-14);
  EXPECT_NEAR(d.reconstruct().r, 0.2, 1e-12);
  expect_consistent(d);
}

TEST(Decompose, RejectsInvalidMatrix) {
  try {
    decompose({-0.6, -0.6, -0.6});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidMatrix);
  }
}

TEST(Decompose, SlightlyOutsideWithinTolIsClampedToBoundary) {
  const CorrelationMatrix3 m{-0.5, -0.5, -0.5 - 1e-11};
  ASSERT_LT(delta(m), 0.0);
  const MixtureDecomposition d = decompose(m);
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_NEAR(d.components[0].point.matrix().r, -0.5, 1e-12);
}

TEST(Decompose, SwitchesAxisWhenHeldCoordinateIsNearOne) {
  // delta = (1 - p)(0.82 + p) ~ 2e-15, so splitting along r would take a
  // square root of ~2e-15.
  const CorrelationMatrix3 m{1.0 - 1e-15, 0.3, 0.3};
  const MixtureDecomposition d = decompose(m);
  expect_consistent(d);
}

TEST(Decompose, PropertiesOnRandomValidMatrices) {
  std::mt19937_64 gen(21);
  int two = 0;
  for (int i = 0; i < 100000; ++i) {
    const CorrelationMatrix3 m = testing::random_valid_matrix(gen);
    const MixtureDecomposition d = decompose(m);
    expect_consistent(d);
    if (d.components.size() == 2) {
      ++two;
      // The target lies between the two roots along the split axis.
      const double hi = d.components[0].point.matrix().r;
      const double lo = d.components[1].point.matrix().r;
      EXPECT_LE(lo, m.r + 1e-15);
      EXPECT_LE(m.r, hi + 1e-15);
      EXPECT_NEAR(d.components[0].point.matrix().p, m.p, 1e-15);
      EXPECT_NEAR(d.components[1].point.matrix().q, m.q, 1e-15);
    }
    if (::testing::Test::HasFailure()) break;
  }
  EXPECT_GT(two, 99000);
}

TEST(Decompose, RootsStayInUnitInterval) {
  std::mt19937_64 gen(22);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 100000; ++i) {
    const double p = u(gen), q = u(gen);
    const double s = std::sqrt((1 - p * p) * (1 - q * q));
    EXPECT_LE(std::abs(p * q + s), 1.0 + 1e-15);
    EXPECT_LE(std::abs(p * q - s), 1.0 + 1e-15);
    EXPECT_NEAR(p * q + s, std::cos(std::acos(p) - std::acos(q)), 1e-12);
  }
}

TEST(Decompose2D, Examples) {
  EXPECT_EQ(decompose_2d(1.0), std::make_pair(1.0, 0.0));
  EXPECT_EQ(decompose_2d(0.0), std::make_pair(0.5, 0.5));
  const auto [plus, minus] = decompose_2d(0.4);
  EXPECT_NEAR(plus, 0.7, 1e-15);
  EXPECT_NEAR(minus, 0.3, 1e-15);
  EXPECT_THROW(decompose_2d(1.01), Error);
}

}  // namespace
}  // namespace tricop
