#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "tricop/corrmat.hpp"
#include "tricop/error.hpp"

namespace tricop {
namespace {

constexpr double kPi = std::numbers::pi;

// Angles compared modulo 2 pi.
double angle_gap(double x, double y) { return std::abs(std::remainder(x - y, 2.0 * kPi)); }

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected tricop::Error";
  return ErrorCode::MalformedData;
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta({0, 0, 0}), 1.0);
  EXPECT_EQ(delta({1, 1, 1}), 0.0);
  EXPECT_EQ(delta({-0.5, -0.5, -0.5}), 0.0);
  EXPECT_NEAR(delta({0.9, 0.9, 0.9}), 0.028, 1e-15);
  EXPECT_NEAR(delta({0.9, 0.9, 0.9}), testing::cofactor_det({0.9, 0.9, 0.9}), 1e-15);
}

TEST(Delta, MatchesCofactorExpansion) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  constexpr double ulp = std::numeric_limits<double>::epsilon();
  for (int i = 0; i < 100000; ++i) {
    const CorrelationMatrix3 m{u(gen), u(gen), u(gen)};
    EXPECT_NEAR(delta(m), testing::cofactor_det(m), 4 * ulp) << m.p << ' ' << m.q << ' ' << m.r;
  }
}

TEST(Delta, VanishesOnAngleTriples) {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 100000; ++i) {
    const double a = u(gen);
    const double b = u(gen);
    const double c = -(a + b) + 2.0 * kPi * std::round(u(gen));
    EXPECT_NEAR(delta({std::cos(a), std::cos(b), std::cos(c)}), 0.0, 1e-12);
  }
}

TEST(MatrixElement, LayoutMatchesDefinition) {
  const CorrelationMatrix3 m{0.1, 0.2, 0.3};
  EXPECT_EQ(m(0, 1), 0.3);
  EXPECT_EQ(m(1, 0), 0.3);
  EXPECT_EQ(m(0, 2), 0.2);
  EXPECT_EQ(m(1, 2), 0.1);
  EXPECT_EQ(m(2, 2), 1.0);
}

TEST(IsValid, Examples) {
  EXPECT_TRUE(is_valid({0, 0, 0}));
  EXPECT_TRUE(is_valid({-0.5, -0.5, -0.5}, 1e-12));
  EXPECT_FALSE(is_valid({-0.6, -0.6, -0.6}));
  EXPECT_NEAR(delta({-0.6, -0.6, -0.6}), -0.512, 1e-15);
  EXPECT_FALSE(is_valid({1.5, 0, 0}));
  EXPECT_FALSE(is_valid({std::nan(""), 0, 0}));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify({1, 1, 1}), MatrixClass::ExtremeRank1);
  EXPECT_EQ(classify({1, -1, -1}), MatrixClass::ExtremeRank1);
  EXPECT_EQ(classify({-0.5, -0.5, -0.5}), MatrixClass::ExtremeRank2);
  EXPECT_EQ(classify({0.1, 0.2, 0.3}), MatrixClass::Interior);
  EXPECT_NEAR(delta({0.1, 0.2, 0.3}), 0.872, 1e-15);
  EXPECT_EQ(classify({-0.6, -0.6, -0.6}), MatrixClass::Invalid);
  EXPECT_EQ(classify({0, 0, -1}), MatrixClass::ExtremeRank2);
}

TEST(Classify, InvariantUnderSignFlipGroup) {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    CorrelationMatrix3 m{u(gen), u(gen), u(gen)};
    if (i % 4 == 0) m = testing::random_rank2_point(gen).matrix();
    const MatrixClass c = classify(m);
    EXPECT_EQ(classify({m.p, -m.q, -m.r}), c);
    EXPECT_EQ(classify({-m.p, m.q, -m.r}), c);
    EXPECT_EQ(classify({-m.p, -m.q, m.r}), c);
  }
}

TEST(ExtremePoint, RejectsAnglesNotSummingToZero) {
  EXPECT_EQ(code_of([] { ExtremePoint3(0.1, 0.2, 0.3); }), ErrorCode::OutOfRange);
  EXPECT_NO_THROW(ExtremePoint3(kPi, kPi, 0.0));
  EXPECT_NO_THROW(ExtremePoint3(2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3));
}

TEST(ExtremePoint, Rank) {
  EXPECT_EQ(ExtremePoint3(0, 0, 0).rank(), 1);
  EXPECT_EQ(ExtremePoint3(0, kPi, kPi).rank(), 1);
  EXPECT_EQ(ExtremePoint3(kPi, 0, kPi).rank(), 1);
  EXPECT_EQ(ExtremePoint3(kPi, kPi, 0).rank(), 1);
  EXPECT_EQ(ExtremePoint3::from_ab(2 * kPi / 3, 2 * kPi / 3).rank(), 2);
  EXPECT_EQ(ExtremePoint3::from_ab(kPi / 2, kPi / 2).rank(), 2);
}

TEST(RankOneSigns, FourCanonicalTriples) {
  const std::array<RankOneSigns, 4> signs{{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}}};
  for (const auto& s : signs) {
    const ExtremePoint3 e = s.angles();
    EXPECT_EQ(e.rank(), 1);
    const CorrelationMatrix3 m = s.matrix();
    EXPECT_NEAR(e.matrix().p, m.p, 1e-15);
    EXPECT_NEAR(e.matrix().q, m.q, 1e-15);
    EXPECT_NEAR(e.matrix().r, m.r, 1e-15);
    EXPECT_EQ(classify(m), MatrixClass::ExtremeRank1);
    const RankOneSigns back = RankOneSigns::from(e);
    EXPECT_EQ(back.e2, s.e2);
    EXPECT_EQ(back.e3, s.e3);
  }
}

TEST(ToAngles, Examples) {
  const ExtremePoint3 ones = to_angles({1, 1, 1});
  EXPECT_EQ(ones.a(), 0.0);
  EXPECT_EQ(ones.b(), 0.0);
  EXPECT_EQ(ones.c(), 0.0);

  const ExtremePoint3 third = to_angles({-0.5, -0.5, -0.5});
  EXPECT_NEAR(third.a(), 2 * kPi / 3, 1e-12);
  EXPECT_NEAR(third.b(), 2 * kPi / 3, 1e-12);
  EXPECT_LT(angle_gap(third.c(), -4 * kPi / 3), 1e-12);
  EXPECT_NEAR(third.c(), 2 * kPi / 3, 1e-12);

  const ExtremePoint3 flat = to_angles({0, 0, -1});
  EXPECT_NEAR(flat.a(), kPi / 2, 1e-15);
  EXPECT_NEAR(flat.b(), kPi / 2, 1e-15);
  EXPECT_LT(angle_gap(flat.c(), -kPi), 1e-15);
  EXPECT_EQ(delta({0, 0, -1}), 0.0);
}

TEST(ToAngles, CanonicalRanges) {
  std::mt19937_64 gen(14);
  for (int i = 0; i < 10000; ++i) {
    const ExtremePoint3 e = to_angles(testing::random_rank2_point(gen).matrix());
    EXPECT_GE(e.a(), 0.0);
    EXPECT_LE(e.a(), kPi);
    EXPECT_GT(e.c(), -kPi);
    EXPECT_LE(e.c(), kPi);
  }
}

TEST(ToAngles, RoundTripOnRandomExtremalTriples) {
  std::mt19937_64 gen(15);
  for (int i = 0; i < 10000; ++i) {
    const CorrelationMatrix3 m = testing::random_rank2_point(gen).matrix();
    const CorrelationMatrix3 back = to_angles(m, kInternalTol).matrix();
    EXPECT_NEAR(back.p, m.p, 1e-10);
    EXPECT_NEAR(back.q, m.q, 1e-10);
    EXPECT_NEAR(back.r, m.r, 1e-10);
  }
}

TEST(ToAngles, Errors) {
  EXPECT_EQ(code_of([] { to_angles({0.1, 0.2, 0.3}); }), ErrorCode::NotExtremal);
  EXPECT_EQ(code_of([] { to_angles({-0.6, -0.6, -0.6}); }), ErrorCode::InvalidMatrix);
  // delta = -1e-12 is within tol but r sits 1e-6 away from the only root r = 1.
  EXPECT_EQ(code_of([] { to_angles({1, 1, 1 - 1e-6}); }), ErrorCode::NoConsistentSign);
}

TEST(ReduceAngle, HalfOpenInterval) {
  EXPECT_EQ(reduce_angle(-kPi), kPi);
  EXPECT_EQ(reduce_angle(kPi), kPi);
  EXPECT_NEAR(reduce_angle(3 * kPi / 2), -kPi / 2, 1e-15);
  EXPECT_NEAR(reduce_angle(-4 * kPi / 3), 2 * kPi / 3, 1e-15);
}

}  // namespace
}  // namespace tricop
