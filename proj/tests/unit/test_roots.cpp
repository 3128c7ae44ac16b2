#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "bubble/errors.hpp"
#include "bubble/roots.hpp"

using namespace bubble;

TEST(GuardedNewton, FindsSimpleRoot) {
  const double x = roots::guarded_newton([](double v) { return std::pair{v * v - 2.0, 2.0 * v}; }, 0.0, 3.0);
  EXPECT_NEAR(x, std::sqrt(2.0), 1e-15);
}

TEST(GuardedNewton, SurvivesFlatDerivative) {
  // Newton from the midpoint of [-1, 2] hits f' = 0 at x = 0 without the guard.
  const double x = roots::guarded_newton([](double v) { return std::pair{v * v * v - 1.0, 3.0 * v * v}; }, -1.0, 2.0);
  EXPECT_NEAR(x, 1.0, 1e-14);
}

TEST(GuardedNewton, RejectsBracketWithoutSignChange) {
  EXPECT_THROW(roots::guarded_newton([](double v) { return std::pair{v * v + 1.0, 2.0 * v}; }, -1.0, 1.0),
               DomainError);
}

TEST(RealCubicRoots, ThreeDistinctRoots) {
  auto r = roots::real_cubic_roots(2.0, -12.0, 22.0, -12.0);  // 2 (x-1)(x-2)(x-3)
  std::sort(r.begin(), r.end());
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0], 1.0, 1e-12);
  EXPECT_NEAR(r[1], 2.0, 1e-12);
  EXPECT_NEAR(r[2], 3.0, 1e-12);
}

TEST(RealCubicRoots, SingleRealRoot) {
  const auto r = roots::real_cubic_roots(1.0, 0.0, 1.0, -2.0);  // (x-1)(x^2+x+2)
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0], 1.0, 1e-14);
}

TEST(RealCubicRoots, DoubleRoot) {
  auto r = roots::real_cubic_roots(1.0, -4.0, 5.0, -2.0);  // (x-1)^2 (x-2)
  std::sort(r.begin(), r.end());
  ASSERT_GE(r.size(), 2u);
  EXPECT_NEAR(r.front(), 1.0, 1e-7);
  EXPECT_NEAR(r.back(), 2.0, 1e-12);
}

TEST(RealCubicRoots, ZeroLeadingCoefficientThrows) {
  EXPECT_THROW(roots::real_cubic_roots(0.0, 1.0, 1.0, 1.0), DomainError);
}
