#include <gtest/gtest.h>

#include <cmath>

#include "bubble/adam.hpp"
#include "bubble/errors.hpp"

using namespace bubble;
using namespace bubble::pinn;

TEST(Adam, FirstStepIsLearningRateTimesSign) {
  Adam adam(2, 0.01, {0.9, 0.999, 1e-8});
  Eigen::VectorXd x{{1.0, -2.0}};
  adam.step(x, Eigen::VectorXd{{4.0, -0.5}});
  EXPECT_NEAR(x[0], 1.0 - 0.01, 1e-9);
  EXPECT_NEAR(x[1], -2.0 + 0.01, 1e-9);
  EXPECT_EQ(adam.steps(), 1u);
  EXPECT_NEAR(adam.first_moment()[0], 0.4, 1e-15);
  EXPECT_NEAR(adam.second_moment()[0], 0.016, 1e-15);
}

TEST(Adam, MinimisesShiftedQuadratic) {
  Adam adam(1, 0.05);
  Eigen::VectorXd x{{0.0}};
  for (int k = 0; k < 2000; ++k) adam.step(x, Eigen::VectorXd{{2.0 * (x[0] - 3.0)}});
  EXPECT_NEAR(x[0], 3.0, 1e-2);
}

TEST(Adam, ZeroGradientLeavesParametersAlone) {
  Adam adam(3, 0.1);
  Eigen::VectorXd x{{1.0, 2.0, 3.0}};
  const Eigen::VectorXd before = x;
  adam.step(x, Eigen::VectorXd::Zero(3));
  EXPECT_EQ(x, before);
}

TEST(Adam, DimensionMismatchThrows) {
  Adam adam(2, 0.1);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(3);
  EXPECT_THROW(adam.step(x, Eigen::VectorXd::Zero(3)), DomainError);
}
