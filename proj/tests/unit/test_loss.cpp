#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bubble/geometry.hpp"
#include "bubble/loss.hpp"
#include "oracles.hpp"

using namespace bubble;
using namespace bubble::pinn;
constexpr double kPi = std::numbers::pi;

TEST(Collocation, UniformOnQuarterTurn) {
  const auto g = collocation_grid(9);
  ASSERT_EQ(g.size(), 9u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), kPi / 2);
  EXPECT_NEAR(g[4], kPi / 4, 1e-15);
}

TEST(StressResidual, VanishesOnHornTorus) {
  const double sigma = 7.28e-2, C = 0.0587;
  for (double t : {0.05, 0.5, 1.0, kPi / 2}) {
    const double s = std::sin(t);
    EXPECT_NEAR(stress_residual(C * s, C * std::cos(t), -C * s, t, sigma, C), 0.0, 1e-10 * sigma / C);
  }
}

TEST(StressResidual, ConsistentWithCurvature) {
  // res = -4 sigma / C + sigma / (R sin) - sigma * kappa with the geometry module's curvature.
  const double sigma = 0.07, C = 0.05;
  const double R = 0.04, dR = 0.01, d2R = -0.02, t = 0.8;
  const double k = geometry::mean_curvature_extension(R, dR, d2R, t);
  EXPECT_NEAR(stress_residual(R, dR, d2R, t, sigma, C), -4 * sigma / C + sigma / (R * std::sin(t)) - sigma * k, 1e-12);
}

TEST(StressResidual, PartialsMatchDifferences) {
  const double sigma = 0.07, C = 0.05, t = 0.9;
  const double R = 0.04, dR = 0.012, d2R = -0.03;
  double a, b, c;
  stress_residual_partials(R, dR, d2R, t, sigma, a, b, c);
  const double h = 1e-7;
  EXPECT_NEAR(a, oracle::central([&](double x) { return stress_residual(x, dR, d2R, t, sigma, C); }, R, h),
              1e-6 * std::abs(a));
  EXPECT_NEAR(b, oracle::central([&](double x) { return stress_residual(R, x, d2R, t, sigma, C); }, dR, h),
              1e-6 * std::abs(b));
  EXPECT_NEAR(c, oracle::central([&](double x) { return stress_residual(R, dR, x, t, sigma, C); }, d2R, h),
              1e-6 * std::abs(c));
}

TEST(DiscreteVolume, RectangleRuleOnQuarterGrid) {
  const auto g = collocation_grid(50);
  const double C = 0.0587;
  Eigen::RowVectorXd R(50);
  double ref = 0.0;
  for (int i = 0; i < 50; ++i) {
    R[i] = C * std::sin(g[static_cast<std::size_t>(i)]);
    ref += std::pow(R[i], 3) * std::sin(g[static_cast<std::size_t>(i)]);
  }
  ref *= 2.0 * kPi / 3.0 * (g[1] - g[0]);
  EXPECT_NEAR(discrete_volume(R, g), ref, 1e-15 * ref);
  // Half the closed-surface volume, up to the O(dtheta) endpoint error of the rule.
  EXPECT_NEAR(discrete_volume(R, g) / (kPi * kPi * C * C * C / 8.0), 1.0, 2.0 * (g[1] - g[0]));
}

TEST(Loss, ZeroNetworkMatchesHandSummation) {
  TrainConfig cfg;
  cfg.N = 9;
  const Network net({1, 4, 4, 1}, Eigen::VectorXd::Zero(1 * 4 + 4 + 4 * 4 + 4 + 4 + 1));
  const auto L = evaluate_loss(net, cfg);

  // Constant output R = ln 2, R' = R'' = 0.
  const double R = std::log(2.0), sigma = cfg.params.sigma, C = cfg.target_C();
  const auto g = collocation_grid(9);
  double sb = 0.0, vol = 0.0;
  for (std::size_t i = 0; i < 9; ++i) {
    const double s = std::sin(g[i]);
    if (i > 0) {
      const double res = -4 * sigma / C + sigma / (R * s) + 2 * sigma / R;
      sb += res * res;
    }
    vol += R * R * R * s;
  }
  vol *= 2.0 * kPi / 3.0 * (g[1] - g[0]);
  const double rel = (vol - cfg.V_target) / cfg.V_target;
  EXPECT_NEAR(L.L_SB, sb / 9.0, 1e-12 * sb);
  EXPECT_NEAR(L.L_V, rel * rel, 1e-12 * rel * rel);
  EXPECT_NEAR(L.L_B, R * R, 1e-15);
  EXPECT_EQ(L.L_S, 0.0);
  EXPECT_NEAR(L.total, 1e3 * L.L_SB + L.L_V + 1e-6 * L.L_B + 1e3 * L.L_S, 1e-12 * L.total);

  cfg.boundary = BoundaryForm::literal;
  const double lit = -std::sqrt(2.0) * R;
  EXPECT_NEAR(evaluate_loss(net, cfg).L_B, lit * lit, 1e-15);
}

TEST(Loss, HornTorusInitialisedNetworkHasSmallResidual) {
  // Sanity of scale: a sphere-biased net has L_SB far above its trained value.
  TrainConfig cfg;
  const auto L = evaluate_loss(Network::xavier(0, inverse_softplus(std::cbrt(3 * cfg.V_target / (4 * kPi)))), cfg);
  EXPECT_TRUE(std::isfinite(L.total));
  EXPECT_GT(L.L_SB, 1e-3);
}

class LossGradient : public ::testing::TestWithParam<BoundaryForm> {};

TEST_P(LossGradient, MatchesDifferences) {
  TrainConfig cfg;
  cfg.N = 12;
  cfg.boundary = GetParam();
  cfg.lambda_B = 1.0;
  const Network net = Network::xavier(2, inverse_softplus(0.06), {1, 5, 5, 1});
  Eigen::VectorXd grad(static_cast<Eigen::Index>(net.parameter_count()));
  const auto L = loss_and_gradient(net, cfg, grad);
  EXPECT_EQ(L.total, evaluate_loss(net, cfg).total);
  for (Eigen::Index k = 0; k < grad.size(); ++k) {
    const double h = 1e-6;
    Network p = net, m = net;
    p.parameters()[k] += h;
    m.parameters()[k] -= h;
    const double fd = (evaluate_loss(p, cfg).total - evaluate_loss(m, cfg).total) / (2.0 * h);
    EXPECT_NEAR(grad[k], fd, 1e-5 * std::max(std::abs(fd), 1e-3 * grad.cwiseAbs().maxCoeff())) << k;
  }
}

INSTANTIATE_TEST_SUITE_P(BothForms, LossGradient, ::testing::Values(BoundaryForm::intended, BoundaryForm::literal));
