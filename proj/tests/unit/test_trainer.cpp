#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bubble/errors.hpp"
#include "bubble/trainer.hpp"

using namespace bubble;
using namespace bubble::pinn;

namespace {

TrainConfig short_run(std::size_t epochs) {
  TrainConfig cfg;
  cfg.epochs = epochs;
  return cfg;
}

}  // namespace

TEST(Rrmse, Identities) {
  const std::vector<double> grid{0.1, 0.5, 1.0, 1.5};
  const double C = 0.3;
  std::vector<double> exact, twice, zero(grid.size(), 0.0);
  for (double t : grid) {
    exact.push_back(C * std::sin(t));
    twice.push_back(2.0 * C * std::sin(t));
  }
  EXPECT_EQ(rrmse(exact, C, grid), 0.0);
  EXPECT_NEAR(rrmse(twice, C, grid), 1.0, 1e-15);
  EXPECT_NEAR(rrmse(zero, C, grid), 1.0, 1e-15);
  EXPECT_THROW(rrmse(std::vector<double>{1.0}, C, grid), DomainError);
}

TEST(Trainer, InitialNetworkUsesSphereBias) {
  TrainConfig cfg;
  const auto net = initial_network(cfg);
  const double R_sphere = std::cbrt(3.0 * cfg.V_target / (4.0 * std::numbers::pi));
  EXPECT_NEAR(softplus(net.bias(net.layer_count() - 1)[0]), R_sphere, 1e-14);
  cfg.output_bias = OutputBiasInit::zero;
  EXPECT_EQ(initial_network(cfg).bias(3)[0], 0.0);
}

TEST(Trainer, LossDecreasesAndHistoryIsComplete) {
  std::size_t calls = 0;
  TrainHooks hooks;
  hooks.on_epoch = [&](std::size_t epoch, const LossBreakdown&) { EXPECT_EQ(epoch, ++calls); };
  const auto res = train(short_run(300), hooks);
  EXPECT_EQ(calls, 300u);
  ASSERT_EQ(res.trace.history.size(), 300u);
  EXPECT_LT(res.trace.history.back().total, res.trace.history.front().total);
  EXPECT_FALSE(res.trace.interrupted);
  EXPECT_TRUE(std::isfinite(res.trace.final_rrmse));
}

TEST(Trainer, DeterministicForFixedSeed) {
  const auto a = train(short_run(50));
  const auto b = train(short_run(50));
  EXPECT_EQ(a.net.parameters(), b.net.parameters());
  auto other = short_run(50);
  other.seed = 1;
  EXPECT_NE(a.net.parameters(), train(other).net.parameters());
}

TEST(Trainer, StopFlagInterrupts) {
  std::atomic<bool> stop{false};
  TrainHooks hooks;
  hooks.stop = &stop;
  hooks.on_epoch = [&](std::size_t epoch, const LossBreakdown&) {
    if (epoch == 10) stop = true;
  };
  const auto res = train(short_run(1000), hooks);
  EXPECT_TRUE(res.trace.interrupted);
  EXPECT_EQ(res.trace.history.size(), 10u);
}

TEST(Trainer, InvalidConfigRejected) {
  auto cfg = short_run(1);
  cfg.N = 4;
  EXPECT_THROW(train(cfg), DomainError);
  cfg = short_run(1);
  cfg.adam.beta2 = 1.0;
  EXPECT_THROW(train(cfg), DomainError);
}

TEST(Trainer, ExportedProfileAndHistoryFormat) {
  const auto res = train(short_run(3));
  const auto p = export_profile(res.net, 11);
  EXPECT_EQ(p.size(), 11u);
  EXPECT_EQ(p.source(), ProfileSource::network);
  EXPECT_EQ(p.theta().back(), std::numbers::pi);
  std::ostringstream out;
  write_loss_history(out, res.trace);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "epoch,L_SB,L_V,L_B,L_S,total");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3);
}
