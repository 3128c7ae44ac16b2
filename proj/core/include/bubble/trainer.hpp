#pragma once

#include <atomic>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "bubble/loss.hpp"
#include "bubble/network.hpp"
#include "bubble/profile.hpp"
#include "bubble/train_config.hpp"

namespace bubble::pinn {

struct TrainingTrace {
  std::vector<LossBreakdown> history;  ///< entry k is the loss seen at epoch k + 1, before its update
  double final_rrmse = 0.0;
  double wall_seconds = 0.0;
  bool interrupted = false;
};

struct TrainHooks {
  /// Called after every epoch with its 1-based index.
  std::function<void(std::size_t epoch, const LossBreakdown&)> on_epoch;
  /// Polled once per epoch; training stops early when it reads true.
  const std::atomic<bool>* stop = nullptr;
};

struct TrainResult {
  Network net;
  TrainingTrace trace;
};

/// The initial network for a config (seeded Xavier weights, output bias
/// per config.output_bias).
Network initial_network(const TrainConfig& config);

/// Full-grid Adam training. Deterministic for a given config. Throws
/// TrainingError with the epoch index when the loss becomes non-finite.
TrainResult train(const TrainConfig& config, const TrainHooks& hooks = {});

/// sqrt(sum (values_i - C sin theta_i)^2) / sqrt(sum (C sin theta_i)^2).
double rrmse(std::span<const double> values, double C, std::span<const double> grid);
double rrmse(const Network& net, double C, std::span<const double> grid);

/// Mirrored network profile on n equally spaced nodes over [0, pi].
RadialProfile export_profile(const Network& net, std::size_t n);

/// epoch,L_SB,L_V,L_B,L_S,total
void write_loss_history(std::ostream& out, const TrainingTrace& trace);

}  // namespace bubble::pinn
