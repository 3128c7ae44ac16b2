#include "bubble/trainer.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "bubble/adam.hpp"
#include "bubble/errors.hpp"
#include "bubble/quadrature.hpp"

namespace bubble::pinn {

Network initial_network(const TrainConfig& config) {
  double bias = 0.0;
  if (config.output_bias == OutputBiasInit::sphere)
    bias = inverse_softplus(std::cbrt(3.0 * config.V_target / (4.0 * std::numbers::pi)));
  return Network::xavier(config.seed, bias);
}

TrainResult train(const TrainConfig& config, const TrainHooks& hooks) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  TrainResult out{initial_network(config), {}};
  auto& net = out.net;
  auto& trace = out.trace;
  trace.history.reserve(config.epochs);

  LossWorkspace ws(config);
  Adam adam(net.parameter_count(), config.learning_rate, config.adam);
  Eigen::VectorXd grad(static_cast<Eigen::Index>(net.parameter_count()));
  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    if (hooks.stop && hooks.stop->load()) {
      trace.interrupted = true;
      break;
    }
    const auto loss = ws.evaluate(net, &grad);
    if (!std::isfinite(loss.total) || !grad.allFinite())
      throw TrainingError(static_cast<int>(epoch), "non-finite loss or gradient");
    trace.history.push_back(loss);
    adam.step(net.parameters(), grad);
    if (hooks.on_epoch) hooks.on_epoch(epoch, loss);
  }
  const auto grid = collocation_grid(config.N);
  trace.final_rrmse = rrmse(net, config.target_C(), grid);
  trace.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

double rrmse(std::span<const double> values, double C, std::span<const double> grid) {
  if (values.size() != grid.size()) throw DomainError("rrmse: size mismatch");
  std::vector<double> err(grid.size()), ref(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double target = C * std::sin(grid[i]);
    err[i] = (values[i] - target) * (values[i] - target);
    ref[i] = target * target;
  }
  return std::sqrt(pairwise_sum(err)) / std::sqrt(pairwise_sum(ref));
}

double rrmse(const Network& net, double C, std::span<const double> grid) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = net.forward_with_derivatives(grid[i]).R;
  return rrmse(values, C, grid);
}

RadialProfile export_profile(const Network& net, std::size_t n) {
  const auto grid = linspace(0.0, std::numbers::pi, n);
  return RadialProfile::sample(
      grid, [&](double t) { return net.forward_with_derivatives(t).R; },
      [&](double t) { return net.forward_with_derivatives(t).dR; },
      [&](double t) { return net.forward_with_derivatives(t).d2R; }, ProfileSource::network);
}

void write_loss_history(std::ostream& out, const TrainingTrace& trace) {
  out << "epoch,L_SB,L_V,L_B,L_S,total\n";
  char line[256];
  for (std::size_t k = 0; k < trace.history.size(); ++k) {
    const auto& l = trace.history[k];
    std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", k + 1, l.L_SB, l.L_V, l.L_B, l.L_S,
                  l.total);
    out << line;
  }
}

}  // namespace bubble::pinn
