#include "bubble/loss.hpp"

#include <cmath>
#include <numbers>

#include "bubble/quadrature.hpp"

namespace bubble::pinn {

std::vector<double> collocation_grid(std::size_t N) {
  const double dtheta = std::numbers::pi / (2.0 * static_cast<double>(N - 1));
  std::vector<double> grid(N);
  for (std::size_t i = 0; i < N; ++i) grid[i] = static_cast<double>(i) * dtheta;
  grid.back() = 0.5 * std::numbers::pi;
  return grid;
}

double stress_residual(double R, double dR, double d2R, double theta, double sigma, double C) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double Q = R * R + dR * dR;
  const double num = -2.0 * s * R * R * R - 3.0 * s * R * dR * dR + c * dR * R * R + c * dR * dR * dR +
                     s * R * R * d2R;
  const double den = Q * std::sqrt(Q) * R * s;
  return -4.0 * sigma / C + sigma / (R * s) - sigma * num / den;
}

void stress_residual_partials(double R, double dR, double d2R, double theta, double sigma, double& dres_R,
                              double& dres_dR, double& dres_d2R) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double Q = R * R + dR * dR;
  const double rq = std::sqrt(Q);
  const double num = -2.0 * s * R * R * R - 3.0 * s * R * dR * dR + c * dR * R * R + c * dR * dR * dR +
                     s * R * R * d2R;
  const double den = Q * rq * R * s;
  const double num_R = -6.0 * s * R * R - 3.0 * s * dR * dR + 2.0 * c * dR * R + 2.0 * s * R * d2R;
  const double num_dR = -6.0 * s * R * dR + c * R * R + 3.0 * c * dR * dR;
  const double num_d2R = s * R * R;
  const double den_R = s * rq * (3.0 * R * R + Q);
  const double den_dR = 3.0 * s * R * rq * dR;
  dres_R = -sigma / (R * R * s) - sigma * (num_R * den - num * den_R) / (den * den);
  dres_dR = -sigma * (num_dR * den - num * den_dR) / (den * den);
  dres_d2R = -sigma * num_d2R / den;
}

double discrete_volume(const Eigen::RowVectorXd& R, const std::vector<double>& grid) {
  const double dtheta = grid[1] - grid[0];
  std::vector<double> terms(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = R[static_cast<Eigen::Index>(i)];
    terms[i] = r * r * r * std::sin(grid[i]);
  }
  return 2.0 * std::numbers::pi / 3.0 * dtheta * pairwise_sum(terms);
}

LossWorkspace::LossWorkspace(const TrainConfig& config)
    : config_(config), grid_(collocation_grid(config.N)), C_(config.target_C()) {}

LossBreakdown LossWorkspace::evaluate(const Network& net, Eigen::VectorXd* gradient) {
  const auto& cfg = config_;
  const double sigma = cfg.params.sigma;
  const std::size_t N = grid_.size();
  net.forward(grid_, cache_);
  const auto& R = cache_.R;
  const auto& dR = cache_.dR;
  const auto& d2R = cache_.d2R;

  const bool want_grad = gradient != nullptr;
  if (want_grad) {
    gR_.setZero(static_cast<Eigen::Index>(N));
    gdR_.setZero(static_cast<Eigen::Index>(N));
    gd2R_.setZero(static_cast<Eigen::Index>(N));
  }

  LossBreakdown out;
  // theta_1 = 0 is excluded: the residual divides by sin(theta).
  std::vector<double> sq(N - 1);
  for (std::size_t i = 1; i < N; ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    const double res = stress_residual(R[k], dR[k], d2R[k], grid_[i], sigma, C_);
    sq[i - 1] = res * res;
    if (want_grad) {
      double a, b, c;
      stress_residual_partials(R[k], dR[k], d2R[k], grid_[i], sigma, a, b, c);
      const double w = cfg.lambda_SB * 2.0 * res / static_cast<double>(N);
      gR_[k] += w * a;
      gdR_[k] += w * b;
      gd2R_[k] += w * c;
    }
  }
  out.L_SB = pairwise_sum(sq) / static_cast<double>(N);

  const double V = discrete_volume(R, grid_);
  const double rel = (V - cfg.V_target) / cfg.V_target;
  out.L_V = rel * rel;
  if (want_grad) {
    const double w = cfg.lambda_V * 2.0 * rel / cfg.V_target * 2.0 * std::numbers::pi / 3.0 * (grid_[1] - grid_[0]);
    for (std::size_t i = 0; i < N; ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      gR_[k] += w * 3.0 * R[k] * R[k] * std::sin(grid_[i]);
    }
  }

  const double R0 = R[0];
  const double dR0 = dR[0];
  double e, de_R, de_dR;
  if (cfg.boundary == BoundaryForm::intended) {
    const double h = std::hypot(R0, dR0);
    e = dR0 - h;
    de_R = -R0 / h;
    de_dR = 1.0 - dR0 / h;
  } else {
    e = dR0 - std::sqrt(2.0) * R0;
    de_R = -std::sqrt(2.0);
    de_dR = 1.0;
  }
  out.L_B = e * e;
  if (want_grad) {
    gR_[0] += cfg.lambda_B * 2.0 * e * de_R;
    gdR_[0] += cfg.lambda_B * 2.0 * e * de_dR;
  }

  const auto last = static_cast<Eigen::Index>(N - 1);
  out.L_S = dR[last] * dR[last];
  if (want_grad) gdR_[last] += cfg.lambda_S * 2.0 * dR[last];

  out.total = cfg.lambda_SB * out.L_SB + cfg.lambda_V * out.L_V + cfg.lambda_B * out.L_B + cfg.lambda_S * out.L_S;
  if (want_grad) net.backward(cache_, gR_, gdR_, gd2R_, *gradient);
  return out;
}

LossBreakdown evaluate_loss(const Network& net, const TrainConfig& config) {
  LossWorkspace ws(config);
  return ws.evaluate(net, nullptr);
}

LossBreakdown loss_and_gradient(const Network& net, const TrainConfig& config, Eigen::VectorXd& gradient) {
  LossWorkspace ws(config);
  return ws.evaluate(net, &gradient);
}

}  // namespace bubble::pinn
