#pragma once

#include <Eigen/Core>
#include <vector>

#include "bubble/network.hpp"
#include "bubble/train_config.hpp"

namespace bubble::pinn {

struct LossBreakdown {
  double L_SB = 0.0;
  double L_V = 0.0;
  double L_B = 0.0;
  double L_S = 0.0;
  double total = 0.0;
};

/// theta_i = (i - 1) pi / (2 (N - 1)), i = 1..N.
std::vector<double> collocation_grid(std::size_t N);

/// Stress-balance residual with the canonical fluctuation and
/// p_g - p_inf = -4 sigma / C:
///   -4 sigma/C + sigma/(R sin) - sigma * curvature(R, R', R'', theta).
double stress_residual(double R, double dR, double d2R, double theta, double sigma, double C);

/// Partials of stress_residual with respect to (R, R', R'').
void stress_residual_partials(double R, double dR, double d2R, double theta, double sigma, double& dres_R,
                              double& dres_dR, double& dres_d2R);

/// Discrete volume (2 pi / 3) dtheta sum_i R_i^3 sin(theta_i) over the
/// collocation grid.
double discrete_volume(const Eigen::RowVectorXd& R, const std::vector<double>& grid);

/// The four penalty terms and their weighted total. L_SB sums nodes
/// i = 2..N and divides by N; the other terms use the full grid.
LossBreakdown evaluate_loss(const Network& net, const TrainConfig& config);

/// Loss and exact gradient of the total with respect to every parameter.
LossBreakdown loss_and_gradient(const Network& net, const TrainConfig& config, Eigen::VectorXd& gradient);

/// Reusable buffers so training does not allocate per epoch.
class LossWorkspace {
 public:
  explicit LossWorkspace(const TrainConfig& config);
  LossBreakdown evaluate(const Network& net, Eigen::VectorXd* gradient);

 private:
  TrainConfig config_;
  std::vector<double> grid_;
  double C_;
  ForwardCache cache_;
  Eigen::RowVectorXd gR_, gdR_, gd2R_;
};

}  // namespace bubble::pinn
