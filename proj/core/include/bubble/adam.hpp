#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "bubble/train_config.hpp"

namespace bubble::pinn {

/// Adam with bias correction:
///   m <- b1 m + (1 - b1) g,  v <- b2 v + (1 - b2) g^2,
///   x <- x - lr (m / (1 - b1^t)) / (sqrt(v / (1 - b2^t)) + eps).
class Adam {
 public:
  Adam(std::size_t dimension, double learning_rate, AdamSettings settings = {});

  /// Throws DomainError when the sizes disagree.
  void step(Eigen::VectorXd& parameters, const Eigen::VectorXd& gradient);

  std::uint64_t steps() const { return t_; }
  const Eigen::VectorXd& first_moment() const { return m_; }
  const Eigen::VectorXd& second_moment() const { return v_; }
  double learning_rate() const { return lr_; }

 private:
  double lr_;
  AdamSettings s_;
  Eigen::VectorXd m_;
  Eigen::VectorXd v_;
  std::uint64_t t_ = 0;
};

}  // namespace bubble::pinn
