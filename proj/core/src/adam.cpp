#include "bubble/adam.hpp"

#include <cmath>

#include "bubble/errors.hpp"

namespace bubble::pinn {

Adam::Adam(std::size_t dimension, double learning_rate, AdamSettings settings)
    : lr_(learning_rate),
      s_(settings),
      m_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dimension))),
      v_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dimension))) {}

void Adam::step(Eigen::VectorXd& x, const Eigen::VectorXd& g) {
  if (x.size() != m_.size() || g.size() != m_.size()) throw DomainError("Adam: dimension mismatch");
  ++t_;
  m_ = s_.beta1 * m_ + (1.0 - s_.beta1) * g;
  v_ = s_.beta2 * v_ + (1.0 - s_.beta2) * g.cwiseProduct(g);
  const double c1 = 1.0 - std::pow(s_.beta1, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(s_.beta2, static_cast<double>(t_));
  x.array() -= lr_ * (m_.array() / c1) / ((v_.array() / c2).sqrt() + s_.epsilon);
}

}  // namespace bubble::pinn
