#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bubble::pinn {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Value and first two theta-derivatives of the network output.
struct NetworkOutput {
  double R = 0.0;
  double dR = 0.0;
  double d2R = 0.0;
};

/// Per-layer activations of one batched forward pass, kept for the
/// reverse pass. Column j belongs to the j-th input angle.
struct ForwardCache {
  Eigen::RowVectorXd theta;
  std::vector<Eigen::MatrixXd> a, da, d2a;  ///< hidden activations after tanh
  std::vector<Eigen::MatrixXd> dzh, d2zh;   ///< hidden pre-activation derivatives
  Eigen::RowVectorXd z, dz, d2z;            ///< output pre-activation
  Eigen::RowVectorXd R, dR, d2R;
};

/// theta -> softplus(L4 tanh L3 tanh L2 tanh L1 (theta_sym)),
/// theta_sym = pi/2 - |theta - pi/2|.
///
/// All weights and biases live in one flat vector: for each layer the
/// row-major (out x in) weight matrix followed by the bias vector.
class Network {
 public:
  static std::vector<std::size_t> default_widths() { return {1, 50, 50, 50, 1}; }

  /// All parameters zero.
  explicit Network(std::vector<std::size_t> widths = default_widths());
  Network(std::vector<std::size_t> widths, Eigen::VectorXd parameters);

  /// Weights uniform in +-sqrt(6 / (fan_in + fan_out)), biases zero except
  /// the output bias, which is set to `output_bias`.
  static Network xavier(std::uint64_t seed, double output_bias = 0.0,
                        std::vector<std::size_t> widths = default_widths());

  const std::vector<std::size_t>& widths() const { return widths_; }
  std::size_t layer_count() const { return widths_.size() - 1; }
  std::size_t parameter_count() const { return static_cast<std::size_t>(params_.size()); }

  const Eigen::VectorXd& parameters() const { return params_; }
  Eigen::VectorXd& parameters() { return params_; }

  Eigen::Map<const RowMatrix> weight(std::size_t layer) const;
  Eigen::Map<RowMatrix> weight(std::size_t layer);
  Eigen::Map<const Eigen::VectorXd> bias(std::size_t layer) const;
  Eigen::Map<Eigen::VectorXd> bias(std::size_t layer);
  /// Offsets of a layer's weights and bias in the flat vector.
  std::size_t weight_offset(std::size_t layer) const { return offsets_[layer]; }
  std::size_t bias_offset(std::size_t layer) const;

  /// Exact R, R', R'' at any theta in [0, pi]; values past pi/2 are
  /// mirrored (R' flips sign). theta = pi/2 uses the left branch.
  NetworkOutput forward_with_derivatives(double theta) const;

  /// Batched forward pass on angles in [0, pi/2], where theta_sym = theta.
  void forward(std::span<const double> theta, ForwardCache& cache) const;

  /// Gradient of a loss with respect to every parameter, given the loss
  /// sensitivities to R, R', R'' at each cached angle.
  void backward(const ForwardCache& cache, const Eigen::RowVectorXd& gR, const Eigen::RowVectorXd& gdR,
                const Eigen::RowVectorXd& gd2R, Eigen::VectorXd& gradient) const;

 private:
  std::vector<std::size_t> widths_;
  std::vector<std::size_t> offsets_;
  Eigen::VectorXd params_;
};

double softplus(double x);
/// softplus^{-1}(y) for y > 0.
double inverse_softplus(double y);

}  // namespace bubble::pinn
