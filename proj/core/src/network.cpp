#include "bubble/network.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "bubble/errors.hpp"

namespace bubble::pinn {

namespace {

std::vector<std::size_t> layer_offsets(const std::vector<std::size_t>& widths) {
  if (widths.size() < 2 || widths.front() != 1 || widths.back() != 1)
    throw DomainError("network widths must start and end with 1");
  std::vector<std::size_t> off;
  std::size_t at = 0;
  for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
    if (widths[l + 1] == 0) throw DomainError("network layer width must be positive");
    off.push_back(at);
    at += widths[l + 1] * widths[l] + widths[l + 1];
  }
  off.push_back(at);
  return off;
}

Eigen::ArrayXXd sigmoid(const Eigen::ArrayXXd& z) {
  return z.unaryExpr([](double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
  });
}

}  // namespace

double softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))); }

double inverse_softplus(double y) {
  if (!(y > 0.0)) throw DomainError("inverse_softplus needs y > 0");
  return y > 30.0 ? y + std::log(-std::expm1(-y)) : std::log(std::expm1(y));
}

Network::Network(std::vector<std::size_t> widths)
    : widths_(std::move(widths)), offsets_(layer_offsets(widths_)) {
  params_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(offsets_.back()));
}

Network::Network(std::vector<std::size_t> widths, Eigen::VectorXd parameters)
    : widths_(std::move(widths)), offsets_(layer_offsets(widths_)), params_(std::move(parameters)) {
  if (static_cast<std::size_t>(params_.size()) != offsets_.back())
    throw DomainError("parameter vector does not match the layer widths");
}

Network Network::xavier(std::uint64_t seed, double output_bias, std::vector<std::size_t> widths) {
  Network net(std::move(widths));
  std::mt19937_64 rng(seed);
  for (std::size_t l = 0; l < net.layer_count(); ++l) {
    const double bound = std::sqrt(6.0 / static_cast<double>(net.widths_[l] + net.widths_[l + 1]));
    std::uniform_real_distribution<double> U(-bound, bound);
    auto W = net.weight(l);
    for (Eigen::Index i = 0; i < W.rows(); ++i)
      for (Eigen::Index j = 0; j < W.cols(); ++j) W(i, j) = U(rng);
  }
  net.bias(net.layer_count() - 1)[0] = output_bias;
  return net;
}

Eigen::Map<const RowMatrix> Network::weight(std::size_t l) const {
  return {params_.data() + offsets_[l], static_cast<Eigen::Index>(widths_[l + 1]),
          static_cast<Eigen::Index>(widths_[l])};
}

Eigen::Map<RowMatrix> Network::weight(std::size_t l) {
  return {params_.data() + offsets_[l], static_cast<Eigen::Index>(widths_[l + 1]),
          static_cast<Eigen::Index>(widths_[l])};
}

std::size_t Network::bias_offset(std::size_t l) const { return offsets_[l] + widths_[l + 1] * widths_[l]; }

Eigen::Map<const Eigen::VectorXd> Network::bias(std::size_t l) const {
  return {params_.data() + bias_offset(l), static_cast<Eigen::Index>(widths_[l + 1])};
}

Eigen::Map<Eigen::VectorXd> Network::bias(std::size_t l) {
  return {params_.data() + bias_offset(l), static_cast<Eigen::Index>(widths_[l + 1])};
}

NetworkOutput Network::forward_with_derivatives(double theta) const {
  constexpr double half = 0.5 * std::numbers::pi;
  const bool mirrored = theta > half;
  const double t = mirrored ? std::numbers::pi - theta : theta;
  ForwardCache cache;
  forward(std::span<const double>(&t, 1), cache);
  return {cache.R[0], mirrored ? -cache.dR[0] : cache.dR[0], cache.d2R[0]};
}

void Network::forward(std::span<const double> theta, ForwardCache& c) const {
  const auto n = static_cast<Eigen::Index>(theta.size());
  const std::size_t L = layer_count();
  c.theta = Eigen::Map<const Eigen::RowVectorXd>(theta.data(), n);
  c.a.resize(L - 1);
  c.da.resize(L - 1);
  c.d2a.resize(L - 1);
  c.dzh.resize(L - 1);
  c.d2zh.resize(L - 1);

  // Input layer: a = theta, a' = 1, a'' = 0.
  Eigen::MatrixXd z, dz, d2z;
  for (std::size_t l = 0; l < L; ++l) {
    const auto W = weight(l);
    const auto b = bias(l);
    if (l == 0) {
      z = W * c.theta;
      dz = W * Eigen::RowVectorXd::Ones(n);
      d2z = Eigen::MatrixXd::Zero(W.rows(), n);
    } else {
      z = W * c.a[l - 1];
      dz = W * c.da[l - 1];
      d2z = W * c.d2a[l - 1];
    }
    z.colwise() += b;
    if (l + 1 == L) break;
    const Eigen::ArrayXXd a = z.array().tanh();
    const Eigen::ArrayXXd t = 1.0 - a.square();
    c.a[l] = a.matrix();
    c.da[l] = (t * dz.array()).matrix();
    c.d2a[l] = (t * d2z.array() - 2.0 * a * t * dz.array().square()).matrix();
    c.dzh[l] = dz;
    c.d2zh[l] = d2z;
  }
  c.z = z;
  c.dz = dz;
  c.d2z = d2z;
  const Eigen::ArrayXXd s = sigmoid(c.z.array());
  c.R = c.z.unaryExpr([](double x) { return softplus(x); });
  c.dR = (s * c.dz.array()).matrix();
  c.d2R = (s * c.d2z.array() + s * (1.0 - s) * c.dz.array().square()).matrix();
}

void Network::backward(const ForwardCache& c, const Eigen::RowVectorXd& gR, const Eigen::RowVectorXd& gdR,
                       const Eigen::RowVectorXd& gd2R, Eigen::VectorXd& gradient) const {
  const std::size_t L = layer_count();
  gradient.setZero(params_.size());

  const Eigen::ArrayXXd s = sigmoid(c.z.array());
  const Eigen::ArrayXXd s1 = s * (1.0 - s);
  const Eigen::ArrayXXd zp = c.dz.array();
  Eigen::MatrixXd gz = (gR.array() * s + gdR.array() * s1 * zp +
                        gd2R.array() * (s1 * c.d2z.array() + s1 * (1.0 - 2.0 * s) * zp.square()))
                           .matrix();
  Eigen::MatrixXd gdz = (gdR.array() * s + gd2R.array() * 2.0 * s1 * zp).matrix();
  Eigen::MatrixXd gd2z = (gd2R.array() * s).matrix();

  for (std::size_t l = L; l-- > 0;) {
    const auto W = weight(l);
    Eigen::Map<RowMatrix> gW(gradient.data() + offsets_[l], W.rows(), W.cols());
    Eigen::Map<Eigen::VectorXd> gb(gradient.data() + bias_offset(l), W.rows());
    if (l == 0) {
      // a' = 1 and a'' = 0 for the input layer.
      gW.noalias() = gz * c.theta.transpose() + gdz.rowwise().sum();
    } else {
      gW.noalias() = gz * c.a[l - 1].transpose();
      gW.noalias() += gdz * c.da[l - 1].transpose();
      gW.noalias() += gd2z * c.d2a[l - 1].transpose();
    }
    gb = gz.rowwise().sum();
    if (l == 0) break;

    const Eigen::MatrixXd ga = W.transpose() * gz;
    const Eigen::MatrixXd gda = W.transpose() * gdz;
    const Eigen::MatrixXd gd2a = W.transpose() * gd2z;
    const Eigen::ArrayXXd a = c.a[l - 1].array();
    const Eigen::ArrayXXd t = 1.0 - a.square();
    const Eigen::ArrayXXd dz = c.dzh[l - 1].array();
    const Eigen::ArrayXXd d2z = c.d2zh[l - 1].array();
    gz = (ga.array() * t + gda.array() * (-2.0 * a * t * dz) +
          gd2a.array() * (-2.0 * a * t * d2z - 2.0 * t * (1.0 - 3.0 * a.square()) * dz.square()))
             .matrix();
    gdz = (gda.array() * t + gd2a.array() * (-4.0 * a * t * dz)).matrix();
    gd2z = (gd2a.array() * t).matrix();
  }
}

}  // namespace bubble::pinn
