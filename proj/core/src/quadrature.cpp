#include "bubble/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "bubble/errors.hpp"

namespace bubble {

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kBlock = 16;
  if (values.size() <= kBlock) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

void check_grid(std::span<const double> x, std::span<const double> f) {
  if (x.size() != f.size()) throw DomainError("quadrature: abscissae and values differ in length");
  if (x.size() < 2) throw DomainError("quadrature: need at least 2 nodes");
}

}  // namespace

double trapezoid(std::span<const double> x, std::span<const double> f) {
  check_grid(x, f);
  std::vector<double> parts(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) parts[i] = 0.5 * (x[i + 1] - x[i]) * (f[i] + f[i + 1]);
  return pairwise_sum(parts);
}

double simpson(std::span<const double> x, std::span<const double> f) {
  check_grid(x, f);
  const std::size_t intervals = x.size() - 1;
  if (intervals == 1) return trapezoid(x, f);

  std::vector<double> parts;
  parts.reserve(intervals / 2 + 1);
  const std::size_t paired = intervals - intervals % 2;
  for (std::size_t i = 0; i < paired; i += 2) {
    const double h0 = x[i + 1] - x[i];
    const double h1 = x[i + 2] - x[i + 1];
    const double hs = h0 + h1;
    parts.push_back(hs / 6.0 *
                    ((2.0 - h1 / h0) * f[i] + hs * hs / (h0 * h1) * f[i + 1] + (2.0 - h0 / h1) * f[i + 2]));
  }
  if (intervals % 2 == 1) {
    const std::size_t n = intervals;
    const double ha = x[n - 1] - x[n - 2];
    const double hb = x[n] - x[n - 1];
    const double alpha = (2.0 * hb * hb + 3.0 * hb * ha) / (6.0 * (ha + hb));
    const double beta = (hb * hb + 3.0 * hb * ha) / (6.0 * ha);
    const double eta = hb * hb * hb / (6.0 * ha * (ha + hb));
    parts.push_back(alpha * f[n] + beta * f[n - 1] - eta * f[n - 2]);
  }
  return pairwise_sum(parts);
}

GaussRule gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw DomainError("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * static_cast<double>(k) - 1.0) * z * p1 - (static_cast<double>(k) - 1.0) * p2) /
             static_cast<double>(k);
      }
      dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = mid - half * z;
    rule.nodes[n - 1 - i] = mid + half * z;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

}  // namespace bubble
