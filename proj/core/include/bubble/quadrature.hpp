#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bubble {

/// Fixed-order pairwise summation; the result depends only on the input
/// order, never on how callers partition their loops.
double pairwise_sum(std::span<const double> values);

/// Composite Simpson rule on a strictly increasing, possibly non-uniform
/// grid. Two nodes fall back to the trapezoid rule.
double simpson(std::span<const double> x, std::span<const double> f);

/// Composite trapezoid rule.
double trapezoid(std::span<const double> x, std::span<const double> f);

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [a, b].
GaussRule gauss_legendre(std::size_t n, double a, double b);

}  // namespace bubble
