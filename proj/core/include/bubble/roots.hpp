#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace bubble::roots {

/// Value and first derivative at a point.
using ValueAndSlope = std::function<std::pair<double, double>(double)>;

/// Safeguarded Newton iteration on a sign-changing bracket [lo, hi]: a
/// Newton step is taken when it stays inside the current bracket and
/// shrinks the residual fast enough, otherwise the bracket is bisected.
///
/// Throws DomainError when f(lo) and f(hi) share a strict sign, and
/// NumericError after `max_iterations` without convergence.
double guarded_newton(const ValueAndSlope& f, double lo, double hi, int max_iterations = 200);

/// Real roots of a3 x^3 + a2 x^2 + a1 x + a0 (a3 != 0), ascending, from the
/// trigonometric / Cardano closed forms followed by Newton polishing.
std::vector<double> real_cubic_roots(double a3, double a2, double a1, double a0);

}  // namespace bubble::roots
