#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

#include "bubble/errors.hpp"
#include "bubble/roots.hpp"

namespace bubble::roots {

double guarded_newton(const ValueAndSlope& f, double lo, double hi, int max_iterations) {
  if (lo > hi) std::swap(lo, hi);
  auto [flo, dlo] = f(lo);
  auto [fhi, dhi] = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw DomainError("guarded_newton: bracket does not change sign");
  // Orient so that f(a) < 0 < f(b).
  double a = flo < 0.0 ? lo : hi;
  double b = flo < 0.0 ? hi : lo;

  double x = 0.5 * (lo + hi);
  double dx_old = std::abs(hi - lo);
  double dx = dx_old;
  auto [fx, dfx] = f(x);
  for (int it = 0; it < max_iterations; ++it) {
    const bool newton_leaves = ((x - b) * dfx - fx) * ((x - a) * dfx - fx) > 0.0;
    const bool too_slow = std::abs(2.0 * fx) > std::abs(dx_old * dfx);
    dx_old = dx;
    if (newton_leaves || too_slow || dfx == 0.0) {
      dx = 0.5 * (b - a);
      x = a + dx;
    } else {
      dx = fx / dfx;
      x -= dx;
    }
    if (std::abs(dx) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) return x;
    std::tie(fx, dfx) = f(x);
    if (fx == 0.0) return x;
    if (fx < 0.0)
      a = x;
    else
      b = x;
  }
  throw NumericError("guarded_newton: no convergence within iteration cap");
}

std::vector<double> real_cubic_roots(double a3, double a2, double a1, double a0) {
  if (a3 == 0.0) throw DomainError("real_cubic_roots: leading coefficient is zero");
  const double b = a2 / a3;
  const double c = a1 / a3;
  const double d = a0 / a3;
  // x = t - b/3 gives t^3 + p t + q = 0.
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const double shift = -b / 3.0;
  const double disc = q * q / 4.0 + p * p * p / 27.0;

  std::vector<double> t;
  const double scale = std::max({std::abs(p) * std::abs(p) * std::abs(p) / 27.0, q * q / 4.0,
                                  std::numeric_limits<double>::min()});
  if (std::abs(disc) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
    if (p == 0.0) {
      t = {0.0};
    } else {
      t = {3.0 * q / p, -1.5 * q / p};
    }
  } else if (disc < 0.0) {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) t.push_back(m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0));
  } else {
    const double root = std::sqrt(disc);
    t = {std::cbrt(-q / 2.0 + root) + std::cbrt(-q / 2.0 - root)};
  }

  std::vector<double> x;
  x.reserve(t.size());
  auto poly = [&](double v) { return ((a3 * v + a2) * v + a1) * v + a0; };
  auto dpoly = [&](double v) { return (3.0 * a3 * v + 2.0 * a2) * v + a1; };
  for (double ti : t) {
    double xi = ti + shift;
    for (int k = 0; k < 3; ++k) {
      const double slope = dpoly(xi);
      if (slope == 0.0) break;
      const double next = xi - poly(xi) / slope;
      if (!(std::abs(poly(next)) < std::abs(poly(xi)))) break;
      xi = next;
    }
    x.push_back(xi);
  }
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  return x;
}

}  // namespace bubble::roots
