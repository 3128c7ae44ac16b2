#include "bubble/geometry.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "bubble/errors.hpp"
#include "bubble/quadrature.hpp"

namespace bubble::geometry {
namespace {

void require_regular(double R, double theta) {
  const double s = std::sin(theta);
  if (!(theta > 0.0 && theta < std::numbers::pi) || s == 0.0)
    throw SingularEvaluationError("curvature is singular at sin(theta) = 0");
  if (R == 0.0 || !std::isfinite(R)) throw SingularEvaluationError("curvature is singular at R = 0");
}

}  // namespace

Normal surface_normal(double /*R*/, double dR, double r, double theta) {
  if (!(r > 0.0)) throw DomainError("surface_normal: r must be positive");
  if (!(theta > 0.0 && theta < std::numbers::pi))
    throw DomainError("surface_normal: theta must lie in (0, pi)");
  const double slope = dR / r;
  const double inv = 1.0 / std::sqrt(1.0 + slope * slope);
  return {-inv, slope * inv, 0.0};
}

double mean_curvature_extension(double R, double dR, double d2R, double theta) {
  require_regular(R, theta);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double R2 = R * R;
  const double P2 = dR * dR;
  const double Q = R2 + P2;
  // (1/r^2) d_r(r^2 n_r) + (1/(r sin)) d_theta(sin n_theta) at r = R. The
  // (R')^2 R'' contributions of the two terms cancel.
  const double num = -2.0 * s * R2 * R - 3.0 * s * R * P2 + c * dR * R2 + c * P2 * dR + s * R2 * d2R;
  return num / (Q * std::sqrt(Q) * R * s);
}

FundamentalForms fundamental_forms(double R, double dR, double d2R, double theta) {
  require_regular(R, theta);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double Q = dR * dR + R * R;
  const double root = std::sqrt(Q);
  FundamentalForms ff;
  ff.E = Q;
  ff.F = 0.0;
  ff.G = R * R * s * s;
  ff.e = (d2R * R - 2.0 * dR * dR - R * R) / root;
  ff.f = 0.0;
  ff.g2 = R * s * (dR * c - R * s) / root;
  return ff;
}

double mean_curvature_forms(double R, double dR, double d2R, double theta) {
  const FundamentalForms ff = fundamental_forms(R, dR, d2R, theta);
  const double H = (ff.e * ff.G - 2.0 * ff.f * ff.F + ff.g2 * ff.E) / (2.0 * (ff.E * ff.G - ff.F * ff.F));
  return 2.0 * H;
}

double enclosed_volume(const RadialProfile& profile) {
  const auto theta = profile.theta();
  const auto R = profile.R();
  std::vector<double> integrand(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) integrand[i] = R[i] * R[i] * R[i] * std::sin(theta[i]);
  return 2.0 * std::numbers::pi / 3.0 * simpson(theta, integrand);
}

}  // namespace bubble::geometry
