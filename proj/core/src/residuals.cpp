#include "bubble/residuals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bubble/errors.hpp"
#include "bubble/geometry.hpp"

namespace bubble::verification {

std::vector<double> stress_balance_residual(const RadialProfile& profile, double p_g, const PhysicalParams& params,
                                            const PressureFluctuation& g) {
  std::vector<double> out(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double t = profile.theta()[i];
    const double R = profile.R()[i];
    const double curvature = geometry::mean_curvature_extension(R, profile.dR()[i], profile.d2R()[i], t);
    out[i] = p_g - params.p_inf - g(R * std::sin(t)) - params.sigma * curvature;
  }
  return out;
}

BoundaryResiduals boundary_residuals(double R0, double dR0, double Rpi, double dRpi) {
  return {dR0 - std::hypot(R0, dR0), dRpi + std::hypot(Rpi, dRpi)};
}

namespace {

// Quadratic Lagrange extrapolation of samples y at nodes x to x_star.
double extrapolate(const std::array<double, 3>& x, const std::array<double, 3>& y, double x_star) {
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) {
    double w = 1.0;
    for (int j = 0; j < 3; ++j)
      if (j != i) w *= (x_star - x[j]) / (x[i] - x[j]);
    acc += w * y[i];
  }
  return acc;
}

// Slope at x_star of the quadratic through three nodes.
double extrapolate_slope(const std::array<double, 3>& x, const std::array<double, 3>& y, double x_star) {
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) {
    double denom = 1.0;
    for (int j = 0; j < 3; ++j)
      if (j != i) denom *= x[i] - x[j];
    double num = 0.0;
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      double term = 1.0;
      for (int k = 0; k < 3; ++k)
        if (k != i && k != j) term *= x_star - x[k];
      num += term;
    }
    acc += num / denom * y[i];
  }
  return acc;
}

struct EndpointValues {
  double R;
  double dR;
};

EndpointValues endpoint(const RadialProfile& p, bool at_start, EndpointScheme scheme) {
  const std::size_t n = p.size();
  const double pole = at_start ? 0.0 : std::numbers::pi;
  auto idx = [&](std::size_t k) { return at_start ? k : n - 1 - k; };
  const bool on_pole = p.theta()[idx(0)] == pole;

  if (n < 3) throw DomainError("endpoint stencil needs 3 nodes");
  const std::array<double, 3> x{p.theta()[idx(0)], p.theta()[idx(1)], p.theta()[idx(2)]};
  const std::array<double, 3> y{p.R()[idx(0)], p.R()[idx(1)], p.R()[idx(2)]};
  if (scheme == EndpointScheme::one_sided_stencil) return {extrapolate(x, y, pole), extrapolate_slope(x, y, pole)};
  if (on_pole) return {p.R()[idx(0)], p.dR()[idx(0)]};
  return {extrapolate(x, y, pole),
          extrapolate(x, {p.dR()[idx(0)], p.dR()[idx(1)], p.dR()[idx(2)]}, pole)};
}

double central(const std::function<double(double)>& f, double x, double h, bool richardson) {
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  if (!richardson) return d1;
  const double h2 = 0.5 * h;
  const double d2 = (f(x + h2) - f(x - h2)) / (2.0 * h2);
  return (4.0 * d2 - d1) / 3.0;
}

double dp_dr(const AzimuthalFlow& flow, double r, double theta, const FiniteDifference& fd) {
  if (flow.dp_dr) return flow.dp_dr(r, theta);
  return central([&](double x) { return flow.p(x, theta); }, r, fd.relative_step * std::max(r, 1.0), fd.richardson);
}

double dp_dtheta(const AzimuthalFlow& flow, double r, double theta, const FiniteDifference& fd) {
  if (flow.dp_dtheta) return flow.dp_dtheta(r, theta);
  return central([&](double t) { return flow.p(r, t); }, theta, fd.relative_step, fd.richardson);
}

double checked_cot(double theta) {
  const double cot = std::cos(theta) / std::sin(theta);
  if (!(std::abs(cot) <= 1e8)) throw DomainError("Euler residual too close to the axis (|cot| > 1e8)");
  return cot;
}

}  // namespace

BoundaryResiduals boundary_residuals(const RadialProfile& profile, EndpointScheme scheme) {
  const auto a = endpoint(profile, true, scheme);
  const auto b = endpoint(profile, false, scheme);
  return boundary_residuals(a.R, a.dR, b.R, b.dR);
}

EulerResidual euler_residual(const AzimuthalFlow& flow, const PhysicalParams& params, double r, double theta,
                             const FiniteDifference& fd) {
  if (!(r > 0.0)) throw DomainError("Euler residual needs r > 0");
  const double cot = checked_cot(theta);
  const double v = flow.v_phi(r, theta);
  const double v2 = v * v;
  return {-v2 / r + dp_dr(flow, r, theta, fd) / params.rho_l,
          -v2 * cot / r + dp_dtheta(flow, r, theta, fd) / (params.rho_l * r)};
}

double euler_scale(const AzimuthalFlow& flow, const PhysicalParams& params, double r, double theta,
                   const FiniteDifference& fd) {
  const double cot = checked_cot(theta);
  const double v = flow.v_phi(r, theta);
  return std::max({v * v / r, v * v * std::abs(cot) / r, std::abs(dp_dr(flow, r, theta, fd)) / params.rho_l,
                   std::abs(dp_dtheta(flow, r, theta, fd)) / (params.rho_l * r),
                   std::numeric_limits<double>::min()});
}

double characteristics_identity(const AzimuthalFlow& flow, double r, double theta, const FiniteDifference& fd) {
  if (!(r > 0.0)) throw DomainError("characteristics identity needs r > 0");
  const double cot = checked_cot(theta);
  return r * dp_dr(flow, r, theta, fd) * cot - dp_dtheta(flow, r, theta, fd);
}

SphericalVelocity azimuthal_velocity(const AzimuthalFlow& flow) {
  return [v = flow.v_phi](double r, double theta) { return std::array<double, 3>{0.0, 0.0, v(r, theta)}; };
}

double kinematic_bc_check(const RadialProfile& profile, const SphericalVelocity& velocity) {
  double worst = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double t = profile.theta()[i];
    const double R = profile.R()[i];
    const auto n = geometry::surface_normal(R, profile.dR()[i], R, t);
    const auto v = velocity(R, t);
    worst = std::max(worst, std::abs(v[0] * n.r + v[1] * n.theta + v[2] * n.phi));
  }
  return worst;
}

GasResidual gas_interior_residual(const ScalarField3& rho, const VectorField3& velocity, const PhysicalParams& params,
                                  const Eigen::Vector3d& x, double step) {
  const double h = step * std::max(1.0, x.norm());
  const double rho0 = rho(x);
  if (!(rho0 > 0.0)) throw DomainError("gas density must be positive");
  const Eigen::Vector3d v0 = velocity(x);

  Eigen::Vector3d grad_rho;
  double div_flux = 0.0;
  double lap_log = 0.0;
  const double log0 = std::log(rho0);
  for (int k = 0; k < 3; ++k) {
    Eigen::Vector3d e = Eigen::Vector3d::Zero();
    e[k] = h;
    const double rp = rho(x + e);
    const double rm = rho(x - e);
    grad_rho[k] = (rp - rm) / (2.0 * h);
    div_flux += (rp * velocity(x + e)[k] - rm * velocity(x - e)[k]) / (2.0 * h);
    lap_log += (std::log(rp) - 2.0 * log0 + std::log(rm)) / (h * h);
  }
  const double diffusivity = params.kappa / (params.gamma * params.c_v);
  GasResidual out;
  out.mass = div_flux;
  out.thermal = diffusivity * lap_log - diffusivity * grad_rho.squaredNorm() / (rho0 * rho0) - v0.dot(grad_rho);
  return out;
}

}  // namespace bubble::verification
