#include "bubble/fields.hpp"

#include <cmath>
#include <numbers>

#include "bubble/errors.hpp"

namespace bubble {
namespace {

void require_interior(double r, double theta) {
  if (!(r > 0.0)) throw DomainError("flow fields need r > 0");
  if (!(theta > 0.0 && theta < std::numbers::pi)) throw DomainError("flow fields need theta in (0, pi)");
}

}  // namespace

FlowSample g_family_fields(const PressureFluctuation& g, const PhysicalParams& params, double r, double theta) {
  require_interior(r, theta);
  const double s = std::sin(theta);
  const double arg = r * s;
  const double slope = g.slope(arg);
  if (!(slope >= 0.0)) throw DomainError("g_family_fields: g' < 0 gives an imaginary flow speed");
  FlowSample out;
  out.r = r;
  out.theta = theta;
  out.p_l = params.p_inf + g(arg);
  out.v_phi = std::sqrt(r * slope * s / params.rho_l);
  return out;
}

AzimuthalFlow g_family_flow(const PressureFluctuation& g, const PhysicalParams& params) {
  AzimuthalFlow flow;
  flow.v_phi = [g, params](double r, double t) { return g_family_fields(g, params, r, t).v_phi; };
  flow.p = [g, params](double r, double t) { return params.p_inf + g(r * std::sin(t)); };
  flow.dp_dr = [g](double r, double t) {
    const double s = std::sin(t);
    return g.slope(r * s) * s;
  };
  flow.dp_dtheta = [g](double r, double t) { return g.slope(r * std::sin(t)) * r * std::cos(t); };
  if (g.has_second()) {
    // v^2 = u = r s g'(r s) / rho_l, dv = du / (2 v).
    flow.dv_dr = [g, params](double r, double t) {
      const double s = std::sin(t);
      const double v = g_family_fields(g, params, r, t).v_phi;
      const double du = (s * g.slope(r * s) + r * s * s * g.second(r * s)) / params.rho_l;
      return v > 0.0 ? du / (2.0 * v) : 0.0;
    };
    flow.dv_dtheta = [g, params](double r, double t) {
      const double s = std::sin(t);
      const double c = std::cos(t);
      const double v = g_family_fields(g, params, r, t).v_phi;
      const double du = r * c * (g.slope(r * s) + r * s * g.second(r * s)) / params.rho_l;
      return v > 0.0 ? du / (2.0 * v) : 0.0;
    };
  }
  return flow;
}

AzimuthalFlow horn_torus_flow(const PhysicalParams& params) {
  const double a = std::sqrt(params.sigma / params.rho_l);
  const double sigma = params.sigma;
  const double p_inf = params.p_inf;
  AzimuthalFlow flow;
  flow.v_phi = [a](double r, double t) { return a / std::sqrt(r * std::sin(t)); };
  flow.p = [sigma, p_inf](double r, double t) { return p_inf - sigma / (r * std::sin(t)); };
  flow.dp_dr = [sigma](double r, double t) { return sigma / (r * r * std::sin(t)); };
  flow.dp_dtheta = [sigma](double r, double t) {
    const double s = std::sin(t);
    return sigma * std::cos(t) / (r * s * s);
  };
  flow.dv_dr = [a](double r, double t) { return -0.5 * a / (r * std::sqrt(r * std::sin(t))); };
  flow.dv_dtheta = [a](double r, double t) {
    const double s = std::sin(t);
    return -0.5 * a * std::cos(t) / (s * std::sqrt(r * s));
  };
  return flow;
}

CurlComponents curl_azimuthal(const AzimuthalFlow& flow, double r, double theta) {
  require_interior(r, theta);
  if (!flow.v_phi || !flow.dv_dr || !flow.dv_dtheta)
    throw DomainError("curl_azimuthal: flow lacks speed derivatives");
  const double v = flow.v_phi(r, theta);
  const double cot = std::cos(theta) / std::sin(theta);
  return {(flow.dv_dtheta(r, theta) + cot * v) / r, -(flow.dv_dr(r, theta) + v / r)};
}

}  // namespace bubble
