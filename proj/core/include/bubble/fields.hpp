#pragma once

#include <array>
#include <functional>

#include "bubble/equilibrium.hpp"
#include "bubble/params.hpp"

namespace bubble {

using PolarFn = std::function<double(double r, double theta)>;

/// Liquid state v = v_phi(r, theta) phi-hat, p_l(r, theta). Derivative
/// evaluators are optional: an empty one means "differentiate numerically".
struct AzimuthalFlow {
  PolarFn v_phi;
  PolarFn p;
  PolarFn dp_dr;
  PolarFn dp_dtheta;
  PolarFn dv_dr;
  PolarFn dv_dtheta;
};

/// One evaluation of the liquid fields.
struct FlowSample {
  double v_phi = 0.0;  ///< azimuthal speed, m/s (nonnegative branch)
  double p_l = 0.0;    ///< liquid pressure, Pa
  double r = 0.0;
  double theta = 0.0;
};

/// p_l = p_inf + g(r sin), v_phi = sqrt(r g'(r sin) sin / rho_l).
///
/// Throws DomainError for r <= 0, theta outside (0, pi), or g' < 0 at the
/// point.
FlowSample g_family_fields(const PressureFluctuation& g, const PhysicalParams& params, double r, double theta);

/// Flow built from a pressure fluctuation with analytic pressure gradients;
/// speed derivatives are attached when g'' is available.
AzimuthalFlow g_family_flow(const PressureFluctuation& g, const PhysicalParams& params);

/// v_phi = sqrt(sigma / (rho_l r sin)), p_l = p_inf - sigma / (r sin), in
/// closed form with all derivatives.
AzimuthalFlow horn_torus_flow(const PhysicalParams& params);

/// Spherical components (r-hat, theta-hat) of curl(v_phi phi-hat); the
/// phi-hat component vanishes identically.
struct CurlComponents {
  double r = 0.0;
  double theta = 0.0;
};

/// curl = (d_theta v + cot v) / r r-hat - (d_r v + v / r) theta-hat.
/// Requires flow.dv_dr and flow.dv_dtheta; throws DomainError otherwise.
CurlComponents curl_azimuthal(const AzimuthalFlow& flow, double r, double theta);

}  // namespace bubble
