#pragma once

#include <Eigen/Core>
#include <array>
#include <functional>
#include <vector>

#include "bubble/equilibrium.hpp"
#include "bubble/fields.hpp"
#include "bubble/params.hpp"
#include "bubble/profile.hpp"

namespace bubble::verification {

/// Laplace-Young residual per node,
///   p_g - p_inf - g(R sin) - sigma * div_S(n),
/// with the extension-route curvature. Nodes must avoid the poles.
std::vector<double> stress_balance_residual(const RadialProfile& profile, double p_g, const PhysicalParams& params,
                                            const PressureFluctuation& g);

struct BoundaryResiduals {
  double at_zero = 0.0;  ///< R'(0) - sqrt(R(0)^2 + R'(0)^2)
  double at_pi = 0.0;    ///< R'(pi) + sqrt(R(pi)^2 + R'(pi)^2)
};

/// How endpoint values are obtained from a sampled profile.
///   one_sided_stencil: quadratic through the R samples of the 3 nodes
///            nearest the pole, evaluated (with its slope) at the pole.
///   carried: the stored R, R' when a node sits on the pole, otherwise both
///            extrapolated quadratically from the 3 nearest nodes.
enum class EndpointScheme { one_sided_stencil, carried };

BoundaryResiduals boundary_residuals(double R0, double dR0, double Rpi, double dRpi);
BoundaryResiduals boundary_residuals(const RadialProfile& profile, EndpointScheme scheme = EndpointScheme::one_sided_stencil);

/// Central differences with h_r = relative_step * max(r, 1) and
/// h_theta = relative_step. `richardson` combines steps h and h/2 into a
/// fourth-order estimate.
struct FiniteDifference {
  double relative_step = 1e-6;
  bool richardson = false;
};

struct EulerResidual {
  double r = 0.0;      ///< -v^2 / r + (1/rho_l) d_r p
  double theta = 0.0;  ///< -v^2 cot / r + (1/(rho_l r)) d_theta p
};

/// Reduced Euler residuals of an azimuthal flow. Uses flow.dp_dr and
/// flow.dp_dtheta when present, finite differences otherwise. Throws
/// DomainError when |cot(theta)| > 1e8.
EulerResidual euler_residual(const AzimuthalFlow& flow, const PhysicalParams& params, double r, double theta,
                             const FiniteDifference& fd = {});

/// Magnitude scale for the Euler residual at a point: max(v^2/r, |d_r p|/rho_l, ...).
double euler_scale(const AzimuthalFlow& flow, const PhysicalParams& params, double r, double theta,
                   const FiniteDifference& fd = {});

/// r d_r p cot(theta) - d_theta p.
double characteristics_identity(const AzimuthalFlow& flow, double r, double theta, const FiniteDifference& fd = {});

/// Velocity (v_r, v_theta, v_phi) at (r, theta).
using SphericalVelocity = std::function<std::array<double, 3>(double r, double theta)>;

SphericalVelocity azimuthal_velocity(const AzimuthalFlow& flow);

/// max |v . n| over the surface nodes of the profile (all must be interior).
double kinematic_bc_check(const RadialProfile& profile, const SphericalVelocity& velocity);

using ScalarField3 = std::function<double(const Eigen::Vector3d&)>;
using VectorField3 = std::function<Eigen::Vector3d(const Eigen::Vector3d&)>;

struct GasResidual {
  double mass = 0.0;     ///< div(rho v)
  double thermal = 0.0;  ///< k/(gamma c_v) (Lap log rho - |grad rho|^2 / rho^2) - v . grad rho
};

/// Gas equations at a Cartesian point by central differences with step
/// h = step * max(1, |x|); second derivatives use the same h.
GasResidual gas_interior_residual(const ScalarField3& rho, const VectorField3& velocity, const PhysicalParams& params,
                                  const Eigen::Vector3d& x, double step = 1e-4);

}  // namespace bubble::verification
