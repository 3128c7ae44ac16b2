#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bubble/equilibrium.hpp"
#include "bubble/errors.hpp"
#include "bubble/fields.hpp"
#include "bubble/residuals.hpp"

using namespace bubble;
using namespace bubble::verification;
constexpr double kPi = std::numbers::pi;

namespace {

std::vector<double> interior_grid(std::size_t n) {
  auto g = linspace(0.0, kPi, n);
  return {g.begin() + 1, g.end() - 1};
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST(StressBalance, HornTorusVanishes) {
  const auto params = PhysicalParams::water_air();
  const auto eq = horn_torus_from_volume(params, 5e-4);
  const auto grid = interior_grid(401);
  const auto res = stress_balance_residual(horn_torus_profile(eq.C, grid), eq.p_g, params,
                                           PressureFluctuation::canonical(params.sigma));
  EXPECT_LE(max_abs(res), 1e-10 * params.p_inf);
}

TEST(StressBalance, SphereWithInwardNormalConvention) {
  const auto params = PhysicalParams::water_air();
  const double R0 = 1e-3;
  const auto grid = interior_grid(101);
  const auto res = stress_balance_residual(sphere_profile(R0, grid), params.p_inf - 2.0 * params.sigma / R0, params,
                                           PressureFluctuation::zero());
  EXPECT_LE(max_abs(res), 1e-10 * params.p_inf);
}

TEST(StressBalance, DetectsWrongGasPressure) {
  const auto params = PhysicalParams::water_air();
  const auto eq = horn_torus_from_volume(params, 5e-4);
  const auto grid = interior_grid(51);
  const auto res = stress_balance_residual(horn_torus_profile(eq.C, grid), eq.p_g * 1.01, params,
                                           PressureFluctuation::canonical(params.sigma));
  EXPECT_NEAR(max_abs(res), 0.01 * eq.p_g, 1e-6 * eq.p_g);
}

TEST(Boundary, ClosedFormValues) {
  const double C = 0.2;
  const auto b = boundary_residuals(0.0, C, 0.0, -C);
  EXPECT_EQ(b.at_zero, 0.0);
  EXPECT_EQ(b.at_pi, 0.0);
  const auto s = boundary_residuals(1.0, 0.0, 1.0, 0.0);
  EXPECT_EQ(s.at_zero, -1.0);
  EXPECT_EQ(s.at_pi, 1.0);
}

TEST(Boundary, SampledHornTorusBothSchemes) {
  const double C = 0.05;
  const auto p = horn_torus_profile(C, linspace(0.0, kPi, 401));
  const auto carried = boundary_residuals(p, EndpointScheme::carried);
  EXPECT_LE(std::abs(carried.at_zero), 1e-15);
  EXPECT_LE(std::abs(carried.at_pi), 1e-15);
  // The stencil recovers R ~ 0 and R' ~ C up to O(h^2).
  const auto stencil = boundary_residuals(p, EndpointScheme::one_sided_stencil);
  const double h = kPi / 400;
  EXPECT_LE(std::abs(stencil.at_zero), C * h * h);
  EXPECT_LE(std::abs(stencil.at_pi), C * h * h);
}

TEST(Boundary, StencilOnMidpointGrid) {
  const double C = 1.0;
  const auto p = horn_torus_profile(C, midpoint_polar_grid(200));
  const auto b = boundary_residuals(p);
  EXPECT_LE(std::abs(b.at_zero), 1e-3);
  EXPECT_LE(std::abs(b.at_pi), 1e-3);
  EXPECT_THROW(boundary_residuals(horn_torus_profile(C, std::vector<double>{0.5, 1.0})), DomainError);
}

TEST(Euler, HornTorusFlowAnalyticAndDifferenced) {
  const auto params = PhysicalParams::water_air();
  const auto flow = horn_torus_flow(params);
  AzimuthalFlow no_dp = flow;
  no_dp.dp_dr = nullptr;
  no_dp.dp_dtheta = nullptr;
  for (double r : {0.01, 0.1, 1.0})
    for (double t : {0.1, 0.9, kPi / 2, 2.5}) {
      const auto e = euler_residual(flow, params, r, t);
      const double scale = euler_scale(flow, params, r, t);
      EXPECT_LE(std::abs(e.r), 1e-12 * scale);
      EXPECT_LE(std::abs(e.theta), 1e-12 * scale);
      const auto f = euler_residual(no_dp, params, r, t, {1e-5, true});
      EXPECT_LE(std::abs(f.r), 1e-4 * scale);
      EXPECT_LE(std::abs(f.theta), 1e-4 * scale);
    }
}

TEST(Euler, GenericFamilyMember) {
  const auto params = PhysicalParams::water_air();
  const double k = 3.0;
  const auto g = PressureFluctuation::custom([k](double s) { return -k * std::exp(-s); },
                                             [k](double s) { return k * std::exp(-s); });
  const auto flow = g_family_flow(g, params);
  const auto e = euler_residual(flow, params, 0.7, 1.2);
  EXPECT_LE(std::abs(e.r), 1e-12 * euler_scale(flow, params, 0.7, 1.2));
  EXPECT_LE(std::abs(e.theta), 1e-12 * euler_scale(flow, params, 0.7, 1.2));
}

TEST(Euler, AxisAndOriginRejected) {
  const auto params = PhysicalParams::water_air();
  const auto flow = horn_torus_flow(params);
  EXPECT_THROW(euler_residual(flow, params, 1.0, 1e-10), DomainError);
  EXPECT_THROW(euler_residual(flow, params, 0.0, 1.0), DomainError);
}

TEST(Characteristics, GFamilyPressureSatisfiesIdentity) {
  const auto params = PhysicalParams::water_air();
  const auto flow = horn_torus_flow(params);
  for (double t : {0.3, 1.0, 2.0}) EXPECT_NEAR(characteristics_identity(flow, 0.2, t), 0.0, 1e-10);
}

TEST(Characteristics, NonFamilyPressureDoesNot) {
  // p = p_inf + r cos(theta) gives r cos cot + r sin = r / sin.
  AzimuthalFlow flow;
  flow.p = [](double r, double t) { return 1e5 + r * std::cos(t); };
  const double r = 0.5, t = 1.0;
  EXPECT_NEAR(characteristics_identity(flow, r, t, {1e-3, true}), r / std::sin(t), 1e-7);
}

TEST(Kinematic, AzimuthalFlowIsTangent) {
  const auto params = PhysicalParams::water_air();
  const auto p = horn_torus_profile(0.05, interior_grid(101));
  EXPECT_EQ(kinematic_bc_check(p, azimuthal_velocity(horn_torus_flow(params))), 0.0);
}

TEST(Kinematic, RadialFlowIsNot) {
  const auto p = sphere_profile(1.0, interior_grid(11));
  const SphericalVelocity radial = [](double, double) { return std::array<double, 3>{0.3, 0.0, 0.0}; };
  EXPECT_NEAR(kinematic_bc_check(p, radial), 0.3, 1e-15);
}

TEST(GasInterior, UniformStateAtRest) {
  const auto params = PhysicalParams::water_air();
  const auto r = gas_interior_residual([](const Eigen::Vector3d&) { return 1.2; },
                                       [](const Eigen::Vector3d&) { return Eigen::Vector3d::Zero(); }, params,
                                       Eigen::Vector3d(0.01, -0.02, 0.03));
  EXPECT_EQ(r.mass, 0.0);
  EXPECT_EQ(r.thermal, 0.0);
}

TEST(GasInterior, SymbolicOracleForQuadraticDensity) {
  // rho = 1 + z^2, v = 0: thermal = D (2 - 6 z^2) / (1 + z^2)^2 with D = kappa / (gamma c_v).
  const auto params = PhysicalParams::water_air();
  const double D = params.kappa / (params.gamma * params.c_v);
  for (double z : {0.0, 0.5, 1.3}) {
    const auto r = gas_interior_residual([](const Eigen::Vector3d& x) { return 1.0 + x[2] * x[2]; },
                                         [](const Eigen::Vector3d&) { return Eigen::Vector3d::Zero(); }, params,
                                         Eigen::Vector3d(0.1, 0.2, z));
    const double expect = D * (2.0 - 6.0 * z * z) / ((1.0 + z * z) * (1.0 + z * z));
    EXPECT_NEAR(r.thermal, expect, 1e-6 * D);
    EXPECT_EQ(r.mass, 0.0);
  }
}

TEST(GasInterior, UniformTranslationHasNoMassResidual) {
  const auto params = PhysicalParams::water_air();
  const Eigen::Vector3d u(0.3, -0.1, 0.2);
  const auto r = gas_interior_residual([](const Eigen::Vector3d&) { return 2.0; },
                                       [u](const Eigen::Vector3d&) { return u; }, params, Eigen::Vector3d(1, 2, 3));
  EXPECT_NEAR(r.mass, 0.0, 1e-10);
  EXPECT_NEAR(r.thermal, 0.0, 1e-10);
}

TEST(GasInterior, NonPositiveDensityRejected) {
  const auto params = PhysicalParams::water_air();
  EXPECT_THROW(gas_interior_residual([](const Eigen::Vector3d&) { return 0.0; },
                                     [](const Eigen::Vector3d&) { return Eigen::Vector3d::Zero(); }, params,
                                     Eigen::Vector3d::Zero()),
               DomainError);
}
