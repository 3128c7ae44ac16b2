#include "bubble/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bubble/errors.hpp"
#include "bubble/roots.hpp"

namespace bubble {

namespace {

constexpr double kPi = std::numbers::pi;

double torus_mass_term(const PhysicalParams& p, double M) { return 4.0 * p.R_g * p.T_inf * M / (kPi * kPi); }

double sphere_mass_term(const PhysicalParams& p, double M) { return 3.0 * p.R_g * p.T_inf * M / (4.0 * kPi); }

}  // namespace

PressureFluctuation::PressureFluctuation(Kind kind, Fn g, Fn slope, Fn second)
    : kind_(kind), g_(std::move(g)), slope_(std::move(slope)), second_(std::move(second)) {}

PressureFluctuation PressureFluctuation::canonical(double sigma) {
  return PressureFluctuation(
      Kind::canonical_horn_torus, [sigma](double s) { return -sigma / s; },
      [sigma](double s) { return sigma / (s * s); }, [sigma](double s) { return -2.0 * sigma / (s * s * s); });
}

PressureFluctuation PressureFluctuation::custom(Fn g, Fn slope, Fn second) {
  if (!g || !slope) throw DomainError("pressure fluctuation needs g and g'");
  return PressureFluctuation(Kind::custom, std::move(g), std::move(slope), std::move(second));
}

PressureFluctuation PressureFluctuation::zero() {
  return custom([](double) { return 0.0; }, [](double) { return 0.0; }, [](double) { return 0.0; });
}

bool PressureFluctuation::admissible(const PhysicalParams& params, const std::vector<double>& samples) const {
  for (double s : samples)
    if (!(s > 0.0) || !(slope(s) >= 0.0)) return false;
  const double far = 1e9 * std::abs(params.sigma) / params.p_inf;
  return std::abs(g_(far > 0.0 ? far : 1e9)) <= 1e-6 * params.p_inf;
}

double horn_torus_cubic(const PhysicalParams& params, double M, double C) {
  return params.p_inf * C * C * C - 4.0 * params.sigma * C * C - torus_mass_term(params, M);
}

double sphere_cubic(const PhysicalParams& params, double M, double R) {
  return params.p_inf * R * R * R + 2.0 * params.sigma * R * R - sphere_mass_term(params, M);
}

namespace {

HornTorusEquilibrium torus_state(const PhysicalParams& params, double C) {
  HornTorusEquilibrium eq;
  eq.C = C;
  eq.p_g = params.p_inf - 4.0 * params.sigma / C;
  eq.rho_g = eq.p_g / (params.R_g * params.T_inf);
  eq.V = kPi * kPi * C * C * C / 4.0;
  eq.M = eq.rho_g * eq.V;
  return eq;
}

void check_residual(double residual, double scale, const char* what) {
  if (!(std::abs(residual) <= 1e-12 * scale)) throw NumericError(std::string(what) + ": residual above tolerance");
}

}  // namespace

HornTorusEquilibrium solve_horn_torus(const PhysicalParams& params, double M) {
  params.validate();
  if (!(M >= 0.0)) throw DomainError("solve_horn_torus: negative mass (use explore_roots)");
  const double floor = 4.0 * params.sigma / params.p_inf;
  if (M == 0.0) {
    if (!(floor > 0.0)) throw DomainError("solve_horn_torus: no positive root for M = 0 with sigma <= 0");
    HornTorusEquilibrium eq = torus_state(params, floor);
    eq.p_g = 0.0;
    eq.rho_g = 0.0;
    eq.M = 0.0;
    return eq;
  }
  const double K = torus_mass_term(params, M);
  const double lo = std::max(floor, 0.0);
  const double hi = lo + 1.01 * std::cbrt(K / params.p_inf);
  const auto f = [&](double C) {
    return std::pair{horn_torus_cubic(params, M, C), 3.0 * params.p_inf * C * C - 8.0 * params.sigma * C};
  };
  const double C = roots::guarded_newton(f, lo, hi);
  const double scale = std::max({params.p_inf * C * C * C, 4.0 * std::abs(params.sigma) * C * C, K});
  check_residual(horn_torus_cubic(params, M, C), scale, "solve_horn_torus");
  return torus_state(params, C);
}

HornTorusEquilibrium horn_torus_from_volume(const PhysicalParams& params, double V) {
  params.validate();
  if (!(V > 0.0)) throw DomainError("horn_torus_from_volume: volume must be positive");
  const double C = std::cbrt(4.0 * V / (kPi * kPi));
  HornTorusEquilibrium eq = torus_state(params, C);
  if (!(eq.p_g > 0.0)) throw DomainError("horn_torus_from_volume: nonpositive gas pressure (C <= 4 sigma / p_inf)");
  return eq;
}

std::vector<double> explore_roots(const PhysicalParams& params, double M, bool allow_nonpositive_mass) {
  params.validate();
  if (M > 0.0) return {solve_horn_torus(params, M).C};
  if (M == 0.0) {
    const double C = 4.0 * params.sigma / params.p_inf;
    if (C > 0.0) return {C};
    return {};
  }
  if (!allow_nonpositive_mass) return {};
  const auto all = roots::real_cubic_roots(params.p_inf, -4.0 * params.sigma, 0.0, -torus_mass_term(params, M));
  std::vector<double> positive;
  for (double C : all)
    if (C > 0.0) positive.push_back(C);
  return positive;
}

SphereEquilibrium solve_sphere_radius(const PhysicalParams& params, double M) {
  params.validate();
  if (!(M > 0.0)) throw DomainError("solve_sphere_radius: no positive radius for M <= 0");
  const double K = sphere_mass_term(params, M);
  const double lo = std::max(-2.0 * params.sigma / params.p_inf, 0.0);
  const double hi = lo + 1.01 * std::cbrt(K / params.p_inf);
  const auto f = [&](double R) {
    return std::pair{sphere_cubic(params, M, R), 3.0 * params.p_inf * R * R + 4.0 * params.sigma * R};
  };
  const double R = roots::guarded_newton(f, lo, hi);
  const double scale = std::max({params.p_inf * R * R * R, 2.0 * std::abs(params.sigma) * R * R, K});
  check_residual(sphere_cubic(params, M, R), scale, "solve_sphere_radius");

  SphereEquilibrium eq;
  eq.R = R;
  eq.p_g = params.p_inf + 2.0 * params.sigma / R;
  eq.rho_g = eq.p_g / (params.R_g * params.T_inf);
  eq.V = 4.0 * kPi / 3.0 * R * R * R;
  eq.M = M;
  return eq;
}

GasState gas_state(const PhysicalParams& params, double C) {
  params.validate();
  if (!(C > 4.0 * params.sigma / params.p_inf) || !(C > 0.0))
    throw DomainError("gas_state: C must exceed 4 sigma / p_inf");
  GasState gs;
  gs.p_g = params.p_inf - 4.0 * params.sigma / C;
  gs.rho_g = gs.p_g / (params.R_g * params.T_inf);
  gs.v_g = 0.0;
  return gs;
}

}  // namespace bubble
