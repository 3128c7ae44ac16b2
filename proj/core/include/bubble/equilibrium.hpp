#pragma once

#include <functional>
#include <vector>

#include "bubble/params.hpp"

namespace bubble {

/// Pressure fluctuation g(s) in p_l = p_inf + g(r sin(theta)), s > 0.
class PressureFluctuation {
 public:
  enum class Kind { canonical_horn_torus, custom };
  using Fn = std::function<double(double)>;

  /// g(s) = -sigma / s.
  static PressureFluctuation canonical(double sigma);
  /// `second` (g'') is optional; without it flow-speed derivatives are not
  /// available analytically.
  static PressureFluctuation custom(Fn g, Fn slope, Fn second = {});
  static PressureFluctuation zero();

  double operator()(double s) const { return g_(s); }
  double slope(double s) const { return slope_(s); }
  bool has_second() const { return static_cast<bool>(second_); }
  double second(double s) const { return second_(s); }
  Kind kind() const { return kind_; }

  /// g' >= 0 at every sample and |g(1e9 sigma / p_inf)| <= 1e-6 p_inf.
  bool admissible(const PhysicalParams& params, const std::vector<double>& samples) const;

 private:
  PressureFluctuation(Kind kind, Fn g, Fn slope, Fn second);

  Kind kind_;
  Fn g_;
  Fn slope_;
  Fn second_;
};

/// Solved horn-torus state r = C sin(theta).
struct HornTorusEquilibrium {
  double C = 0.0;      ///< torus scale, m
  double p_g = 0.0;    ///< gas pressure, Pa
  double rho_g = 0.0;  ///< gas density, kg/m^3
  double M = 0.0;      ///< bubble mass, kg
  double V = 0.0;      ///< bubble volume, m^3
};

/// Spherical bubble of radius R in a quiescent neighbourhood.
struct SphereEquilibrium {
  double R = 0.0;
  double p_g = 0.0;
  double rho_g = 0.0;
  double M = 0.0;
  double V = 0.0;
};

struct GasState {
  double rho_g = 0.0;
  double p_g = 0.0;
  double v_g = 0.0;
};

/// p_inf C^3 - 4 sigma C^2 - 4 R_g T_inf M / pi^2.
double horn_torus_cubic(const PhysicalParams& params, double M, double C);

/// p_inf R^3 + 2 sigma R^2 - 3 R_g T_inf M / (4 pi).
double sphere_cubic(const PhysicalParams& params, double M, double R);

/// Unique root C >= 4 sigma / p_inf of the horn-torus mass cubic.
///
/// M = 0 returns C = 4 sigma / p_inf with zero gas pressure and density.
/// Throws DomainError for M < 0 (see explore_roots) or when no positive root
/// exists, NumericError if the guarded Newton solve hits its 200-step cap.
HornTorusEquilibrium solve_horn_torus(const PhysicalParams& params, double M);

/// Horn torus of prescribed volume: C = (4 V / pi^2)^(1/3), M = rho_g V.
/// Throws DomainError when the resulting gas pressure is not positive.
HornTorusEquilibrium horn_torus_from_volume(const PhysicalParams& params, double V);

/// All positive roots of the horn-torus cubic, ascending. Negative masses
/// are explored only when `allow_nonpositive_mass` is set, and return an
/// empty list otherwise.
std::vector<double> explore_roots(const PhysicalParams& params, double M, bool allow_nonpositive_mass);

/// Spherical radius from the sphere mass cubic; gas state uses
/// p_g = p_inf + 2 sigma / R. Throws DomainError for M <= 0.
SphereEquilibrium solve_sphere_radius(const PhysicalParams& params, double M);

/// Gas state inside the torus of scale C. Throws DomainError for
/// C <= 4 sigma / p_inf.
GasState gas_state(const PhysicalParams& params, double C);

}  // namespace bubble
