#pragma once

namespace bubble {

/// Fluid and gas constants, SI units.
struct PhysicalParams {
  double sigma = 7.28e-2;    ///< surface tension, N/m
  double p_inf = 1.013e5;    ///< far-field pressure, Pa
  double rho_l = 998.2;      ///< liquid density, kg/m^3
  double R_g = 287.05;       ///< specific gas constant, J/(kg K)
  double T_inf = 293.15;     ///< far-field temperature, K
  double c_v = 717.63;       ///< gas heat capacity at constant volume, J/(kg K)
  double gamma = 1.0 + 287.05 / 717.63;  ///< adiabatic constant
  double kappa = 2.57e-2;    ///< gas thermal conductivity, W/(m K)

  /// Water/air at 20 C; gamma derived from R_g / c_v.
  static PhysicalParams water_air();

  /// gamma = 1 + R_g / c_v for the current gas constants.
  double consistent_gamma() const { return 1.0 + R_g / c_v; }

  /// Throws DomainError on a sign violation or when gamma disagrees with
  /// 1 + R_g / c_v by more than 1e-12 relative. sigma may take any sign.
  void validate() const;
};

}  // namespace bubble
