#pragma once

#include <cstddef>

#include "bubble/params.hpp"
#include "bubble/test_functions.hpp"

namespace bubble::verification {

/// Tensor grid over a test function's support box: composite Simpson in r
/// and theta, periodic trapezoid in phi.
struct QuadratureGrid {
  std::size_t n_r = 256;
  std::size_t n_theta = 256;
  std::size_t n_phi = 64;
};

struct WeakFormResult {
  double value = 0.0;          ///< integral of the full integrand (Jacobian r^2 sin included)
  double reduced_value = 0.0;  ///< integral after integrating the d_phi term away (momentum only)
  double scale = 0.0;          ///< natural magnitude used for relative tolerances
  std::size_t nodes = 0;
};

/// Momentum weak form  integral of v^T (grad zeta) v dx  for the equilibrium
/// liquid velocity v = sqrt(sigma / (rho_l r sin)) phi-hat.
///
/// value:         (sigma/rho_l) [d_phi zeta_phi / sin + zeta_r + cot zeta_theta]
/// reduced_value: (sigma/rho_l) [-d_r(r zeta_r) - d_theta zeta_theta]
/// both over dr dtheta dphi. scale = (sigma/rho_l) * coordinate measure.
///
/// `C` is the torus scale of the bubble r <= C sin(theta); throws DomainError
/// when the support meets the closed bubble.
WeakFormResult weak_form_momentum(const VectorTestFunction& zeta, const PhysicalParams& params, double C,
                                  const QuadratureGrid& grid = {});

/// Continuity weak form  integral of v . grad(phi) dx, i.e.
/// sqrt(sigma/rho_l) sqrt(r / sin) d_phi(phi) over dr dtheta dphi.
/// scale = sqrt(sigma/rho_l) * coordinate measure.
WeakFormResult weak_form_continuity(const ScalarTestFunction& phi, const PhysicalParams& params, double C,
                                    const QuadratureGrid& grid = {});

/// True when the support box meets the closed bubble r <= C sin(theta).
bool support_meets_bubble(const SupportBox& box, double C);

}  // namespace bubble::verification
