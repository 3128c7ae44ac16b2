#include "bubble/params.hpp"

#include <cmath>

#include "bubble/errors.hpp"

namespace bubble {

PhysicalParams PhysicalParams::water_air() {
  PhysicalParams p;
  p.gamma = p.consistent_gamma();
  return p;
}

void PhysicalParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be positive");
  };
  positive(p_inf, "p_inf");
  positive(rho_l, "rho_l");
  positive(R_g, "R_g");
  positive(T_inf, "T_inf");
  positive(c_v, "c_v");
  if (!std::isfinite(sigma)) throw DomainError("sigma must be finite");
  if (!(gamma > 1.0)) throw DomainError("gamma must exceed 1");
  if (!(kappa >= 0.0)) throw DomainError("kappa must be nonnegative");
  if (std::abs(gamma - consistent_gamma()) > 1e-12 * gamma)
    throw DomainError("gamma must equal 1 + R_g / c_v");
}

}  // namespace bubble
