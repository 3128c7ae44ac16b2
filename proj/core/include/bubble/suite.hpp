#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bubble/params.hpp"
#include "bubble/report.hpp"
#include "bubble/test_functions.hpp"
#include "bubble/weak_form.hpp"

namespace bubble::verification {

/// Which field a relative perturbation is applied to before checking.
///   shape:        R -> (1 + eps) R
///   pressure:     g -> (1 + eps) g (torus); g = eps p_inf (sphere)
///   velocity:     v -> (1 + eps) v (torus); v = eps sqrt(p_inf/rho_l) (sphere)
///   gas_pressure: p_g -> (1 + eps) p_g
///   gas_density:  rho_g -> (1 + eps) rho_g
enum class PerturbField { shape, pressure, velocity, gas_pressure, gas_density };

std::optional<PerturbField> parse_perturb_field(std::string_view name);
std::string_view to_string(PerturbField field);

struct SuiteOptions {
  double perturb = 0.0;
  PerturbField field = PerturbField::shape;
  /// Replaces the default tolerance of the named check.
  std::map<std::string, double> tolerances;
  bool weak_forms = true;
  QuadratureGrid weak_quadrature{128, 128, 32};
  std::uint64_t seed = 20240607;
};

/// Check names of each suite, in report order.
std::vector<std::string> horn_torus_check_names();
std::vector<std::string> sphere_check_names();

/// Every residual of the horn-torus state of volume V.
std::vector<ResidualReport> horn_torus_suite(const PhysicalParams& params, double V, const SuiteOptions& options = {});

/// Every residual of the spherical state of mass M.
std::vector<ResidualReport> sphere_suite(const PhysicalParams& params, double M, const SuiteOptions& options = {});

/// Five divergence-free vector test functions with supports outside the
/// torus of scale C, covering all three streams and azimuthal shapes.
std::vector<VectorTestFunction> standard_vector_family(double C);

/// Scalar test functions (azimuth-free, single modes, twisted) outside the
/// torus of scale C.
std::vector<ScalarTestFunction> standard_scalar_family(double C);

}  // namespace bubble::verification
