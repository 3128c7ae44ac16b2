#include "bubble/equilibrium_io.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <nlohmann/json.hpp>
#include <ostream>

#include "bubble/errors.hpp"
#include "bubble/geometry.hpp"
#include "bubble/profile.hpp"

namespace bubble {

void write_equilibrium_surface(std::ostream& out, const HornTorusEquilibrium& eq, const PhysicalParams& params,
                               std::size_t n) {
  if (n < 2) throw DomainError("equilibrium export needs at least 2 nodes");
  const auto theta = midpoint_polar_grid(n);
  const auto g = PressureFluctuation::canonical(params.sigma);
  out << "theta,R,dR,d2R,curvature,p_l_surface,v_phi_surface\n"
      << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (double t : theta) {
    const double s = std::sin(t);
    const double R = eq.C * s;
    const double dR = eq.C * std::cos(t);
    const double d2R = -R;
    const double arg = R * s;
    out << t << ',' << R << ',' << dR << ',' << d2R << ',' << geometry::mean_curvature_extension(R, dR, d2R, t)
        << ',' << params.p_inf + g(arg) << ',' << std::sqrt(params.sigma / (params.rho_l * arg)) << '\n';
  }
}

void write_equilibrium_summary(std::ostream& out, const HornTorusEquilibrium& eq) {
  nlohmann::json j = {{"C", eq.C}, {"p_g", eq.p_g}, {"rho_g", eq.rho_g}, {"M", eq.M}, {"V", eq.V}};
  out << j.dump() << '\n';
}

HornTorusEquilibrium read_equilibrium_summary(std::istream& in) {
  try {
    const auto j = nlohmann::json::parse(in);
    HornTorusEquilibrium eq;
    eq.C = j.at("C").get<double>();
    eq.p_g = j.at("p_g").get<double>();
    eq.rho_g = j.at("rho_g").get<double>();
    eq.M = j.at("M").get<double>();
    eq.V = j.at("V").get<double>();
    return eq;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("equilibrium summary: ") + e.what());
  }
}

}  // namespace bubble
