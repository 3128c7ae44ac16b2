#pragma once

#include <iosfwd>

#include "bubble/equilibrium.hpp"
#include "bubble/params.hpp"

namespace bubble {

/// Surface export `theta,R,dR,d2R,curvature,p_l_surface,v_phi_surface` for
/// r = C sin(theta) on the n-node midpoint grid theta_i = pi (i + 1/2) / n.
/// Curvature is the surface divergence of the normal; p_l and v_phi are the
/// canonical liquid fields evaluated on the surface.
void write_equilibrium_surface(std::ostream& out, const HornTorusEquilibrium& eq, const PhysicalParams& params,
                               std::size_t n);

/// One-line JSON record {"C", "p_g", "rho_g", "M", "V"} at round-trip
/// precision.
void write_equilibrium_summary(std::ostream& out, const HornTorusEquilibrium& eq);

/// Inverse of write_equilibrium_summary. Throws InputError on a malformed
/// record.
HornTorusEquilibrium read_equilibrium_summary(std::istream& in);

}  // namespace bubble
