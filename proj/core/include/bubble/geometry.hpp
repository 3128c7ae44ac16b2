#pragma once

#include "bubble/profile.hpp"

namespace bubble::geometry {

/// Unit normal in the spherical basis (r-hat, theta-hat, phi-hat).
struct Normal {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Coefficients of the first (E, F, G) and second (e, f, g2) fundamental
/// forms of x(theta, phi) = R(theta) (sin t cos p, sin t sin p, cos t).
struct FundamentalForms {
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;
  double e = 0.0;
  double f = 0.0;
  double g2 = 0.0;
};

/// n = grad(R - r) / |grad(R - r)| at (r, theta); points toward decreasing r.
///
/// Throws DomainError for r <= 0 or theta outside (0, pi).
Normal surface_normal(double R, double dR, double r, double theta);

/// Surface divergence of the normal from div(n) of the extended normal field
/// evaluated at r = R(theta). A sphere of radius R0 gives -2/R0.
///
/// Throws SingularEvaluationError when sin(theta) = 0 or R = 0.
double mean_curvature_extension(double R, double dR, double d2R, double theta);

/// Throws SingularEvaluationError when sin(theta) = 0 or R = 0.
FundamentalForms fundamental_forms(double R, double dR, double d2R, double theta);

/// 2H from the fundamental forms, H = (eG - 2fF + g E) / (2 (EG - F^2)).
double mean_curvature_forms(double R, double dR, double d2R, double theta);

/// (2 pi / 3) * integral of R^3 sin(theta) over the profile grid, composite
/// Simpson on the (possibly non-uniform) nodes. Fourth order on smooth data;
/// an odd interval count closes with a third-order end panel.
double enclosed_volume(const RadialProfile& profile);

}  // namespace bubble::geometry
