#pragma once

#include <array>
#include <cstdint>

namespace bubble::verification {

/// Coordinate box r in [r0, r1], theta in [theta0, theta1]; every test
/// function vanishes with all derivatives outside it.
struct SupportBox {
  double r0 = 0.0;
  double r1 = 0.0;
  double theta0 = 0.0;
  double theta1 = 0.0;

  bool contains(double r, double theta) const { return r > r0 && r < r1 && theta > theta0 && theta < theta1; }
  /// (r1 - r0)(theta1 - theta0) 2 pi, the coordinate measure of the support.
  double coordinate_measure() const;
};

/// Azimuthal factor of a scalar test function.
///   none:  1
///   mode:  sin(m phi + phase)
///   twist: exp(amplitude cos(m phi - twist r)), non-band-limited in phi
struct AzimuthalShape {
  enum class Kind { none, mode, twist };
  Kind kind = Kind::none;
  int m = 1;
  double amplitude = 0.5;
  double phase = 0.0;
  double twist = 0.0;
};

/// phi(r, theta, azimuth) = scale * b(u_r) b(u_theta) * A(r, azimuth) with
/// b(u) = exp(-1 / (1 - u^2)) and u the box coordinates mapped to (-1, 1).
class ScalarTestFunction {
 public:
  ScalarTestFunction(SupportBox box, AzimuthalShape azimuth, double scale = 1.0);

  const SupportBox& support() const { return box_; }
  const AzimuthalShape& azimuth() const { return azimuth_; }

  double value(double r, double theta, double phi) const;
  /// Coordinate partials (d_r, d_theta, d_phi).
  std::array<double, 3> partials(double r, double theta, double phi) const;

  template <class T>
  T eval(const T& r, const T& theta, const T& phi) const;

 private:
  SupportBox box_;
  AzimuthalShape azimuth_;
  double scale_;
};

/// Second factor h in zeta = grad f x grad h.
enum class Stream { x1, x2, x3 };

/// zeta = grad f x grad h with f a scalar test function and h a Cartesian
/// coordinate; divergence-free analytically and supported where f is.
/// Components are in the spherical orthonormal basis.
class VectorTestFunction {
 public:
  VectorTestFunction(ScalarTestFunction potential, Stream stream, double scale = 1.0);
  /// Field without the divergence-free structure: zeta = scale grad f.
  static VectorTestFunction gradient_field(ScalarTestFunction potential, double scale = 1.0);

  const SupportBox& support() const { return potential_.support(); }
  bool divergence_free() const { return divergence_free_; }

  /// (zeta_r, zeta_theta, zeta_phi).
  std::array<double, 3> components(double r, double theta, double phi) const;
  /// jacobian[i][j] = d zeta_i / d q_j with q = (r, theta, phi).
  std::array<std::array<double, 3>, 3> jacobian(double r, double theta, double phi) const;
  /// Components and jacobian from one set of derivative passes.
  void components_and_jacobian(double r, double theta, double phi, std::array<double, 3>& value,
                               std::array<std::array<double, 3>, 3>& jac) const;
  /// Spherical divergence from the exact partials.
  double divergence(double r, double theta, double phi) const;

  template <class T>
  std::array<T, 3> eval(const T& r, const T& theta, const T& phi) const;

 private:
  VectorTestFunction(ScalarTestFunction potential, Stream stream, double scale, bool divergence_free);

  ScalarTestFunction potential_;
  Stream stream_;
  double scale_;
  bool divergence_free_;
};

}  // namespace bubble::verification
