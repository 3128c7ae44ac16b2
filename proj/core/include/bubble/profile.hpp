#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace bubble {

enum class ProfileSource { analytic, network, file };

std::string_view to_string(ProfileSource source);

/// Axisymmetric surface r = R(theta) sampled on a polar-angle grid.
///
/// Derivatives are carried explicitly so analytic, network-differentiated
/// and file-loaded profiles share one interface. Construction validates:
/// equal lengths >= 2, strictly increasing grid inside [0, pi], and R > 0 at
/// every node with theta in (0, pi).
class RadialProfile {
 public:
  RadialProfile(std::vector<double> theta, std::vector<double> R, std::vector<double> dR,
                std::vector<double> d2R, ProfileSource source);

  /// Samples R, R' and R'' from callables on the given grid.
  template <class Fn, class DFn, class D2Fn>
  static RadialProfile sample(std::span<const double> theta, Fn&& R, DFn&& dR, D2Fn&& d2R,
                              ProfileSource source = ProfileSource::analytic) {
    std::vector<double> r, dr, d2r;
    r.reserve(theta.size());
    dr.reserve(theta.size());
    d2r.reserve(theta.size());
    for (double t : theta) {
      r.push_back(R(t));
      dr.push_back(dR(t));
      d2r.push_back(d2R(t));
    }
    return RadialProfile({theta.begin(), theta.end()}, std::move(r), std::move(dr),
                         std::move(d2r), source);
  }

  std::size_t size() const noexcept { return theta_.size(); }
  std::span<const double> theta() const noexcept { return theta_; }
  std::span<const double> R() const noexcept { return R_; }
  std::span<const double> dR() const noexcept { return dR_; }
  std::span<const double> d2R() const noexcept { return d2R_; }
  ProfileSource source() const noexcept { return source_; }

 private:
  std::vector<double> theta_;
  std::vector<double> R_;
  std::vector<double> dR_;
  std::vector<double> d2R_;
  ProfileSource source_;
};

/// n equally spaced nodes on [a, b], endpoints included.
std::vector<double> linspace(double a, double b, std::size_t n);

/// n cell-centred nodes pi (i + 1/2) / n; never touches the poles.
std::vector<double> midpoint_polar_grid(std::size_t n);

/// Horn torus r = C sin(theta) on the given grid.
RadialProfile horn_torus_profile(double C, std::span<const double> theta);

/// Sphere r = R0 on the given grid.
RadialProfile sphere_profile(double R0, std::span<const double> theta);

}  // namespace bubble
