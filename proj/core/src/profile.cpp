#include "bubble/profile.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bubble/errors.hpp"

namespace bubble {

std::string_view to_string(ProfileSource source) {
  switch (source) {
    case ProfileSource::analytic:
      return "analytic";
    case ProfileSource::network:
      return "network";
    case ProfileSource::file:
      return "file";
  }
  return "unknown";
}

RadialProfile::RadialProfile(std::vector<double> theta, std::vector<double> R,
                             std::vector<double> dR, std::vector<double> d2R,
                             ProfileSource source)
    : theta_(std::move(theta)),
      R_(std::move(R)),
      dR_(std::move(dR)),
      d2R_(std::move(d2R)),
      source_(source) {
  const std::size_t n = theta_.size();
  if (n < 2) throw DomainError("radial profile needs at least 2 nodes");
  if (R_.size() != n || dR_.size() != n || d2R_.size() != n)
    throw DomainError("radial profile sequences differ in length");
  for (std::size_t i = 0; i < n; ++i) {
    const double t = theta_[i];
    if (!std::isfinite(t) || t < 0.0 || t > std::numbers::pi)
      throw DomainError("profile angle outside [0, pi] at node " + std::to_string(i));
    if (i > 0 && !(t > theta_[i - 1]))
      throw DomainError("profile grid not strictly increasing at node " + std::to_string(i));
    if (!std::isfinite(R_[i]) || !std::isfinite(dR_[i]) || !std::isfinite(d2R_[i]))
      throw DomainError("non-finite profile sample at node " + std::to_string(i));
    if (t > 0.0 && t < std::numbers::pi && !(R_[i] > 0.0))
      throw DomainError("profile radius must be positive at interior node " + std::to_string(i));
  }
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = a;
    return out;
  }
  const double h = (b - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = a + h * static_cast<double>(i);
  out[n - 1] = b;
  return out;
}

std::vector<double> midpoint_polar_grid(std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  return out;
}

RadialProfile horn_torus_profile(double C, std::span<const double> theta) {
  return RadialProfile::sample(
      theta, [C](double t) { return C * std::sin(t); },
      [C](double t) { return C * std::cos(t); }, [C](double t) { return -C * std::sin(t); });
}

RadialProfile sphere_profile(double R0, std::span<const double> theta) {
  return RadialProfile::sample(
      theta, [R0](double) { return R0; }, [](double) { return 0.0; },
      [](double) { return 0.0; });
}

}  // namespace bubble
