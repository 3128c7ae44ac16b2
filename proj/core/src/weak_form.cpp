#include "bubble/weak_form.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "bubble/dual.hpp"
#include "bubble/errors.hpp"
#include "bubble/profile.hpp"
#include "bubble/quadrature.hpp"

namespace bubble::verification {

bool support_meets_bubble(const SupportBox& box, double C) {
  const double half = 0.5 * std::numbers::pi;
  double max_sin;
  if (box.theta0 <= half && box.theta1 >= half)
    max_sin = 1.0;
  else
    max_sin = std::max(std::sin(box.theta0), std::sin(box.theta1));
  return box.r0 <= C * max_sin;
}

namespace {

void check_grid(const QuadratureGrid& grid) {
  if (grid.n_r < 2 || grid.n_theta < 2 || grid.n_phi < 1) throw DomainError("quadrature needs n_r, n_theta >= 2");
}

// Integrates the N outputs of f(r, theta, phi) over the box: for every
// (r, theta) node each phi row is summed pairwise, then Simpson in theta and r.
template <std::size_t N, class F>
std::array<double, N> integrate(const SupportBox& box, const QuadratureGrid& grid, F&& f) {
  const auto r = linspace(box.r0, box.r1, grid.n_r);
  const auto t = linspace(box.theta0, box.theta1, grid.n_theta);
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(grid.n_phi);
  std::array<std::vector<double>, N> row, over_theta, over_r;
  for (std::size_t c = 0; c < N; ++c) {
    row[c].resize(grid.n_phi);
    over_theta[c].resize(grid.n_theta);
    over_r[c].resize(grid.n_r);
  }
  for (std::size_t i = 0; i < grid.n_r; ++i) {
    for (std::size_t j = 0; j < grid.n_theta; ++j) {
      for (std::size_t k = 0; k < grid.n_phi; ++k) {
        const std::array<double, N> v = f(r[i], t[j], dphi * static_cast<double>(k));
        for (std::size_t c = 0; c < N; ++c) row[c][k] = v[c];
      }
      for (std::size_t c = 0; c < N; ++c) over_theta[c][j] = dphi * pairwise_sum(row[c]);
    }
    for (std::size_t c = 0; c < N; ++c) over_r[c][i] = simpson(t, over_theta[c]);
  }
  std::array<double, N> out;
  for (std::size_t c = 0; c < N; ++c) out[c] = simpson(r, over_r[c]);
  return out;
}

}  // namespace

WeakFormResult weak_form_momentum(const VectorTestFunction& zeta, const PhysicalParams& params, double C,
                                  const QuadratureGrid& grid) {
  check_grid(grid);
  if (support_meets_bubble(zeta.support(), C)) throw DomainError("test function support meets the bubble");
  const double k = params.sigma / params.rho_l;

  const auto sums = integrate<2>(zeta.support(), grid, [&](double r, double t, double p) {
    std::array<double, 3> z;
    std::array<std::array<double, 3>, 3> J;
    zeta.components_and_jacobian(r, t, p, z, J);
    const double s = std::sin(t);
    return std::array<double, 2>{J[2][2] / s + z[0] + std::cos(t) / s * z[1], -(z[0] + r * J[0][0]) - J[1][1]};
  });
  WeakFormResult out;
  out.value = k * sums[0];
  out.reduced_value = k * sums[1];
  out.scale = k * zeta.support().coordinate_measure();
  out.nodes = grid.n_r * grid.n_theta * grid.n_phi;
  return out;
}

WeakFormResult weak_form_continuity(const ScalarTestFunction& phi, const PhysicalParams& params, double C,
                                    const QuadratureGrid& grid) {
  check_grid(grid);
  if (support_meets_bubble(phi.support(), C)) throw DomainError("test function support meets the bubble");
  const double k = std::sqrt(params.sigma / params.rho_l);
  const double full = integrate<1>(phi.support(), grid, [&](double r, double t, double p) {
    return std::array<double, 1>{std::sqrt(r / std::sin(t)) * phi.eval(Dual<double>(r), Dual<double>(t), Dual<double>(p, 1.0)).d};
  })[0];
  WeakFormResult out;
  out.value = k * full;
  out.reduced_value = out.value;
  out.scale = k * phi.support().coordinate_measure();
  out.nodes = grid.n_r * grid.n_theta * grid.n_phi;
  return out;
}

}  // namespace bubble::verification
