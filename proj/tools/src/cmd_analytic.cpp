#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include "bubble/equilibrium.hpp"
#include "bubble/equilibrium_io.hpp"
#include "bubble/errors.hpp"
#include "bubble/profile.hpp"
#include "bubble/profile_io.hpp"
#include "commands.hpp"
#include "common.hpp"

namespace bubble::cli {

namespace {

struct AnalyticOptions {
  ParamFlags flags;
  double mass = 0.0;
  double volume = 0.0;
  std::size_t grid_n = 401;
  std::filesystem::path out;
};

int run_analytic(AnalyticOptions& o, CLI::Option* mass_opt, CLI::Option* volume_opt) {
  if (mass_opt->count() + volume_opt->count() != 1) {
    std::cerr << "error: give exactly one of --mass or --volume\n";
    return kUsage;
  }
  const auto params = o.flags.resolve();
  prepare_out_dir(o.out);
  const auto eq = mass_opt->count() ? solve_horn_torus(params, o.mass) : horn_torus_from_volume(params, o.volume);

  std::printf("horn torus r = C sin(theta)\n");
  std::printf("  C      = %.10e m\n", eq.C);
  std::printf("  p_g    = %.10e Pa\n", eq.p_g);
  std::printf("  rho_g  = %.10e kg/m^3\n", eq.rho_g);
  std::printf("  M      = %.10e kg\n", eq.M);
  std::printf("  V      = %.10e m^3\n", eq.V);
  if (eq.M > 0.0) {
    const auto sphere = solve_sphere_radius(params, eq.M);
    std::printf("sphere of equal mass\n");
    std::printf("  R      = %.10e m\n", sphere.R);
    std::printf("  p_g    = %.10e Pa\n", sphere.p_g);
    std::printf("  rho_g  = %.10e kg/m^3\n", sphere.rho_g);
  }

  {
    std::ofstream out(o.out / "equilibrium_summary.json");
    write_equilibrium_summary(out, eq);
  }
  {
    std::ofstream out(o.out / "equilibrium_surface.csv");
    write_equilibrium_surface(out, eq, params, o.grid_n);
  }
  if (eq.C > 0.0) {
    const auto grid = linspace(0.0, std::numbers::pi, o.grid_n);
    write_profile(o.out / "profile.csv", horn_torus_profile(eq.C, grid));
  }
  std::printf("wrote %s\n", o.out.string().c_str());
  return kOk;
}

}  // namespace

Action register_analytic(CLI::App& app) {
  auto o = std::make_shared<AnalyticOptions>();
  o->out = default_out_dir();
  auto* sub = app.add_subcommand("analytic", "Solve the horn-torus equilibrium for a mass or a volume");
  o->flags.add_to(*sub);
  auto* mass = sub->add_option("--mass", o->mass, "bubble mass, kg");
  auto* volume = sub->add_option("--volume", o->volume, "bubble volume, m^3");
  mass->excludes(volume);
  sub->add_option("--grid-n", o->grid_n, "surface and profile nodes")->check(CLI::Range(3, 10000000))
      ->capture_default_str();
  sub->add_option("--out", o->out, "output directory ($BUBBLE_OUT_DIR)");
  return [o, mass, volume] { return run_analytic(*o, mass, volume); };
}

}  // namespace bubble::cli
