#include <cstdio>

#include "bubble/equilibrium.hpp"
#include "commands.hpp"
#include "common.hpp"

namespace bubble::cli {

namespace {

struct RootsOptions {
  ParamFlags flags;
  double mass = 0.0;
  bool allow_nonpositive = false;
};

int run_roots(const RootsOptions& o) {
  const auto params = o.flags.resolve();
  const auto roots = explore_roots(params, o.mass, o.allow_nonpositive);
  std::printf("positive roots of p_inf C^3 - 4 sigma C^2 - 4 R_g T M / pi^2 for M = %.10e kg\n", o.mass);
  std::printf("lower bound 4 sigma / p_inf = %.17g m\n", 4.0 * params.sigma / params.p_inf);
  if (roots.empty()) std::printf("  (none)\n");
  for (double C : roots) std::printf("  C = %.17g m\n", C);
  return kOk;
}

}  // namespace

Action register_roots(CLI::App& app) {
  auto o = std::make_shared<RootsOptions>();
  auto* sub = app.add_subcommand("roots", "List the positive roots of the horn-torus mass cubic");
  o->flags.add_to(*sub);
  sub->add_option("--mass", o->mass, "bubble mass, kg")->required();
  sub->add_flag("--allow-nonpositive-mass", o->allow_nonpositive, "also explore M < 0");
  return [o] { return run_roots(*o); };
}

}  // namespace bubble::cli
