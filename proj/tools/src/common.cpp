#include "common.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "bubble/errors.hpp"

namespace bubble::cli {

void ParamFlags::add_to(CLI::App& app) {
  app.add_option("--sigma", params.sigma, "surface tension, N/m")->capture_default_str();
  app.add_option("--p-inf", params.p_inf, "far-field pressure, Pa")->capture_default_str();
  app.add_option("--rho-l", params.rho_l, "liquid density, kg/m^3")->capture_default_str();
  app.add_option("--R-g", params.R_g, "specific gas constant, J/(kg K)")->capture_default_str();
  app.add_option("--T-inf", params.T_inf, "far-field temperature, K")->capture_default_str();
  app.add_option("--c-v", params.c_v, "gas heat capacity, J/(kg K)")->capture_default_str();
  app.add_option("--kappa", params.kappa, "gas thermal conductivity, W/(m K)")->capture_default_str();
  app.add_option("--gamma", gamma, "adiabatic constant (default 1 + R_g/c_v)");
}

PhysicalParams ParamFlags::resolve() const {
  PhysicalParams p = params;
  p.gamma = gamma > 0.0 ? gamma : p.consistent_gamma();
  p.validate();
  return p;
}

std::filesystem::path default_out_dir() {
  if (const char* env = std::getenv("BUBBLE_OUT_DIR"); env && *env) return env;
  return ".";
}

void prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory " + dir.string() + ": " + ec.message());
  const auto probe = dir / ".bubble-write-probe";
  {
    std::ofstream out(probe);
    if (!out) throw InputError("output directory is not writable: " + dir.string());
  }
  std::filesystem::remove(probe, ec);
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace bubble::cli
