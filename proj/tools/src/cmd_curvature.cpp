#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#include "bubble/geometry.hpp"
#include "bubble/profile_io.hpp"
#include "commands.hpp"
#include "common.hpp"

namespace bubble::cli {

namespace {

struct CurvatureOptions {
  std::string profile;
  std::string method = "both";
  std::string out;
};

int run_curvature(const CurvatureOptions& o) {
  const auto p = read_profile(std::filesystem::path(o.profile));
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      std::cerr << "error: cannot write " << o.out << '\n';
      return kUsage;
    }
  }
  std::ostream& out = o.out.empty() ? std::cout : file;
  const bool ext = o.method != "forms";
  const bool forms = o.method != "extension";
  out << "theta";
  if (ext) out << ",extension";
  if (forms) out << ",forms";
  out << '\n';

  double worst = 0.0;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double t = p.theta()[i];
    if (!(t > 0.0 && t < std::numbers::pi) || std::sin(t) == 0.0 || p.R()[i] == 0.0) {
      ++skipped;
      continue;
    }
    out << fmt17(t);
    double a = 0.0, b = 0.0;
    if (ext) {
      a = geometry::mean_curvature_extension(p.R()[i], p.dR()[i], p.d2R()[i], t);
      out << ',' << fmt17(a);
    }
    if (forms) {
      b = geometry::mean_curvature_forms(p.R()[i], p.dR()[i], p.d2R()[i], t);
      out << ',' << fmt17(b);
    }
    out << '\n';
    if (ext && forms) worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
  }
  if (skipped) std::cerr << "skipped " << skipped << " node(s) on the axis\n";
  if (ext && forms) std::cerr << "max cross-method discrepancy (relative to max(1,|value|)): " << worst << '\n';
  return kOk;
}

}  // namespace

Action register_curvature(CLI::App& app) {
  auto o = std::make_shared<CurvatureOptions>();
  auto* sub = app.add_subcommand("curvature", "Surface divergence of the normal for a profile file");
  sub->add_option("--profile", o->profile, "CSV with header theta,R,dR,d2R")->required();
  sub->add_option("--method", o->method, "extension | forms | both")
      ->check(CLI::IsMember({"extension", "forms", "both"}))
      ->capture_default_str();
  sub->add_option("--out", o->out, "output CSV (default stdout)");
  return [o] { return run_curvature(*o); };
}

}  // namespace bubble::cli
