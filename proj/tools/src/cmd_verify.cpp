#include <fstream>
#include <iostream>

#include "bubble/equilibrium.hpp"
#include "bubble/errors.hpp"
#include "bubble/report.hpp"
#include "bubble/suite.hpp"
#include "commands.hpp"
#include "common.hpp"

namespace bubble::cli {

namespace {

struct VerifyOptions {
  ParamFlags flags;
  std::string suite = "all";
  double volume = 5e-4;
  double mass = 0.0;
  double perturb = 0.0;
  std::string field = "shape";
  std::vector<std::string> tolerances;
  bool skip_weak = false;
  std::string out;
};

int run_verify(const VerifyOptions& o) {
  using namespace verification;
  const auto params = o.flags.resolve();
  SuiteOptions opts;
  opts.perturb = o.perturb;
  opts.weak_forms = !o.skip_weak;
  const auto field = parse_perturb_field(o.field);
  if (!field) {
    std::cerr << "error: unknown perturbation field '" << o.field << "'\n";
    return kUsage;
  }
  opts.field = *field;

  auto known = horn_torus_check_names();
  for (const auto& n : sphere_check_names()) known.push_back(n);
  for (const auto& t : o.tolerances) {
    const auto eq = t.find('=');
    const std::string name = t.substr(0, eq);
    if (eq == std::string::npos || std::find(known.begin(), known.end(), name) == known.end()) {
      std::cerr << "error: --tol expects check=value with a known check name, got '" << t << "'\n";
      return kUsage;
    }
    try {
      opts.tolerances[name] = std::stod(t.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "error: bad tolerance value in '" << t << "'\n";
      return kUsage;
    }
  }

  if (!o.out.empty()) {
    const auto parent = std::filesystem::path(o.out).parent_path();
    if (!parent.empty()) prepare_out_dir(parent);
  }

  std::vector<ResidualReport> all;
  auto append = [&](const std::string& prefix, std::vector<ResidualReport> rows) {
    for (auto& r : rows) {
      r.name = prefix + r.name;
      all.push_back(std::move(r));
    }
  };
  const bool both = o.suite == "all";
  if (o.suite == "analytic" || both) append(both ? "torus." : "", horn_torus_suite(params, o.volume, opts));
  if (o.suite == "sphere" || both) {
    const double M = o.mass > 0.0 ? o.mass : horn_torus_from_volume(params, o.volume).M;
    append(both ? "sphere." : "", sphere_suite(params, M, opts));
  }

  if (o.perturb != 0.0)
    std::cout << "perturbation: " << o.field << " x (1 + " << o.perturb << ")\n\n";
  write_report_table(std::cout, all);
  if (!o.out.empty()) {
    std::ofstream out(o.out);
    if (!out) throw InputError("cannot write " + o.out);
    write_report_csv(out, all);
  }
  return all_pass(all) ? kOk : kCheckFailed;
}

}  // namespace

Action register_verify(CLI::App& app) {
  auto o = std::make_shared<VerifyOptions>();
  auto* sub = app.add_subcommand("verify", "Evaluate every residual on the exact equilibrium states");
  o->flags.add_to(*sub);
  sub->add_option("--suite", o->suite, "analytic | sphere | all")
      ->check(CLI::IsMember({"analytic", "sphere", "all"}))
      ->capture_default_str();
  sub->add_option("--volume", o->volume, "horn-torus volume, m^3")->capture_default_str();
  sub->add_option("--mass", o->mass, "sphere mass, kg (default: mass of the horn torus)");
  sub->add_option("--perturb", o->perturb, "relative perturbation applied before checking");
  sub->add_option("--perturb-field", o->field, "shape | pressure | velocity | gas_pressure | gas_density")
      ->capture_default_str();
  sub->add_option("--tol", o->tolerances, "override a tolerance, check=value (repeatable)");
  sub->add_flag("--no-weak-forms", o->skip_weak, "skip the weak-form quadratures");
  sub->add_option("--out", o->out, "also write the report as CSV");
  return [o] { return run_verify(*o); };
}

}  // namespace bubble::cli
