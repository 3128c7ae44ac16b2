#include "bubble/train_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <istream>

#include "bubble/errors.hpp"

namespace bubble::pinn {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(out))
    throw InputError("config: bad number for " + std::string(key) + ": '" + std::string(v) + "'");
  return out;
}

template <class Int>
Int to_int(std::string_view key, std::string_view v) {
  Int out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    throw InputError("config: bad integer for " + std::string(key) + ": '" + std::string(v) + "'");
  return out;
}

}  // namespace

void TrainConfig::validate() const {
  if (N < 8) throw DomainError("N must be at least 8");
  if (!(lambda_SB >= 0.0 && lambda_V >= 0.0 && lambda_B >= 0.0 && lambda_S >= 0.0))
    throw DomainError("penalty weights must be nonnegative");
  if (!(V_target > 0.0)) throw DomainError("V_target must be positive");
  if (!(learning_rate > 0.0)) throw DomainError("learning_rate must be positive");
  if (!(adam.beta1 >= 0.0 && adam.beta1 < 1.0 && adam.beta2 >= 0.0 && adam.beta2 < 1.0))
    throw DomainError("Adam betas must lie in [0, 1)");
  if (!(adam.epsilon > 0.0)) throw DomainError("Adam epsilon must be positive");
  params.validate();
}

double TrainConfig::target_C() const { return std::cbrt(4.0 * V_target / (std::numbers::pi * std::numbers::pi)); }

void apply_config_entry(TrainConfig& c, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  auto& p = c.params;
  if (key == "N") c.N = to_int<std::size_t>(key, value);
  else if (key == "epochs") c.epochs = to_int<std::size_t>(key, value);
  else if (key == "seed") c.seed = to_int<std::uint64_t>(key, value);
  else if (key == "learning_rate") c.learning_rate = to_double(key, value);
  else if (key == "lambda_SB") c.lambda_SB = to_double(key, value);
  else if (key == "lambda_V") c.lambda_V = to_double(key, value);
  else if (key == "lambda_B") c.lambda_B = to_double(key, value);
  else if (key == "lambda_S") c.lambda_S = to_double(key, value);
  else if (key == "V_target") c.V_target = to_double(key, value);
  else if (key == "adam_beta1") c.adam.beta1 = to_double(key, value);
  else if (key == "adam_beta2") c.adam.beta2 = to_double(key, value);
  else if (key == "adam_epsilon") c.adam.epsilon = to_double(key, value);
  else if (key == "sigma") p.sigma = to_double(key, value);
  else if (key == "p_inf") p.p_inf = to_double(key, value);
  else if (key == "rho_l") p.rho_l = to_double(key, value);
  else if (key == "R_g") p.R_g = to_double(key, value);
  else if (key == "T_inf") p.T_inf = to_double(key, value);
  else if (key == "c_v") p.c_v = to_double(key, value);
  else if (key == "gamma") p.gamma = to_double(key, value);
  else if (key == "kappa") p.kappa = to_double(key, value);
  else if (key == "output_bias") {
    if (value == "sphere") c.output_bias = OutputBiasInit::sphere;
    else if (value == "zero") c.output_bias = OutputBiasInit::zero;
    else throw InputError("config: output_bias must be sphere or zero");
  } else if (key == "boundary_form") {
    if (value == "intended") c.boundary = BoundaryForm::intended;
    else if (value == "literal") c.boundary = BoundaryForm::literal;
    else throw InputError("config: boundary_form must be intended or literal");
  } else {
    throw InputError("config: unknown key '" + std::string(key) + "'");
  }
}

TrainConfig parse_train_config(std::istream& in) {
  TrainConfig c;
  std::string line;
  int lineno = 0;
  bool gamma_given = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
    const auto key = trim(s.substr(0, eq));
    gamma_given = gamma_given || key == "gamma";
    apply_config_entry(c, key, s.substr(eq + 1));
  }
  if (!gamma_given) c.params.gamma = c.params.consistent_gamma();
  return c;
}

TrainConfig load_train_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config " + path.string());
  return parse_train_config(in);
}

void write_train_config(std::ostream& out, const TrainConfig& c) {
  const auto flags = out.flags();
  const auto prec = out.precision(17);
  out << "N = " << c.N << "\nepochs = " << c.epochs << "\nseed = " << c.seed
      << "\nlearning_rate = " << c.learning_rate << "\nlambda_SB = " << c.lambda_SB
      << "\nlambda_V = " << c.lambda_V << "\nlambda_B = " << c.lambda_B << "\nlambda_S = " << c.lambda_S
      << "\nV_target = " << c.V_target << "\nadam_beta1 = " << c.adam.beta1 << "\nadam_beta2 = " << c.adam.beta2
      << "\nadam_epsilon = " << c.adam.epsilon
      << "\noutput_bias = " << (c.output_bias == OutputBiasInit::sphere ? "sphere" : "zero")
      << "\nboundary_form = " << (c.boundary == BoundaryForm::intended ? "intended" : "literal")
      << "\nsigma = " << c.params.sigma << "\np_inf = " << c.params.p_inf << "\nrho_l = " << c.params.rho_l
      << "\nR_g = " << c.params.R_g << "\nT_inf = " << c.params.T_inf << "\nc_v = " << c.params.c_v
      << "\ngamma = " << c.params.gamma << "\nkappa = " << c.params.kappa << '\n';
  out.precision(prec);
  out.flags(flags);
}

}  // namespace bubble::pinn
