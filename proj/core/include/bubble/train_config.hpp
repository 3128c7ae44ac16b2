#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "bubble/params.hpp"

namespace bubble::pinn {

/// Form of the R'(0) boundary penalty.
///   intended: (R'(0) - sqrt(R(0)^2 + R'(0)^2))^2
///   literal:  (R'(0) - sqrt(R(0)^2 + R(0)^2))^2
enum class BoundaryForm { intended, literal };

/// Initial output-layer bias.
///   sphere: softplus^{-1} of the equal-volume sphere radius (3V/(4 pi))^(1/3)
///   zero:   0
enum class OutputBiasInit { sphere, zero };

struct AdamSettings {
  double beta1 = 0.9;
  double beta2 = 0.99;
  double epsilon = 1e-8;
};

struct TrainConfig {
  std::size_t N = 50;  ///< collocation nodes on [0, pi/2]
  std::size_t epochs = 10000;
  double learning_rate = 1e-4;
  double lambda_SB = 1e3;
  double lambda_V = 1.0;
  double lambda_B = 1e-6;
  double lambda_S = 1e3;
  double V_target = 5e-4;  ///< m^3
  PhysicalParams params;
  std::uint64_t seed = 0;
  AdamSettings adam;
  OutputBiasInit output_bias = OutputBiasInit::sphere;
  BoundaryForm boundary = BoundaryForm::intended;

  /// Throws DomainError unless N >= 8, every lambda >= 0, V_target > 0,
  /// learning_rate > 0 and 0 <= beta < 1.
  void validate() const;
  /// Torus scale of the target profile, (4 V / pi^2)^(1/3).
  double target_C() const;
};

/// Reads `key = value` lines; '#' starts a comment. Keys are the TrainConfig
/// field names (N, epochs, learning_rate, lambda_SB, lambda_V, lambda_B,
/// lambda_S, V_target, seed, adam_beta1, adam_beta2, adam_epsilon,
/// output_bias, boundary_form) plus the PhysicalParams field names. Unknown
/// keys and unparsable values throw InputError.
TrainConfig parse_train_config(std::istream& in);
TrainConfig load_train_config(const std::filesystem::path& path);

/// Applies one `key=value` assignment to the config.
void apply_config_entry(TrainConfig& config, std::string_view key, std::string_view value);

void write_train_config(std::ostream& out, const TrainConfig& config);

}  // namespace bubble::pinn
