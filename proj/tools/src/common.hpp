#pragma once

#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "bubble/params.hpp"

namespace bubble::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

/// Physical-parameter flags shared by several commands.
struct ParamFlags {
  PhysicalParams params;
  double gamma = 0.0;  ///< 0: derive from R_g / c_v

  void add_to(CLI::App& app);
  /// Applies the gamma rule and validates. Throws DomainError.
  PhysicalParams resolve() const;
};

/// --out default: $BUBBLE_OUT_DIR if set, else the working directory.
std::filesystem::path default_out_dir();

/// Creates the directory and proves it is writable before any compute.
/// Throws InputError.
void prepare_out_dir(const std::filesystem::path& dir);

std::string fmt17(double v);

}  // namespace bubble::cli
