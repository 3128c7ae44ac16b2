#pragma once

#include <functional>

#include "CLI11.hpp"

namespace bubble::cli {

/// Each registrar adds its subcommand and returns the action to run when
/// that subcommand was selected. Actions return the process exit status.
using Action = std::function<int()>;

Action register_analytic(CLI::App& app);
Action register_verify(CLI::App& app);
Action register_train(CLI::App& app);
Action register_curvature(CLI::App& app);
Action register_roots(CLI::App& app);

}  // namespace bubble::cli
