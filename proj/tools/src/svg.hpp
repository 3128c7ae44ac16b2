#pragma once

#include <filesystem>

#include "bubble/profile.hpp"

namespace bubble::cli {

/// Meridian section of the learned surface against r = C sin(theta), both
/// drawn for phi = 0 and phi = pi.
void write_polar_svg(const std::filesystem::path& path, const RadialProfile& learned, double C);

}  // namespace bubble::cli
