#pragma once

#include <filesystem>
#include <iosfwd>

#include "bubble/profile.hpp"

namespace bubble {

// Comma-separated text, header `theta,R,dR,d2R`, one node per row, radians
// and SI units. Values are written with 17 significant digits.

void write_profile(std::ostream& out, const RadialProfile& profile);
void write_profile(const std::filesystem::path& path, const RadialProfile& profile);

/// Throws InputError on a bad header, malformed rows, or a grid that is not
/// strictly increasing inside [0, pi].
RadialProfile read_profile(std::istream& in);
RadialProfile read_profile(const std::filesystem::path& path);

}  // namespace bubble
