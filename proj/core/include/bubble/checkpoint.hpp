#pragma once

#include <filesystem>
#include <iosfwd>

#include "bubble/network.hpp"

namespace bubble::pinn {

/// Text layout, one value per token:
///   bubble-pinn-checkpoint v1
///   widths <L+1 integers>
///   per layer: weights row-major (out x in), then biases
/// Values are written with 17 significant digits and round-trip exactly.
void write_checkpoint(std::ostream& out, const Network& net);
void write_checkpoint(const std::filesystem::path& path, const Network& net);

/// Throws InputError on a wrong tag, bad widths or a short/extra payload.
Network read_checkpoint(std::istream& in);
Network read_checkpoint(const std::filesystem::path& path);

}  // namespace bubble::pinn
