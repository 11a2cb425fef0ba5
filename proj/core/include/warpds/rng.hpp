#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace warpds {

using Rng = std::mt19937_64;

// Independent generator derived from a master seed and a fixed label.
Rng make_stream(std::uint64_t seed, std::string_view label);

}  // namespace warpds
