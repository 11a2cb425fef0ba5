#include "warpds/rng.hpp"

namespace warpds {

Rng make_stream(std::uint64_t seed, std::string_view label)
{
    // FNV-1a keeps the label hash stable across platforms, unlike std::hash
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    return Rng(seq);
}

}  // namespace warpds
