#pragma once

#include <cstdint>

namespace densepart {

// Counter-based generation: every random draw is a pure function of its key,
// so results do not depend on iteration order or thread scheduling.

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                                     std::uint64_t c = 0) noexcept {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ (b + 0x632be59bd9b4e019ULL));
    h = splitmix64(h ^ (c + 0x8cb92ba72f3d8dd7ULL));
    return h;
}

/// Uniform double in [0, 1) with 53 random bits.
constexpr double counter_uniform(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c = 0) noexcept {
    return static_cast<double>(counter_hash(seed, a, b, c) >> 11) * 0x1.0p-53;
}

}  // namespace densepart
