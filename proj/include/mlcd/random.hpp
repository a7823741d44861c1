#pragma once

#include <cstdint>
#include <random>

namespace mlcd {

/// Engine behind every seeded choice. mt19937_64 output is fixed by the
/// standard, so seeded runs replay across platforms.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection. Avoids the standard
/// distributions, whose output is implementation-defined.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform real in [0, 1) from the top 53 bits of one draw.
double uniform_unit(Rng& rng);

}  // namespace mlcd
