#include "mlcd/random.hpp"

namespace mlcd {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t draw = rng();
  while (draw < threshold) draw = rng();
  return draw % bound;
}

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace mlcd
