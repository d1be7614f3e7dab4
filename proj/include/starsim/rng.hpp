#pragma once

#include <cstdint>
#include <random>

#include "starsim/types.hpp"

namespace starsim {

/// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
/// Avoids std::uniform_real_distribution so that seeded output is identical
/// on every platform and standard library.
inline double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_symmetric(std::mt19937_64& gen) {
  return 2.0 * uniform_unit(gen) - 1.0;
}

/// Uniform integer in [0, bound) for shuffles; bound must be positive.
inline std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t bound) {
  return gen() % bound;
}

/// Uniformly distributed complex weight in the unit disk, resampled until its
/// magnitude clears 1e-6 so that no stored entry is effectively zero.
cplx disk_weight(std::mt19937_64& gen);

/// Standard complex gaussian (unit variance per real component).
cplx gaussian_complex(std::mt19937_64& gen);

}  // namespace starsim
