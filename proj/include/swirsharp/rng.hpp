#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Deterministic random helpers. std::mt19937_64 has a standardized output
// sequence, but the std distributions do not, so every mapping from raw
// 64-bit draws to values is spelled out here.

namespace swirsharp {

/// splitmix64 finalizer; also used as a coordinate hash by the scene generator.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from one 64-bit draw (53 mantissa bits).
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [-bound, bound).
inline double uniform_symmetric(std::mt19937_64& rng, double bound) {
    return (2.0 * uniform_unit(rng) - 1.0) * bound;
}

/// Unbiased uniform integer in [0, n). n must be > 0.
inline std::uint64_t bounded_uint(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = (UINT64_MAX / n) * n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

/// Fisher-Yates shuffle with an explicit draw mapping.
template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded_uint(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace swirsharp
