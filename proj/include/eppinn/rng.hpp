/* rng.hpp - counter-based random numbers for reproducible parallel generation.
 *
 * Every draw is a pure function of (seed, stream, counter), so voxel noise
 * is bit-identical no matter how generation is scheduled.
 */
#ifndef EPPINN_RNG_HPP
#define EPPINN_RNG_HPP

#include <cmath>
#include <cstdint>

namespace eppinn::rng {

inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t counter)
{
    return mix64(mix64(mix64(seed) ^ stream) ^ counter);
}

/// Uniform in (0, 1].
inline double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
{
    std::uint64_t bits = counter_hash(seed, stream, counter);
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

/// Standard normal via Box-Muller on two decorrelated counters.
inline double gaussian(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
{
    double u1 = uniform01(seed, stream, 2 * counter);
    double u2 = uniform01(seed, stream, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

} // namespace eppinn::rng

#endif
