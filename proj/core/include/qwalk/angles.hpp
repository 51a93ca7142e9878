#pragma once

#include <cmath>
#include <cstdint>

namespace qwalk {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// 2*pi split into the nearest double and the remainder, for accurate
// reduction of large phase arguments.
inline constexpr double two_pi_hi = 6.283185307179586;
inline constexpr double two_pi_lo = 2.4492935982947064e-16;

/// Wraps an angle into [0, 2*pi).
inline double wrap_angle(double x) {
    double r = std::fmod(x, two_pi_hi);
    if (r < 0.0) {
        r += two_pi_hi;
    }
    return r;
}

/// Computes (base + k * delta) mod 2*pi in [0, 2*pi).
///
/// The product k*delta and the 2*pi reduction are carried in double-double
/// precision, so phases stay accurate to a few ulp even when k*delta reaches
/// ~1e6 rad. Plain evaluation would lose ~1e-9 rad there, which is visible
/// against the 1e-10 invariance tolerances.
inline double linear_phase(double base, double delta, long long k) {
    const double kd = static_cast<double>(k);
    const double p = kd * delta;
    const double p_err = std::fma(kd, delta, -p);
    const double m = std::nearbyint(p / two_pi_hi);
    double r = std::fma(-m, two_pi_hi, p);
    r = std::fma(-m, two_pi_lo, r);
    return wrap_angle(r + p_err + base);
}

/// splitmix64 finalizer; the counter-based PRNG used for random phases.
inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

/// Maps 64 random bits to a phase in [0, 2*pi): the top 53 bits scaled by
/// 2*pi / 2^53. Documented in FORMATS.md; identical on every platform.
inline double phase_from_bits(std::uint64_t u) {
    return static_cast<double>(u >> 11) * (two_pi_hi / 9007199254740992.0);
}

/// t-th phase of the seeded counter-based stream; `lane` separates the
/// alpha (0) and beta (1) draws of one time step.
inline double random_phase_at(std::uint64_t seed, long long t, int lane) {
    const std::uint64_t k = 2 * static_cast<std::uint64_t>(t) + static_cast<std::uint64_t>(lane);
    return phase_from_bits(mix64(seed + k * golden_gamma));
}

}  // namespace qwalk
