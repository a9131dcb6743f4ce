#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace gotobi {

// Identity string echoed into run metadata so fixtures can be regenerated
// by any implementation of the same generator.
inline constexpr const char* kRngId = "splitmix64-boxmuller-v1";

// SplitMix64 finalizer. Used both as the generator step and to derive
// independent per-day streams from (seed, date).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Minimal deterministic RNG with an exactly specified output sequence.
// std::uniform_*_distribution is implementation-defined, so bounded draws
// and gaussians are implemented here instead.
class SplitMix64 {
public:
    constexpr explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), unbiased via rejection. bound must be > 0.
    constexpr std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; the pair is consumed in a fixed order.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - next_unit();  // (0, 1], keeps log() finite
        const double u2 = next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Stream seed for one calendar day of a seeded run.
constexpr std::uint64_t day_stream_seed(std::uint64_t run_seed, std::int64_t epoch_day) {
    return mix64(run_seed ^ mix64(static_cast<std::uint64_t>(epoch_day)));
}

}  // namespace gotobi
