#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace viz {

// splitmix64 step (Steele/Lea/Flood). Used for seeding and stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/**
 * xoshiro256** 1.0 (Blackman/Vigna), seeded through splitmix64.
 *
 * Recurrence: with state s[0..3],
 *   result = rotl(s[1] * 5, 7) * 9
 *   t = s[1] << 17
 *   s[2] ^= s[0]; s[3] ^= s[1]; s[1] ^= s[2]; s[0] ^= s[3]; s[2] ^= t
 *   s[3] = rotl(s[3], 45)
 *
 * Fully platform-independent; never the host language default RNG.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    // Independent stream for (seed, stream_index); used for per-trial RNGs so
    // results do not depend on scheduling order.
    static Rng stream(std::uint64_t seed, std::uint64_t stream_index) {
        std::uint64_t sm = seed ^ (stream_index * 0xA24BAED4963EE407ULL + 0x9FB21C651E98DF25ULL);
        return Rng(splitmix64(sm));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = std::rotl(s_[3], 45);
        return result;
    }

    // uniform in [0,1), 53 bits of precision
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // unbiased uniform in [0, bound), rejection sampling
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t s_[4];
};

}  // namespace viz
