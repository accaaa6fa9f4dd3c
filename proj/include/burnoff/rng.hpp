#ifndef BURNOFF_RNG_HPP
#define BURNOFF_RNG_HPP

#include <cstdint>

namespace burnoff {

/// SplitMix64 (Steele/Lea/Flood 2014, as popularized by Vigna). Chosen over
/// std::mt19937 because the bit stream is pinned by these ~10 lines of code,
/// not by library internals, so identical seeds give identical runs on every
/// platform and toolchain.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound) by rejection sampling; no modulo bias.
    /// bound must be positive.
    std::uint64_t bounded(std::uint64_t bound) {
        /* 2^64 mod bound, computed in 64 bits */
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace burnoff

#endif
