#pragma once

#include <cstdint>

namespace fplab {

// splitmix64: deterministic across platforms, unlike the standard
// distributions. All seeded behavior in the project routes through this.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // Bounded draw; modulo bias is irrelevant at desk scale and keeps the
    // stream reproducible.
    std::uint64_t next_below(std::uint64_t n) { return n ? next() % n : 0; }
};

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
    SplitMix64 rng(seed ^ (v + 0x9E3779B97F4A7C15ULL + (seed << 6) + (seed >> 2)));
    return rng.next();
}

}  // namespace fplab
