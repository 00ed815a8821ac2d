#pragma once

#include <cstdint>

namespace appnorm {

// Deterministic across platforms; std distributions are not.
struct splitmix64 {
    std::uint64_t state = 0;

    explicit splitmix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    splitmix64 split() { return splitmix64(next()); }
};

}  // namespace appnorm
