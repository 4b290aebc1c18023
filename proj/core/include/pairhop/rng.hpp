// rng.hpp — Deterministic 64-bit generator for reproducible stochastic runs.
//
// splitmix64: the state walks a Weyl sequence and each output is passed
// through an avalanche mix. Identical seeds give identical streams on every
// platform. Uniform doubles come from the top 53 bits.

#pragma once

#include <cstdint>

namespace pairhop {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Derives an independent stream seed for substream `index` of `master`.
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 g(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
    return g.next_u64();
}

} // namespace pairhop
