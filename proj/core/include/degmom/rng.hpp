#pragma once

#include <bit>
#include <cstdint>

namespace degmom {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256++ seeded through splitmix64. Self-contained so draw sequences
// are identical across platforms and standard libraries; std::uniform_int_distribution
// is implementation-defined and would break replayability.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    // Independent stream for (master_seed, stream_index); harness workers use
    // one stream per trial so results do not depend on scheduling.
    static Rng for_stream(std::uint64_t master_seed, std::uint64_t stream) {
        std::uint64_t a = master_seed;
        std::uint64_t b = stream ^ 0xA5A5A5A55A5A5A5AULL;
        std::uint64_t mixed = splitmix64(a) ^ (splitmix64(b) + 0x9E3779B97F4A7C15ULL);
        return Rng(splitmix64(mixed));
    }

    std::uint64_t next() {
        const std::uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = std::rotl(state_[3], 45);
        return result;
    }

    // Unbiased uniform draw from [0, bound); bound >= 1. Masked rejection,
    // expected < 2 iterations.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
        for (;;) {
            const std::uint64_t x = next() & mask;
            if (x < bound) return x;
        }
    }

    // Uniform in [0, 1), 53-bit resolution.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_[4];
};

}  // namespace degmom
