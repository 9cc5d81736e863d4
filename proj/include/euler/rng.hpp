#pragma once

#include <cstdint>

namespace euler {

// splitmix64: tiny, bit-stable across platforms. Used for every seeded draw
// so that identical seeds give identical runs everywhere.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() { return splitmix64(state); }

    // Uniform draw in [0, bound) via rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~0ULL / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }
};

// Derives the seed of trial t from the run seed. The run seed is mixed before
// the trial index is added so that (seed, trial) pairs cannot collide the way
// a plain xor would (0^1 == 1^0).
inline std::uint64_t trial_seed(std::uint64_t run_seed, std::uint64_t trial_index) {
    std::uint64_t s = run_seed;
    std::uint64_t h = splitmix64(s) + trial_index;
    return splitmix64(h);
}

} // namespace euler
