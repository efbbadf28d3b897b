#pragma once

#include <cstdint>
#include <random>

namespace qst {

// SplitMix64 step; used both as a generator warm-up and as a mixing function
// for deriving independent child streams from (seed, tag...) tuples.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministically derive a child seed from a base seed and up to three
/// stream tags. Results are schedule-independent: any worker may compute the
/// stream for (seed, a, b) without shared state.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = base;
    std::uint64_t h = splitmix64(s);
    s ^= a + 0x9e3779b97f4a7c15ull;
    h ^= splitmix64(s);
    s ^= b + 0xd1b54a32d192ed03ull;
    h ^= splitmix64(s);
    s ^= c + 0x8cb92ba72f3d8dd7ull;
    h ^= splitmix64(s);
    return h;
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

}  // namespace qst
