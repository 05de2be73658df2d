#pragma once

#include <cstdint>
#include <random>

namespace ksumred {

// Every seeded component draws from this engine; collection metadata records its name.
using Rng = std::mt19937_64;
inline constexpr const char* kRngAlgorithm = "mt19937_64";

// SplitMix64 step: derives independent child seeds from a parent seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t child_seed(std::uint64_t parent, std::uint64_t index) {
    return splitmix64(parent ^ splitmix64(index + 1));
}

}  // namespace ksumred
