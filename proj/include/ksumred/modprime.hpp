#pragma once

#include "ksumred/bigint.hpp"
#include "ksumred/collection.hpp"
#include "ksumred/instances.hpp"
#include "ksumred/rng.hpp"

#include <cstdint>

namespace ksumred {

/// Miller-Rabin. Deterministic (bases 2..41) below 3.3e24; above that, 64 rounds
/// with bases drawn from an engine seeded by the candidate itself, so the answer
/// is reproducible.
bool is_prime(const BigInt& n);

// Uniform integer in [0, range) by rejection over whole 64-bit words.
BigInt uniform_below(const BigInt& range, Rng& rng);

inline constexpr std::uint64_t kPrimeDrawBudget = 1'000'000;

/// Rejection sampling of uniform draws from [lo, hi] until one is prime.
/// Throws ParameterError after kPrimeDrawBudget draws.
BigInt random_prime_in(const BigInt& lo, const BigInt& hi, Rng& rng);

struct PrimeReductionParams {
    int confidence = 1;  // d_param
    BigInt prime;
    BigInt bound;        // primes are drawn from [2, bound]
    std::uint64_t seed = 0;
};

/// d_param * n^k * ceil(log2 n) * ceil(log2(kM)); each log factor is clamped to at least 1.
BigInt prime_range_bound(std::size_t n, int k, const BigInt& max_value, int d_param);

/// Random-prime weight reduction: numbers become x mod p and the i-th of the k
/// output instances has target (t mod p) + i*p. Solvable sources always give a
/// solvable item; unsolvable sources give one only if p divides some k-sum minus t.
ReducedCollection<KSumInstance> ksum_mod_reduce(const KSumInstance& inst, int d_param, Rng& rng);
ReducedCollection<KSumInstance> ksum_mod_reduce(const KSumInstance& inst, int d_param,
                                                std::uint64_t seed);

// Same reduction with a caller-chosen prime.
ReducedCollection<KSumInstance> ksum_mod_reduce_with_prime(const KSumInstance& inst,
                                                           const BigInt& prime);

}  // namespace ksumred
