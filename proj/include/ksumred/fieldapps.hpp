#pragma once

#include "ksumred/collection.hpp"
#include "ksumred/instances.hpp"
#include "ksumred/solvers.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ksumred {

/// k integer instances with targets z + i*q, i in [0, k-1]; the numbers are the
/// elements themselves. Witnesses carry over unchanged.
ReducedCollection<KSumInstance> targetsum_to_ksum(const TargetSumInstance& inst);

/// q = kM + 1 exceeds every k-fold sum. A target outside [0, kM] cannot be met
/// and maps to q = kM + 2, z = kM + 1, which is equally unsolvable.
TargetSumInstance ksum_to_targetsum(const KSumInstance& inst);

inline constexpr std::uint64_t kLinDepBudget = 50'000'000;

/// Expanded items c * x_i mod q (item index i*q + c) for every scalar c and vector
/// i; one instance per v in [0, k-1]^dim with target z + q*v. Fewer than k
/// vectors admit no k distinct ones, so the collection is then empty.
ReducedCollection<VectorSumInstance> lindep_to_vectorsum(const LinDepInstance& inst,
                                                         std::uint64_t budget = kLinDepBudget);

struct LinDepLift {
    Witness indices;  // k distinct source indices
    std::vector<std::pair<std::size_t, std::int64_t>> combination;  // (index, coefficient)
};

/// Decodes expanded items to (index, coefficient) pairs, checks that the
/// combination equals z over F_q, and pads repeated indices up to k distinct ones.
LinDepLift lift_lindep_witness(const LinDepInstance& inst, const Witness& w);

SolverReport solve_targetsum_bruteforce(const TargetSumInstance& inst,
                                        std::uint64_t budget = kBruteBudget);
// Span check by Gaussian elimination on every k-subset, in lexicographic order.
SolverReport solve_lindep_bruteforce(const LinDepInstance& inst, std::uint64_t budget = kBruteBudget);

}  // namespace ksumred
