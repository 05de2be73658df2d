#pragma once

#include "ksumred/bigint.hpp"
#include "ksumred/instances.hpp"
#include "ksumred/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ksumred {

enum class Plant { None, Plant };
enum class WeightKind { None, Node, Edge };

BigInt uniform_in(const BigInt& lo, const BigInt& hi, Rng& rng);
// True with probability p; uses the top 53 bits of one draw.
bool bernoulli(double p, Rng& rng);
// Sorted k-subset of [0, n).
std::vector<std::size_t> random_subset(std::size_t n, std::size_t k, Rng& rng);
/// k values in [lo, hi] summing to total, drawn left to right.
std::vector<BigInt> random_split(const BigInt& total, std::size_t k, const BigInt& lo, const BigInt& hi, Rng& rng);

/// Numbers uniform in [0, M] and target uniform in [0, kM]. Plant overwrites a
/// random k-subset so that it sums to the target.
KSumInstance gen_random_ksum(std::size_t n, int k, const BigInt& M, Plant plant, std::uint64_t seed);

/// Erdos-Renyi graph with an optional planted k-clique. Node weights are uniform
/// in [0, M] with target uniform in [0, kM] (or the planted clique's weight);
/// edge weights are uniform in [-M, M] with target 0 and, when planted, the
/// clique's edges are redrawn to sum to 0.
Instance gen_random_graph(std::size_t n, double edge_prob, int k, bool plant_clique, WeightKind weights,
                          const BigInt& M, std::uint64_t seed);

VectorSumInstance gen_random_vectorsum(std::size_t n, int k, std::size_t dim, const BigInt& M, Plant plant,
                                       std::uint64_t seed);

TargetSumInstance gen_random_targetsum(std::size_t r, int k, const BigInt& q, Plant plant, std::uint64_t seed);

// q must be prime.
LinDepInstance gen_random_lindep(std::size_t r, std::size_t dim, int k, std::int64_t q, std::uint64_t seed);

}  // namespace ksumred
