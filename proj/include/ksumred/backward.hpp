#pragma once

#include "ksumred/bigint.hpp"
#include "ksumred/collection.hpp"
#include "ksumred/instances.hpp"

#include <cstddef>
#include <vector>

namespace ksumred {

enum class SumFreeSource {
    Behrend,
    Greedy,  // n <= 64 only
};

/// Vertex v gets code codes[v] from a k-sum-free set D; Q = max D, T = Q(k-1) + 1.
struct CliqueEncoding {
    int k = 0;
    int k_prime = 0;  // k + C(k,2)
    std::vector<BigInt> codes;
    BigInt Q;
    BigInt T;
    std::size_t dim = 0;  // k^2 + k + 1
};

/// What a vector of the reduced instance stands for. Vertex vectors use `first`
/// and slot_i; edge vectors carry the oriented pair (first, second) on slots i < j.
struct VectorOrigin {
    bool is_vertex = true;
    std::size_t first = 0;
    std::size_t second = 0;
    int slot_i = 0;
    int slot_j = 0;
};

struct CliqueToVectorSum {
    CliqueInstance source;
    CliqueEncoding encoding;
    VectorSumInstance instance;
    std::vector<VectorOrigin> origins;  // aligned with instance.vectors()
    bool trivially_unsolvable = false;  // n < k
};

/// k-Clique to k'-Vector-SUM with k' = k + C(k,2). Coordinates 1..k are slots,
/// coordinate k*i + j marks the slot pair (i, j), coordinate k^2 + k + 1 counts
/// vertex vectors. Vectors: k*n vertex vectors (vertex-major), then for each edge
/// u < v, each slot pair, the orientations (u, v) and (v, u).
CliqueToVectorSum clique_to_vectorsum(const CliqueInstance& g,
                                      SumFreeSource source = SumFreeSource::Behrend);
// Same with explicit vertex codes; they must be distinct, nonnegative and k-sum-free.
CliqueToVectorSum clique_to_vectorsum(const CliqueInstance& g, std::vector<BigInt> codes);

/// Decodes a vector-sum witness to the clique's vertices in slot order. Throws
/// MalformedWitness if w does not verify and Error if the decoding steps fail.
Witness lift_vectorsum_witness_to_clique(const CliqueToVectorSum& red, const Witness& w);

// sum_j v[j] * prod_{l<j} radices[l]
BigInt pack_vector(const std::vector<BigInt>& v, const std::vector<BigInt>& radices);
std::vector<BigInt> unpack_vector(const BigInt& x, const std::vector<BigInt>& radices);

/// Carry-free packing with per-coordinate radices; each radix must exceed k times
/// the coordinate's largest entry and its target entry.
KSumInstance pack_vectorsum(const VectorSumInstance& inst, const std::vector<BigInt>& radices);

/// Packing with the single radix p = kM + 1. Needs entries in [0, M] and target in [0, kM].
KSumInstance vectorsum_to_ksum(const VectorSumInstance& inst);

enum class RadixMode { Uniform, Mixed };

struct CliqueToKSum {
    CliqueToVectorSum vec;
    RadixMode mode = RadixMode::Uniform;
    std::vector<BigInt> radices;
    KSumInstance instance;
};

/// Uniform: every radix k'T + 1. Mixed: k'T + 1 on the k slot coordinates and
/// k'k + 1 on the rest, whose entries are at most 1.
CliqueToKSum kclique_to_ksum(const CliqueInstance& g, RadixMode mode = RadixMode::Uniform,
                             SumFreeSource source = SumFreeSource::Behrend);

Witness lift_ksum_witness_to_clique(const CliqueToKSum& red, const Witness& w);

ordered_json encoding_to_json(const CliqueToVectorSum& red);

}  // namespace ksumred
