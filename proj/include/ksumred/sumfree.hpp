#pragma once

#include "ksumred/bigint.hpp"
#include "ksumred/collection.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ksumred {

/// Digit-norm construction parameters. Elements are sums of a_i * base^i over
/// m digits a_i in [0, b-1] whose squared norm is exactly r.
struct SumFreeParams {
    int k = 3;
    unsigned m = 0;
    std::uint64_t b = 0;
    std::uint64_t base = 0;
    std::uint64_t r = 0;

    bool operator==(const SumFreeParams&) const = default;
};

struct SumFreeSet {
    std::vector<BigInt> elements;  // sorted, distinct
    SumFreeParams params;
    int k = 3;
    BigInt norm_class_size;        // |S_r(m, b)| before truncation

    const BigInt& max_element() const { return elements.back(); }
};

/// Smallest radix above (k-1)(b-1) of the form (k-1)b - 1; for k = 2 that form
/// equals (k-1)(b-1), so b is used instead.
std::uint64_t behrend_base(int k, std::uint64_t b);

/// counts[r] = number of digit vectors in [0, b-1]^m with squared norm r.
std::vector<BigInt> norm_counts(unsigned m, std::uint64_t b);

/// All elements of S_r(m, b) in increasing order, at most `limit` of them.
std::vector<BigInt> behrend_set(int k, unsigned m, std::uint64_t b, std::uint64_t r,
                                std::size_t limit = static_cast<std::size_t>(-1));

/// A k-sum-free set of exactly n elements: m = ceil(2/eps) + 2, the smallest b
/// whose pigeonhole floor b^m / (m(b-1)^2 + 1) reaches n, and the most populous
/// norm class (ties to the smallest r). Keeps the n smallest elements.
SumFreeSet behrend_sumfree(std::size_t n, int k, double eps = 0.5);

/// Exhaustive check: for all x_1..x_k in the set (repetition allowed),
/// x_1 + ... + x_{k-1} = (k-1) x_k implies all equal. Throws ValidationError on duplicates.
bool verify_sumfree(const std::vector<BigInt>& set, int k);

/// Smallest-first greedy k-sum-free set; used for small n where it gives a smaller maximum.
std::vector<BigInt> greedy_sumfree(std::size_t n, int k);

/// Base-`base` digits of x, least significant first, padded to m digits.
std::vector<std::uint64_t> digits_in_base(const BigInt& x, std::uint64_t base, unsigned m);

ordered_json sumfree_to_json(const SumFreeSet& set);

}  // namespace ksumred
