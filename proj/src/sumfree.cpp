#include "ksumred/sumfree.hpp"

#include "ksumred/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ksumred {

namespace {

// prefix[j][r]: digit vectors of length j with squared norm r.
std::vector<std::vector<BigInt>> prefix_norm_counts(unsigned m, std::uint64_t b) {
    const std::uint64_t top = static_cast<std::uint64_t>(m) * (b - 1) * (b - 1);
    std::vector<std::vector<BigInt>> table(m + 1, std::vector<BigInt>(top + 1, 0));
    table[0][0] = 1;
    for (unsigned j = 1; j <= m; ++j)
        for (std::uint64_t r = 0; r <= top; ++r) {
            if (table[j - 1][r] == 0) continue;
            for (std::uint64_t a = 0; a < b; ++a) {
                const std::uint64_t nr = r + a * a;
                if (nr > top) break;
                table[j][nr] += table[j - 1][r];
            }
        }
    return table;
}

template <class Int>
bool verify_sumfree_impl(const std::vector<Int>& xs, int k) {
    const std::size_t n = xs.size();
    if (n == 0) return true;
    std::vector<Int> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    const int arity = k - 1;
    // Nondecreasing index tuples cover every multiset of k-1 elements once.
    std::vector<std::size_t> idx(arity, 0);
    for (;;) {
        Int sum = 0;
        for (auto i : idx) sum += sorted[i];
        if (sum % arity == 0) {
            const Int target = sum / arity;
            if (std::binary_search(sorted.begin(), sorted.end(), target)) {
                const bool all_equal = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) {
                    return sorted[i] == target;
                });
                if (!all_equal) return false;
            }
        }
        int pos = arity - 1;
        while (pos >= 0 && idx[pos] == n - 1) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int q = pos + 1; q < arity; ++q) idx[q] = idx[pos];
    }
    return true;
}

}  // namespace

std::uint64_t behrend_base(int k, std::uint64_t b) {
    if (k < 2) throw ParameterError("sum-free sets need k >= 2");
    if (b < 1) throw ParameterError("digit bound must be at least 1");
    const std::uint64_t base = static_cast<std::uint64_t>(k - 1) * b - 1;
    const std::uint64_t floor = static_cast<std::uint64_t>(k - 1) * (b - 1);
    return base > floor ? base : floor + 1;
}

std::vector<BigInt> norm_counts(unsigned m, std::uint64_t b) {
    if (b < 1) throw ParameterError("digit bound must be at least 1");
    return prefix_norm_counts(m, b).back();
}

std::vector<BigInt> behrend_set(int k, unsigned m, std::uint64_t b, std::uint64_t r,
                                std::size_t limit) {
    const std::uint64_t base = behrend_base(k, b);
    const auto table = prefix_norm_counts(m, b);
    const std::uint64_t top = static_cast<std::uint64_t>(m) * (b - 1) * (b - 1);
    std::vector<BigInt> out;
    if (r > top || table[m][r] == 0) return out;

    std::vector<BigInt> powers(m, 1);
    for (unsigned i = 1; i < m; ++i) powers[i] = powers[i - 1] * base;

    // Most significant digit first with ascending digits gives ascending values.
    std::vector<std::uint64_t> digits(m, 0);
    auto recurse = [&](auto&& self, int pos, std::uint64_t remaining, const BigInt& value) -> void {
        if (out.size() >= limit) return;
        if (pos < 0) {
            out.push_back(value);
            return;
        }
        for (std::uint64_t a = 0; a < b && a * a <= remaining; ++a) {
            if (table[pos][remaining - a * a] == 0) continue;
            self(self, pos - 1, remaining - a * a, value + powers[pos] * a);
            if (out.size() >= limit) return;
        }
    };
    recurse(recurse, static_cast<int>(m) - 1, r, BigInt(0));
    return out;
}

SumFreeSet behrend_sumfree(std::size_t n, int k, double eps) {
    if (n < 1) throw ParameterError("requested sum-free set size must be at least 1");
    if (k < 2) throw ParameterError("sum-free sets need k >= 2");
    if (!(eps > 0)) throw ParameterError("density knob eps must be positive");

    unsigned m = static_cast<unsigned>(std::ceil(2.0 / eps)) + 2;
    std::uint64_t b = 2;
    for (;;) {
        // Smallest b whose pigeonhole floor reaches n.
        for (;; ++b) {
            const BigInt classes = BigInt(m) * (b - 1) * (b - 1) + 1;
            if (ipow(BigInt(b), m) >= classes * n) break;
        }
        const auto counts = norm_counts(m, b);
        std::uint64_t best = 0;
        for (std::uint64_t r = 1; r < counts.size(); ++r)
            if (counts[r] > counts[best]) best = r;
        if (counts[best] >= n) {
            SumFreeSet set;
            set.k = k;
            set.params = {k, m, b, behrend_base(k, b), best};
            set.norm_class_size = counts[best];
            set.elements = behrend_set(k, m, b, best, n);
            return set;
        }
        // Unreachable while the pigeonhole floor holds; escalate b, then m.
        if (b < 64) {
            ++b;
        } else {
            ++m;
            b = 2;
        }
    }
}

bool verify_sumfree(const std::vector<BigInt>& set, int k) {
    if (k < 2) throw ParameterError("sum-free sets need k >= 2");
    std::set<BigInt> distinct(set.begin(), set.end());
    if (distinct.size() != set.size()) throw ValidationError("sum-free candidate has duplicate elements");
    if (k == 2 || set.empty()) return true;
    const unsigned bits = max_bit_length(set) + ceil_log2(BigInt(k)) + 1;
    if (bits < 62) {
        std::vector<std::int64_t> xs;
        for (const auto& x : set) xs.push_back(x.convert_to<std::int64_t>());
        return verify_sumfree_impl(xs, k);
    }
    return verify_sumfree_impl(set, k);
}

std::vector<BigInt> greedy_sumfree(std::size_t n, int k) {
    if (k < 2) throw ParameterError("sum-free sets need k >= 2");
    std::vector<BigInt> out;
    for (BigInt x = 0; out.size() < n; ++x) {
        out.push_back(x);
        if (!verify_sumfree(out, k)) out.pop_back();
    }
    return out;
}

std::vector<std::uint64_t> digits_in_base(const BigInt& x, std::uint64_t base, unsigned m) {
    std::vector<std::uint64_t> out(m, 0);
    BigInt rest = x;
    for (unsigned i = 0; i < m && rest > 0; ++i) {
        out[i] = static_cast<std::uint64_t>(rest % base);
        rest /= base;
    }
    if (rest != 0) throw RangeError("value has more than m digits");
    return out;
}

ordered_json sumfree_to_json(const SumFreeSet& set) {
    ordered_json j;
    j["type"] = "sumfree";
    j["k"] = set.k;
    ordered_json elems = ordered_json::array();
    for (const auto& x : set.elements) elems.push_back(to_decimal(x));
    j["elements"] = std::move(elems);
    j["params"] = {{"m", set.params.m},
                   {"b", set.params.b},
                   {"base", set.params.base},
                   {"r", set.params.r},
                   {"norm_class_size", to_decimal(set.norm_class_size)}};
    return j;
}

}  // namespace ksumred
