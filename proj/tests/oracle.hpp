#pragma once

// Reference checks that share no code with the library's solvers: plain
// recursion over index sets, direct sums and exhaustive coefficient search.

#include "ksumred/bigint.hpp"
#include "ksumred/instances.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using ksumred::BigInt;
using Subset = std::vector<std::size_t>;

// Calls fn on each k-subset of [0, n) in lexicographic order until fn returns true.
inline bool any_subset(std::size_t n, std::size_t k, const std::function<bool(const Subset&)>& fn) {
    Subset cur;
    std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
        if (cur.size() == k) return fn(cur);
        for (std::size_t i = from; i + (k - cur.size()) <= n; ++i) {
            cur.push_back(i);
            if (rec(i + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    return rec(0);
}

inline std::vector<Subset> all_subsets_where(std::size_t n, std::size_t k,
                                             const std::function<bool(const Subset&)>& pred) {
    std::vector<Subset> out;
    any_subset(n, k, [&](const Subset& s) {
        if (pred(s)) out.push_back(s);
        return false;
    });
    return out;
}

inline std::vector<Subset> ksum_solutions(const std::vector<BigInt>& xs, int k, const BigInt& t) {
    return all_subsets_where(xs.size(), static_cast<std::size_t>(k), [&](const Subset& s) {
        BigInt sum = 0;
        for (auto i : s) sum += xs[i];
        return sum == t;
    });
}

inline bool ksum(const std::vector<BigInt>& xs, int k, const BigInt& t) {
    return any_subset(xs.size(), static_cast<std::size_t>(k), [&](const Subset& s) {
        BigInt sum = 0;
        for (auto i : s) sum += xs[i];
        return sum == t;
    });
}

inline bool ksum(const ksumred::KSumInstance& x) { return ksum(x.numbers(), x.k(), x.target()); }

inline bool vectorsum(const ksumred::VectorSumInstance& x) {
    return any_subset(x.size(), static_cast<std::size_t>(x.k()), [&](const Subset& s) {
        for (std::size_t j = 0; j < x.dim(); ++j) {
            BigInt sum = 0;
            for (auto i : s) sum += x.vectors()[i][j];
            if (sum != x.target()[j]) return false;
        }
        return true;
    });
}

inline std::set<std::pair<std::size_t, std::size_t>> edge_set(const ksumred::Graph& g) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (const auto& e : g.edges()) {
        out.insert({e.u, e.v});
        out.insert({e.v, e.u});
    }
    return out;
}

inline bool is_clique(const std::set<std::pair<std::size_t, std::size_t>>& es, const Subset& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (!es.count({s[a], s[b]})) return false;
    return true;
}

inline bool clique(const ksumred::Graph& g, int k) {
    const auto es = edge_set(g);
    return any_subset(g.n(), static_cast<std::size_t>(k), [&](const Subset& s) { return is_clique(es, s); });
}

inline bool clique(const ksumred::CliqueInstance& x) { return clique(x.graph(), x.k()); }

inline BigInt edge_weight_sum(const ksumred::WeightedGraph& g, const Subset& s) {
    BigInt sum = 0;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            sum += (*g.edge_weights())[*g.graph().edge_index(s[a], s[b])];
    return sum;
}

inline bool weighted_clique(const ksumred::WeightedGraph& g) {
    const auto es = edge_set(g.graph());
    return any_subset(g.n(), static_cast<std::size_t>(g.k()), [&](const Subset& s) {
        if (!is_clique(es, s)) return false;
        if (g.node_weighted()) {
            BigInt sum = 0;
            for (auto v : s) sum += (*g.node_weights())[v];
            return sum == g.target();
        }
        return edge_weight_sum(g, s) == g.target();
    });
}

inline bool targetsum(const ksumred::TargetSumInstance& x) {
    return any_subset(x.size(), static_cast<std::size_t>(x.k()), [&](const Subset& s) {
        BigInt sum = 0;
        for (auto i : s) sum += x.elements()[i];
        return sum % x.q() == x.z();
    });
}

// z in the span of some k distinct vectors: every coefficient vector in F_q^k is tried.
inline bool lindep(const ksumred::LinDepInstance& x) {
    const std::int64_t q = x.q();
    const std::size_t k = static_cast<std::size_t>(x.k());
    return any_subset(x.size(), k, [&](const Subset& s) {
        std::vector<std::int64_t> c(k, 0);
        for (;;) {
            bool hit = true;
            for (std::size_t j = 0; j < x.dim() && hit; ++j) {
                std::int64_t acc = 0;
                for (std::size_t a = 0; a < k; ++a) acc = (acc + c[a] * x.vectors()[s[a]][j]) % q;
                hit = acc == x.z()[j];
            }
            if (hit) return true;
            std::size_t pos = 0;
            while (pos < k && c[pos] == q - 1) c[pos++] = 0;
            if (pos == k) return false;
            ++c[pos];
        }
    });
}

// Rank of rows over F_q (q prime), by Gaussian elimination.
inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t q) {
    auto inv = [q](std::int64_t a) {
        std::int64_t r = 1, e = q - 2;
        a %= q;
        while (e > 0) {
            if (e & 1) r = r * a % q;
            a = a * a % q;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] % q == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const std::int64_t f = inv(rows[rank][c]);
        for (auto& x : rows[rank]) x = x * f % q;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const std::int64_t m = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) rows[r][j] = ((rows[r][j] - m * rows[rank][j]) % q + q) % q;
        }
        ++rank;
    }
    return rank;
}

// z in the span of some k distinct vectors, decided by rank comparison.
inline bool lindep_span(const ksumred::LinDepInstance& x) {
    const std::int64_t q = x.q();
    return any_subset(x.size(), static_cast<std::size_t>(x.k()), [&](const Subset& s) {
        std::vector<std::vector<std::int64_t>> rows;
        for (auto i : s) rows.push_back(x.vectors()[i]);
        const auto r = rank_mod(rows, q);
        rows.push_back(x.z());
        return rank_mod(rows, q) == r;
    });
}

inline bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace oracle
