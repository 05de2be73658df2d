#include "ksumred/generators.hpp"

#include "ksumred/errors.hpp"
#include "ksumred/modprime.hpp"

#include <algorithm>

namespace ksumred {

BigInt uniform_in(const BigInt& lo, const BigInt& hi, Rng& rng) {
    if (hi < lo) throw ParameterError("empty interval");
    return lo + uniform_below(hi - lo + 1, rng);
}

bool bernoulli(double p, Rng& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("probability must lie in [0, 1]");
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < p;
}

std::vector<std::size_t> random_subset(std::size_t n, std::size_t k, Rng& rng) {
    if (k > n) throw ParameterError("subset larger than its ground set");
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + uniform_below(BigInt(n - i), rng).convert_to<std::size_t>();
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::vector<BigInt> random_split(const BigInt& total, std::size_t k, const BigInt& lo, const BigInt& hi, Rng& rng) {
    if (total < lo * k || total > hi * k) throw ParameterError("total outside the reachable range");
    std::vector<BigInt> out;
    BigInt rest = total;
    for (std::size_t i = 0; i < k; ++i) {
        const BigInt slots = BigInt(k - i - 1);
        const BigInt a = std::max(lo, rest - slots * hi);
        const BigInt b = std::min(hi, rest - slots * lo);
        out.push_back(uniform_in(a, b, rng));
        rest -= out.back();
    }
    return out;
}

KSumInstance gen_random_ksum(std::size_t n, int k, const BigInt& M, Plant plant, std::uint64_t seed) {
    if (k < 1) throw ParameterError("arity must be positive");
    if (n < static_cast<std::size_t>(k)) throw ParameterError("need n >= k");
    if (M < 0) throw ParameterError("M must be nonnegative");
    Rng rng(seed);
    std::vector<BigInt> xs(n);
    for (auto& x : xs) x = uniform_in(0, M, rng);
    const BigInt t = uniform_in(0, M * k, rng);
    if (plant == Plant::Plant) {
        const auto subset = random_subset(n, static_cast<std::size_t>(k), rng);
        const auto parts = random_split(t, subset.size(), 0, M, rng);
        for (std::size_t i = 0; i < subset.size(); ++i) xs[subset[i]] = parts[i];
    }
    return KSumInstance(k, std::move(xs), t, Bounds{0, M});
}

Instance gen_random_graph(std::size_t n, double edge_prob, int k, bool plant_clique, WeightKind weights,
                          const BigInt& M, std::uint64_t seed) {
    if (k < 1) throw ParameterError("arity must be positive");
    if (M < 0) throw ParameterError("M must be nonnegative");
    Rng rng(seed);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) adj[u][v] = bernoulli(edge_prob, rng);
    std::vector<std::size_t> planted;
    if (plant_clique) {
        planted = random_subset(n, static_cast<std::size_t>(k), rng);
        for (std::size_t a = 0; a < planted.size(); ++a)
            for (std::size_t b = a + 1; b < planted.size(); ++b) adj[planted[a]][planted[b]] = 1;
    }
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (adj[u][v]) edges.push_back({u, v});
    Graph g(n, std::move(edges));

    if (weights == WeightKind::None) return CliqueInstance(k, std::move(g));
    if (weights == WeightKind::Node) {
        std::vector<BigInt> w(n);
        for (auto& x : w) x = uniform_in(0, M, rng);
        BigInt t = uniform_in(0, M * k, rng);
        if (plant_clique) {
            t = 0;
            for (auto v : planted) t += w[v];
        }
        return WeightedGraph::with_node_weights(k, std::move(g), std::move(w), std::move(t));
    }
    std::vector<BigInt> w(g.m());
    for (auto& x : w) x = uniform_in(-M, M, rng);
    if (plant_clique && k >= 2) {
        const std::size_t pairs = planted.size() * (planted.size() - 1) / 2;
        const auto parts = random_split(0, pairs, -M, M, rng);
        std::size_t c = 0;
        for (std::size_t a = 0; a < planted.size(); ++a)
            for (std::size_t b = a + 1; b < planted.size(); ++b) w[*g.edge_index(planted[a], planted[b])] = parts[c++];
    }
    std::vector<WeightedEdge> wedges;
    for (std::size_t e = 0; e < g.m(); ++e) wedges.push_back({g.edges()[e].u, g.edges()[e].v, w[e]});
    return WeightedGraph::with_edge_weights(k, n, std::move(wedges), 0);
}

VectorSumInstance gen_random_vectorsum(std::size_t n, int k, std::size_t dim, const BigInt& M, Plant plant,
                                       std::uint64_t seed) {
    if (n < static_cast<std::size_t>(k)) throw ParameterError("need n >= k");
    Rng rng(seed);
    std::vector<std::vector<BigInt>> vs(n, std::vector<BigInt>(dim));
    for (auto& v : vs)
        for (auto& x : v) x = uniform_in(0, M, rng);
    std::vector<BigInt> t(dim);
    for (auto& x : t) x = uniform_in(0, M * k, rng);
    if (plant == Plant::Plant) {
        const auto subset = random_subset(n, static_cast<std::size_t>(k), rng);
        for (std::size_t j = 0; j < dim; ++j) {
            const auto parts = random_split(t[j], subset.size(), 0, M, rng);
            for (std::size_t i = 0; i < subset.size(); ++i) vs[subset[i]][j] = parts[i];
        }
    }
    return VectorSumInstance(k, dim, std::move(vs), std::move(t), Bounds{0, M});
}

TargetSumInstance gen_random_targetsum(std::size_t r, int k, const BigInt& q, Plant plant, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<BigInt> xs(r);
    for (auto& x : xs) x = uniform_below(q, rng);
    BigInt z = uniform_below(q, rng);
    if (plant == Plant::Plant && r >= static_cast<std::size_t>(k)) {
        BigInt sum = 0;
        for (auto i : random_subset(r, static_cast<std::size_t>(k), rng)) sum += xs[i];
        z = sum % q;
    }
    return TargetSumInstance(q, std::move(xs), k, std::move(z));
}

LinDepInstance gen_random_lindep(std::size_t r, std::size_t dim, int k, std::int64_t q, std::uint64_t seed) {
    Rng rng(seed);
    auto draw = [&] { return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q)); };
    std::vector<std::vector<std::int64_t>> vs(r, std::vector<std::int64_t>(dim));
    for (auto& v : vs)
        for (auto& x : v) x = draw();
    std::vector<std::int64_t> z(dim);
    for (auto& x : z) x = draw();
    return LinDepInstance(q, dim, std::move(vs), k, std::move(z));
}

}  // namespace ksumred
