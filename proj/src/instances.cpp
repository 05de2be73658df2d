#include "ksumred/instances.hpp"

#include "ksumred/errors.hpp"
#include "ksumred/modprime.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ksumred {

namespace {

Bounds hull_with_zero(const std::vector<BigInt>& xs) {
    Bounds b{0, 0};
    for (const auto& x : xs) {
        if (x < b.lo) b.lo = x;
        if (x > b.hi) b.hi = x;
    }
    return b;
}

// Throws MalformedWitness unless w is exactly k distinct values below limit.
void check_witness_shape(const Witness& w, int k, std::size_t limit, const char* what) {
    if (w.size() != static_cast<std::size_t>(k))
        throw MalformedWitness("witness has " + std::to_string(w.size()) + " elements, expected " +
                               std::to_string(k));
    std::set<std::size_t> seen;
    for (auto x : w) {
        if (x >= limit)
            throw MalformedWitness(std::string(what) + " " + std::to_string(x) + " out of range");
        if (!seen.insert(x).second)
            throw MalformedWitness("witness repeats " + std::string(what) + " " + std::to_string(x));
    }
}

bool is_clique(const Graph& g, const Witness& w) {
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (!g.has_edge(w[a], w[b])) return false;
    return true;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t e, std::int64_t q) {
    std::int64_t result = 1;
    base %= q;
    while (e > 0) {
        if (e & 1) result = result * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return result;
}

}  // namespace

KSumInstance::KSumInstance(int k, std::vector<BigInt> numbers, BigInt target, Bounds range)
    : k_(k), numbers_(std::move(numbers)), target_(std::move(target)), range_(std::move(range)) {
    if (k_ < 1) throw ValidationError("k-SUM arity must be at least 1");
    if (range_.lo > range_.hi) throw ValidationError("k-SUM range has lo > hi");
    for (const auto& x : numbers_)
        if (x < range_.lo || x > range_.hi)
            throw ValidationError("number " + x.str() + " outside declared range");
}

KSumInstance::KSumInstance(int k, std::vector<BigInt> numbers, BigInt target)
    : KSumInstance(k, numbers, std::move(target), hull_with_zero(numbers)) {}

VectorSumInstance::VectorSumInstance(int k, std::size_t dim, std::vector<std::vector<BigInt>> vectors,
                                     std::vector<BigInt> target, Bounds entry_range)
    : k_(k),
      dim_(dim),
      vectors_(std::move(vectors)),
      target_(std::move(target)),
      entry_range_(std::move(entry_range)) {
    if (k_ < 1) throw ValidationError("vector-sum arity must be at least 1");
    if (dim_ < 1) throw ValidationError("vector-sum dimension must be at least 1");
    if (entry_range_.lo > entry_range_.hi) throw ValidationError("entry range has lo > hi");
    if (target_.size() != dim_) throw ValidationError("target length differs from dimension");
    for (const auto& v : vectors_) {
        if (v.size() != dim_) throw ValidationError("vector length differs from dimension");
        for (const auto& x : v)
            if (x < entry_range_.lo || x > entry_range_.hi)
                throw ValidationError("vector entry " + x.str() + " outside entry range");
    }
}

VectorSumInstance::VectorSumInstance(int k, std::size_t dim, std::vector<std::vector<BigInt>> vectors,
                                     std::vector<BigInt> target)
    : VectorSumInstance(k, dim, vectors, std::move(target), [&] {
          std::vector<BigInt> all;
          for (const auto& v : vectors) all.insert(all.end(), v.begin(), v.end());
          return hull_with_zero(all);
      }()) {}

bool VectorSumInstance::trivially_unsolvable() const {
    if (vectors_.size() < static_cast<std::size_t>(k_)) return true;
    const BigInt lo = entry_range_.lo * k_;
    const BigInt hi = entry_range_.hi * k_;
    return std::any_of(target_.begin(), target_.end(),
                       [&](const BigInt& t) { return t < lo || t > hi; });
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u >= n_ || e.v >= n_) throw ValidationError("edge endpoint out of range");
        if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw ValidationError("duplicate edge");
}

std::optional<std::size_t> Graph::edge_index(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    const Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

WeightedGraph::WeightedGraph(int k, Graph graph, std::optional<std::vector<BigInt>> node_weights,
                             std::optional<std::vector<BigInt>> edge_weights, BigInt target)
    : k_(k),
      graph_(std::move(graph)),
      node_weights_(std::move(node_weights)),
      edge_weights_(std::move(edge_weights)),
      target_(std::move(target)) {
    if (k_ < 1) throw ValidationError("clique arity must be at least 1");
    if (node_weights_.has_value() == edge_weights_.has_value())
        throw ValidationError("weighted graph needs exactly one of node or edge weights");
    if (node_weights_ && node_weights_->size() != graph_.n())
        throw ValidationError("node weight count differs from vertex count");
    if (edge_weights_ && edge_weights_->size() != graph_.m())
        throw ValidationError("edge weight count differs from edge count");
}

WeightedGraph WeightedGraph::with_node_weights(int k, Graph graph, std::vector<BigInt> weights,
                                               BigInt target) {
    return WeightedGraph(k, std::move(graph), std::move(weights), std::nullopt, std::move(target));
}

WeightedGraph WeightedGraph::with_edge_weights(int k, std::size_t n, std::vector<WeightedEdge> edges,
                                               BigInt target) {
    for (auto& e : edges)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    std::vector<Edge> plain;
    std::vector<BigInt> weights;
    plain.reserve(edges.size());
    weights.reserve(edges.size());
    for (auto& e : edges) {
        plain.push_back({e.u, e.v});
        weights.push_back(std::move(e.w));
    }
    return WeightedGraph(k, Graph(n, std::move(plain)), std::nullopt, std::move(weights),
                         std::move(target));
}

BigInt WeightedGraph::weight_bound() const {
    BigInt bound = 0;
    const auto* ws = node_weights_ ? &*node_weights_ : edge_weights_ ? &*edge_weights_ : nullptr;
    if (ws)
        for (const auto& w : *ws) bound = std::max(bound, BigInt(abs(w)));
    return bound;
}

CliqueInstance::CliqueInstance(int k, Graph graph, std::optional<std::vector<int>> partition)
    : k_(k), graph_(std::move(graph)), partition_(std::move(partition)) {
    if (k_ < 1) throw ValidationError("clique arity must be at least 1");
    if (partition_) {
        if (partition_->size() != graph_.n())
            throw ValidationError("partition size differs from vertex count");
        for (int s : *partition_)
            if (s < 1 || s > k_) throw ValidationError("partition slot outside [1, k]");
        for (const auto& e : graph_.edges())
            if ((*partition_)[e.u] == (*partition_)[e.v])
                throw ValidationError("edge inside a partition slot; graph is not k-partite");
    }
}

TargetSumInstance::TargetSumInstance(BigInt q, std::vector<BigInt> elements, int k, BigInt z)
    : q_(std::move(q)), elements_(std::move(elements)), k_(k), z_(std::move(z)) {
    if (q_ < 2) throw ValidationError("TargetSum modulus must be at least 2");
    if (k_ < 1) throw ValidationError("TargetSum arity must be at least 1");
    for (const auto& x : elements_)
        if (x < 0 || x >= q_) throw ValidationError("TargetSum element not reduced modulo q");
    if (z_ < 0 || z_ >= q_) throw ValidationError("TargetSum target not reduced modulo q");
}

LinDepInstance::LinDepInstance(std::int64_t q, std::size_t dim,
                               std::vector<std::vector<std::int64_t>> vectors, int k,
                               std::vector<std::int64_t> z)
    : q_(q), dim_(dim), vectors_(std::move(vectors)), k_(k), z_(std::move(z)) {
    if (q_ < 2 || q_ > (std::int64_t{1} << 31) || !is_prime(BigInt(q_)))
        throw ValidationError("LinDependence modulus must be a prime below 2^31");
    if (k_ < 1) throw ValidationError("LinDependence arity must be at least 1");
    if (dim_ < 1) throw ValidationError("LinDependence vector length must be at least 1");
    if (z_.size() != dim_) throw ValidationError("target length differs from vector length");
    auto reduced = [&](std::int64_t x) { return x >= 0 && x < q_; };
    for (const auto& v : vectors_) {
        if (v.size() != dim_) throw ValidationError("vector length differs from dimension");
        if (!std::all_of(v.begin(), v.end(), reduced))
            throw ValidationError("LinDependence entry not reduced modulo q");
    }
    if (!std::all_of(z_.begin(), z_.end(), reduced))
        throw ValidationError("LinDependence target not reduced modulo q");
}

std::string instance_type(const Instance& inst) {
    struct Visitor {
        std::string operator()(const KSumInstance&) const { return "ksum"; }
        std::string operator()(const VectorSumInstance&) const { return "vectorsum"; }
        std::string operator()(const WeightedGraph&) const { return "graph"; }
        std::string operator()(const CliqueInstance&) const { return "graph"; }
        std::string operator()(const TargetSumInstance&) const { return "targetsum"; }
        std::string operator()(const LinDepInstance&) const { return "lindep"; }
    };
    return std::visit(Visitor{}, inst);
}

int arity(const Instance& inst) {
    return std::visit([](const auto& x) { return x.k(); }, inst);
}

bool verify_witness(const KSumInstance& inst, const Witness& w) {
    check_witness_shape(w, inst.k(), inst.size(), "index");
    BigInt sum = 0;
    for (auto i : w) sum += inst.numbers()[i];
    return sum == inst.target();
}

bool verify_witness(const VectorSumInstance& inst, const Witness& w) {
    check_witness_shape(w, inst.k(), inst.size(), "index");
    for (std::size_t j = 0; j < inst.dim(); ++j) {
        BigInt sum = 0;
        for (auto i : w) sum += inst.vectors()[i][j];
        if (sum != inst.target()[j]) return false;
    }
    return true;
}

bool verify_witness(const WeightedGraph& inst, const Witness& w) {
    check_witness_shape(w, inst.k(), inst.n(), "vertex");
    if (!is_clique(inst.graph(), w)) return false;
    BigInt sum = 0;
    if (inst.node_weighted()) {
        for (auto v : w) sum += (*inst.node_weights())[v];
    } else if (inst.edge_weighted()) {
        for (std::size_t a = 0; a < w.size(); ++a)
            for (std::size_t b = a + 1; b < w.size(); ++b)
                sum += (*inst.edge_weights())[*inst.graph().edge_index(w[a], w[b])];
    }
    return sum == inst.target();
}

bool verify_witness(const CliqueInstance& inst, const Witness& w) {
    check_witness_shape(w, inst.k(), inst.n(), "vertex");
    return is_clique(inst.graph(), w);
}

bool verify_witness(const TargetSumInstance& inst, const Witness& w) {
    check_witness_shape(w, inst.k(), inst.size(), "index");
    BigInt sum = 0;
    for (auto i : w) sum += inst.elements()[i];
    return sum % inst.q() == inst.z();
}

bool verify_witness(const LinDepInstance& inst, const Witness& w) {
    check_witness_shape(w, inst.k(), inst.size(), "index");
    std::vector<std::vector<std::int64_t>> chosen;
    for (auto i : w) chosen.push_back(inst.vectors()[i]);
    return span_contains(chosen, inst.z(), inst.q());
}

bool verify_witness(const Instance& inst, const Witness& w) {
    return std::visit([&](const auto& x) { return verify_witness(x, w); }, inst);
}

KSumInstance normalize_zero_target(const KSumInstance& inst) {
    const int k = inst.k();
    std::vector<BigInt> ys;
    ys.reserve(inst.size());
    for (const auto& x : inst.numbers()) ys.push_back(k * x - inst.target());
    Bounds range{k * inst.range().lo - inst.target(), k * inst.range().hi - inst.target()};
    return KSumInstance(k, std::move(ys), 0, std::move(range));
}

bool span_contains(const std::vector<std::vector<std::int64_t>>& vectors,
                   const std::vector<std::int64_t>& z, std::int64_t q) {
    const std::size_t dim = z.size();
    const std::size_t cols = vectors.size();
    // Augmented system: columns are the chosen vectors, last column is z.
    std::vector<std::vector<std::int64_t>> a(dim, std::vector<std::int64_t>(cols + 1));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = ((vectors[c][r] % q) + q) % q;
        a[r][cols] = ((z[r] % q) + q) % q;
    }
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < dim; ++c) {
        std::size_t pivot = row;
        while (pivot < dim && a[pivot][c] == 0) ++pivot;
        if (pivot == dim) continue;
        std::swap(a[pivot], a[row]);
        const std::int64_t inv = mod_pow(a[row][c], q - 2, q);
        for (auto& x : a[row]) x = x * inv % q;
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == row || a[r][c] == 0) continue;
            const std::int64_t f = a[r][c];
            for (std::size_t j = 0; j <= cols; ++j) a[r][j] = ((a[r][j] - f * a[row][j]) % q + q) % q;
        }
        ++row;
    }
    // Inconsistent iff some zero row has a nonzero right-hand side.
    for (std::size_t r = row; r < dim; ++r)
        if (a[r][cols] != 0) return false;
    return true;
}

}  // namespace ksumred
