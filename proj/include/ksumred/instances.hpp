#pragma once

#include "ksumred/bigint.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ksumred {

// A solution: k distinct indices (number/vector instances) or vertices (graphs).
using Witness = std::vector<std::size_t>;

struct Bounds {
    BigInt lo;
    BigInt hi;
    bool operator==(const Bounds&) const = default;
};

/// k-SUM: do some k distinct indices carry numbers summing to the target?
class KSumInstance {
public:
    KSumInstance(int k, std::vector<BigInt> numbers, BigInt target, Bounds range);
    /// Range defaults to the smallest interval holding 0 and every number.
    KSumInstance(int k, std::vector<BigInt> numbers, BigInt target);

    int k() const { return k_; }
    const std::vector<BigInt>& numbers() const { return numbers_; }
    std::size_t size() const { return numbers_.size(); }
    const BigInt& target() const { return target_; }
    const Bounds& range() const { return range_; }

    bool operator==(const KSumInstance&) const = default;

private:
    int k_;
    std::vector<BigInt> numbers_;
    BigInt target_;
    Bounds range_;
};

/// k-Vector-SUM over integer vectors of a fixed dimension.
class VectorSumInstance {
public:
    VectorSumInstance(int k, std::size_t dim, std::vector<std::vector<BigInt>> vectors,
                      std::vector<BigInt> target, Bounds entry_range);
    VectorSumInstance(int k, std::size_t dim, std::vector<std::vector<BigInt>> vectors,
                      std::vector<BigInt> target);

    int k() const { return k_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::vector<BigInt>>& vectors() const { return vectors_; }
    std::size_t size() const { return vectors_.size(); }
    const std::vector<BigInt>& target() const { return target_; }
    const Bounds& entry_range() const { return entry_range_; }

    // Target outside the k-fold Minkowski range of the entries, or fewer than k vectors.
    bool trivially_unsolvable() const;

    bool operator==(const VectorSumInstance&) const = default;

private:
    int k_;
    std::size_t dim_;
    std::vector<std::vector<BigInt>> vectors_;
    std::vector<BigInt> target_;
    Bounds entry_range_;
};

struct Edge {
    std::size_t u;
    std::size_t v;
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph; edges are stored as (u < v) sorted lexicographically.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const;
    bool has_edge(std::size_t u, std::size_t v) const { return edge_index(u, v).has_value(); }

    bool operator==(const Graph&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

struct WeightedEdge {
    std::size_t u;
    std::size_t v;
    BigInt w;
};

/// Exact node-weight or edge-weight k-Clique. Exactly one weight map is present;
/// unweighted graphs are CliqueInstance.
class WeightedGraph {
public:
    WeightedGraph(int k, Graph graph, std::optional<std::vector<BigInt>> node_weights,
                  std::optional<std::vector<BigInt>> edge_weights, BigInt target);

    static WeightedGraph with_node_weights(int k, Graph graph, std::vector<BigInt> weights,
                                           BigInt target);
    static WeightedGraph with_edge_weights(int k, std::size_t n, std::vector<WeightedEdge> edges,
                                           BigInt target);

    int k() const { return k_; }
    const Graph& graph() const { return graph_; }
    std::size_t n() const { return graph_.n(); }
    bool node_weighted() const { return node_weights_.has_value(); }
    bool edge_weighted() const { return edge_weights_.has_value(); }
    const std::optional<std::vector<BigInt>>& node_weights() const { return node_weights_; }
    // Aligned with graph().edges().
    const std::optional<std::vector<BigInt>>& edge_weights() const { return edge_weights_; }
    const BigInt& target() const { return target_; }

    // Smallest M with every weight in [-M, M].
    BigInt weight_bound() const;

    bool operator==(const WeightedGraph&) const = default;

private:
    int k_;
    Graph graph_;
    std::optional<std::vector<BigInt>> node_weights_;
    std::optional<std::vector<BigInt>> edge_weights_;
    BigInt target_;
};

/// Unweighted k-Clique, optionally k-partite with 1-based slot labels.
class CliqueInstance {
public:
    CliqueInstance(int k, Graph graph, std::optional<std::vector<int>> partition = std::nullopt);

    int k() const { return k_; }
    const Graph& graph() const { return graph_; }
    std::size_t n() const { return graph_.n(); }
    const std::optional<std::vector<int>>& partition() const { return partition_; }

    bool operator==(const CliqueInstance&) const = default;

private:
    int k_;
    Graph graph_;
    std::optional<std::vector<int>> partition_;
};

/// (k,r)-TargetSum over Z_q: k distinct elements summing to z modulo q.
class TargetSumInstance {
public:
    TargetSumInstance(BigInt q, std::vector<BigInt> elements, int k, BigInt z);

    const BigInt& q() const { return q_; }
    const std::vector<BigInt>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    int k() const { return k_; }
    const BigInt& z() const { return z_; }

    bool operator==(const TargetSumInstance&) const = default;

private:
    BigInt q_;
    std::vector<BigInt> elements_;
    int k_;
    BigInt z_;
};

/// (k,r)-LinDependence over F_q (q prime): is z in the span of some k distinct vectors?
class LinDepInstance {
public:
    LinDepInstance(std::int64_t q, std::size_t dim, std::vector<std::vector<std::int64_t>> vectors,
                   int k, std::vector<std::int64_t> z);

    std::int64_t q() const { return q_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::vector<std::int64_t>>& vectors() const { return vectors_; }
    std::size_t size() const { return vectors_.size(); }
    int k() const { return k_; }
    const std::vector<std::int64_t>& z() const { return z_; }

    bool operator==(const LinDepInstance&) const = default;

private:
    std::int64_t q_;
    std::size_t dim_;
    std::vector<std::vector<std::int64_t>> vectors_;
    int k_;
    std::vector<std::int64_t> z_;
};

using Instance = std::variant<KSumInstance, VectorSumInstance, WeightedGraph, CliqueInstance,
                              TargetSumInstance, LinDepInstance>;

// "ksum", "vectorsum", "graph", "targetsum", "lindep".
std::string instance_type(const Instance& inst);
int arity(const Instance& inst);

bool verify_witness(const KSumInstance& inst, const Witness& w);
bool verify_witness(const VectorSumInstance& inst, const Witness& w);
bool verify_witness(const WeightedGraph& inst, const Witness& w);
bool verify_witness(const CliqueInstance& inst, const Witness& w);
bool verify_witness(const TargetSumInstance& inst, const Witness& w);
bool verify_witness(const LinDepInstance& inst, const Witness& w);
bool verify_witness(const Instance& inst, const Witness& w);

/// y_i = k*x_i - t with target 0; the solving index sets are unchanged.
KSumInstance normalize_zero_target(const KSumInstance& inst);

// z in span(vectors) over F_q, by Gaussian elimination. q must be prime.
bool span_contains(const std::vector<std::vector<std::int64_t>>& vectors,
                   const std::vector<std::int64_t>& z, std::int64_t q);

}  // namespace ksumred
