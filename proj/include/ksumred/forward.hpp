#pragma once

#include "ksumred/bigint.hpp"
#include "ksumred/collection.hpp"
#include "ksumred/instances.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ksumred {

/// Base-p digits of x, least significant first. Throws RangeError unless 0 <= x < p^d.
std::vector<BigInt> base_p_digits(const BigInt& x, const BigInt& p, int d);
BigInt recompose_digits(const std::vector<BigInt>& digits, const BigInt& p);

/// The s = (k+1)^(d-1) carry tuples and their target vectors.
struct CarryContext {
    int k = 0;
    BigInt p;
    int d = 0;
    std::vector<std::vector<int>> gammas;        // lexicographic, c_1 most significant
    std::vector<std::vector<BigInt>> targets;    // aligned with gammas

    std::size_t s() const { return gammas.size(); }
    // All entries of targets[i] in [0, k(p-1)].
    bool feasible(std::size_t i) const;
};

CarryContext carry_targets(const BigInt& t, int k, const BigInt& p, int d);

/// k * digits(x) - t_gamma.
std::vector<BigInt> map_f(const BigInt& x, const std::vector<BigInt>& t_gamma, int k, const BigInt& p,
                          int d);

// Smallest p > k with p^d >= k*M + 1.
BigInt smallest_radix(int k, const BigInt& max_value, int d);

/// Digit-vector k-Vector-SUM instances, one per feasible carry tuple. Targets
/// outside [0, kM] give an empty collection with a note, since no k numbers of
/// [0, M] reach them.
ReducedCollection<VectorSumInstance> ksum_to_vectorsum(const KSumInstance& inst, const BigInt& p,
                                                       int d);

/// Complete graph on the n indices, node weight = number, same target.
WeightedGraph ksum_to_nodeweight(const KSumInstance& inst);

// 2 k^3 d p^2.
BigInt edge_weight_bound(int k, int d, const BigInt& p);

// sum_j u_j^2 + v_j^2 + 2(k-1) u_j v_j
BigInt squaring_weight(const std::vector<BigInt>& u, const std::vector<BigInt>& v, int k);

/// Node-weight target-t k-Clique to edge-weight zero k-Clique, one graph per
/// feasible carry tuple. Node weights must be nonnegative; M is their maximum.
ReducedCollection<WeightedGraph> nodeweight_to_edgeweight(const WeightedGraph& g, const BigInt& p,
                                                          int d);

/// Number of alpha tuples: C integers in [-M, M] summing to zero.
BigInt alpha_tuple_count(std::size_t pairs, const BigInt& bound);

/// Slot pairs (i, j), 1 <= i < j <= k, in the order (1,2), (1,3), ..., (k-1,k).
std::vector<std::pair<int, int>> slot_pairs(int k);

/// The weight-removal family {G_alpha}. It is kept lazy because |A| grows like
/// (2M+1)^(C(k,2)-1); items are built on demand.
///
/// G_alpha has vertex (v, i) at index (i-1)*n + v with slot label i. For an edge
/// {u, v} with u < v and slots i < j, (u, i) -- (v, j) is present iff w(u, v) = alpha_ij.
/// A k-clique in G_alpha then takes strictly increasing vertices across slots, so
/// it is a k-clique of the source with those pair weights.
class AlphaFamily {
public:
    using Alpha = std::vector<std::int64_t>;
    using Visitor = std::function<bool(const Alpha&)>;  // return false to stop

    AlphaFamily(WeightedGraph source, BigInt bound);

    int k() const { return source_.k(); }
    const WeightedGraph& source() const { return source_; }
    const BigInt& bound() const { return bound_; }
    std::size_t pair_count() const { return pairs_.size(); }

    // |A|.
    BigInt size() const;

    /// Every alpha in lexicographic order: the first C-1 entries run over
    /// [-M, M], the last is forced to minus their sum and range-checked.
    void for_each_alpha(const Visitor& fn) const;

    /// The subsequence of alphas whose every entry is a weight present in the
    /// graph. Any other G_alpha has an empty slot pair and hence no k-clique (k >= 2).
    void for_each_supported_alpha(const Visitor& fn) const;

    // True if every entry of alpha occurs as an edge weight.
    bool supported(const Alpha& alpha) const;

    CliqueInstance instance(const Alpha& alpha) const;

    /// Strips slot labels. Throws MalformedWitness if w is not a k-clique of G_alpha.
    Witness lift(const Alpha& alpha, const Witness& w) const;

    /// All of A as an explicit collection; ResourceError past max_items.
    ReducedCollection<CliqueInstance> materialize(std::size_t max_items) const;

private:
    WeightedGraph source_;
    BigInt bound_;
    std::int64_t m_;  // bound_ as int64
    std::vector<std::pair<int, int>> pairs_;
    std::map<std::int64_t, std::vector<Edge>> by_weight_;
    std::vector<std::int64_t> weights_;  // sorted distinct
};

/// Disjoint union of clique instances.
struct MergedClique {
    CliqueInstance instance;
    // Per component: component index, vertex_offset and the item's own provenance.
    std::vector<Provenance> components;
    std::vector<std::size_t> sizes;

    /// Component containing every witness vertex, and the witness renumbered into it.
    std::pair<std::size_t, Witness> locate(const Witness& w) const;
};

MergedClique merge_clique_instances(const ReducedCollection<CliqueInstance>& coll,
                                    std::optional<int> k_if_empty = std::nullopt);

/// Parameter selection for the small-k-SUM pipeline.
struct PipelineParams {
    int f_exp = 0;
    int d = 1;
    BigInt p;
    BigInt max_value;        // M
    BigInt edge_bound;       // 2k^3 d p^2
    std::size_t s = 0;
    std::size_t s_feasible = 0;
    BigInt alpha_count;      // |A| per carry tuple
    BigInt instance_count;   // g(n, k) = s_feasible * |A|
};

// d = max(1, ceil(log2 n / log2 log2 n)), d = 1 below n = 4.
int pipeline_dimension(std::size_t n);
// Smallest p >= ceil(k 2^f log2 n), p > k, with p^d >= kM + 1.
BigInt pipeline_radix(std::size_t n, int k, int f_exp, const BigInt& max_value, int d);

/// k-SUM on [0, n^f] to one unweighted k-Clique instance: complete node-weighted
/// graph, then the squaring reduction, then weight removal, then a disjoint union.
class SmallKSumReduction {
public:
    SmallKSumReduction(const KSumInstance& inst, int f_exp);

    const KSumInstance& source() const { return source_; }
    const PipelineParams& params() const { return params_; }
    const WeightedGraph& node_graph() const { return node_graph_; }
    const ReducedCollection<WeightedGraph>& edge_stage() const { return edge_stage_; }
    const std::vector<AlphaFamily>& families() const { return families_; }

    // Total vertex count of the merged graph.
    BigInt merged_vertex_count() const;

    /// The merged graph; components in carry order, then alpha order.
    /// ResourceError when its vertex count exceeds the budget.
    MergedClique merge(std::size_t vertex_budget = 2'000'000) const;

    /// Components that can hold a k-clique, in merge order: (family index, alpha).
    void for_each_candidate(
        const std::function<bool(std::size_t, const AlphaFamily::Alpha&)>& fn) const;

    // Component clique to sorted source indices.
    Witness lift(std::size_t family, const AlphaFamily::Alpha& alpha, const Witness& w) const;
    Witness lift_merged(const MergedClique& merged, const Witness& w) const;

private:
    KSumInstance source_;
    PipelineParams params_;
    WeightedGraph node_graph_;
    ReducedCollection<WeightedGraph> edge_stage_;
    std::vector<AlphaFamily> families_;
};

}  // namespace ksumred
