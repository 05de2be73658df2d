#pragma once

#include "ksumred/bigint.hpp"
#include "ksumred/collection.hpp"
#include "ksumred/instances.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ksumred {

struct SolverStats {
    BigInt instances_generated = 0;
    std::uint64_t candidates_examined = 0;
    std::uint64_t low_degree_pairs = 0;   // degree-split only
    std::uint64_t core_vertices = 0;      // degree-split only
    std::uint64_t max_generated_edges = 0;
    double wall_seconds = 0;
};

struct SolverReport {
    std::string solver;
    bool solvable = false;
    std::optional<Witness> witness;
    SolverStats stats;

    // Wall time is left out unless asked for, so reports stay byte-stable.
    ordered_json to_json(bool include_timing = false) const;
};

inline constexpr std::uint64_t kBruteBudget = 200'000'000;  // candidate sets
inline constexpr std::uint64_t kMimBudget = 30'000'000;     // half-table entries

/// k-subsets of [0, n) in lexicographic order; fn returns false to stop.
void for_each_combination(std::size_t n, int k,
                          const std::function<bool(const std::vector<std::size_t>&)>& fn);

/// Visits the k-cliques of g in lexicographic order (vertices ascending); fn
/// returns false to stop. Throws ResourceError after `budget` search nodes.
void for_each_kclique(const Graph& g, int k, const std::function<bool(const Witness&)>& fn,
                      std::uint64_t budget = kBruteBudget);

/// Lexicographically smallest witness. ResourceError if C(n,k) exceeds the budget.
SolverReport solve_ksum_bruteforce(const KSumInstance& inst, std::uint64_t budget = kBruteBudget);

/// Halves of sizes ceil(k/2) and floor(k/2); each left half pairs only with right
/// halves above its largest index, which keeps the answer the lexicographically smallest.
SolverReport solve_ksum_mim(const KSumInstance& inst, std::uint64_t budget = kMimBudget);

SolverReport solve_vectorsum_bruteforce(const VectorSumInstance& inst,
                                        std::uint64_t budget = kBruteBudget);

SolverReport solve_kclique_bruteforce(const CliqueInstance& inst, std::uint64_t budget = kBruteBudget);
// Honors the node-weight or edge-weight target.
SolverReport solve_kclique_bruteforce(const WeightedGraph& inst, std::uint64_t budget = kBruteBudget);

enum class TriangleBackend { NaiveMM, DegreeSplit };

struct TriangleOptions {
    TriangleBackend backend = TriangleBackend::DegreeSplit;
    std::optional<std::size_t> delta;  // degree threshold; default ceil(sqrt(m))
};

/// Boolean-square triangle detection, optionally after peeling low-degree
/// vertices. The witness is the lexicographically smallest triangle found by
/// the backend's scan order.
SolverReport detect_triangle(const Graph& g, const TriangleOptions& opt = {});

struct NodeWeightOptions {
    int d = 1;  // digit dimension for the squaring reduction
    TriangleOptions triangle;
};

/// Exact node-weight triangle through the squaring reduction and weight removal,
/// one triangle detection per candidate G_alpha.
SolverReport solve_nw_triangle(const WeightedGraph& g, const NodeWeightOptions& opt = {});

/// Same pipeline with brute-force clique search per G_alpha; k = 2 and k = 1 are
/// scanned directly.
SolverReport solve_nw_kclique(const WeightedGraph& g, const NodeWeightOptions& opt = {});

/// Dispatch by name: brute, mim, auto, triangle-naive, triangle-split, nw-triangle, nw-kclique.
SolverReport solve(const Instance& inst, const std::string& solver);
std::vector<std::string> solver_names();

}  // namespace ksumred
