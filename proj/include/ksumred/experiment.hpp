#pragma once

#include "ksumred/bigint.hpp"
#include "ksumred/collection.hpp"
#include "ksumred/instances.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ksumred {

struct ExperimentConfig {
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::vector<std::string> chain;
    std::string source;  // instance kind; empty means the first stage's input kind
    std::string oracle = "auto";
    std::size_t n_min = 4, n_max = 10;
    int k_min = 2, k_max = 3;
    BigInt M_min = 0, M_max = 50;
    std::size_t dim_min = 1, dim_max = 3;
    std::vector<std::int64_t> primes{2, 3, 5};  // LinDependence moduli
    double edge_prob = 0.5;
    int f_exp = 0;                 // 0: smallest f >= 1 with n^f >= M
    int d = 2;                     // digit dimension of the carry stages
    int d_param = 100;             // modular reduction confidence
    bool allow_false_positives = false;
    std::size_t full_alpha_budget = 2000;     // every alpha is solved when |A| is at most this
    std::size_t certify_samples = 4;          // unsupported alphas re-checked per family
    std::size_t merge_vertex_budget = 100000;
    // Stop visiting a collection once an item yields a verified source witness.
    // The OR is settled then; skipped items are counted as unvisited.
    bool stop_at_witness = false;
    unsigned threads = 1;
    bool timing = false;
    std::string report;

    static ExperimentConfig from_json(const ordered_json& j);
    ordered_json to_json() const;
};

// Registered stage names, in catalog order.
std::vector<std::string> reduction_catalog();
// Instance kind a stage consumes: ksum, vectorsum, nodegraph, edgegraph, clique, targetsum, lindep.
std::string stage_input_kind(const std::string& stage);

struct TrialResult {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::optional<Instance> source;
    bool source_solvable = false;
    bool reduced_solvable = false;
    bool pass = false;
    std::string failure;
    BigInt items = 0;             // items of the last stage, summed over the chain tree
    BigInt certified_empty = 0;   // items skipped as provably unsolvable
    BigInt unvisited = 0;         // items skipped after a witness settled the answer
    BigInt instance_count = 0;    // largest single collection size seen (g(n,k) for the pipeline)
    std::size_t solved_items = 0;
    std::size_t lifts = 0;
    std::size_t lift_failures = 0;
    bool false_positive = false;
    BigInt max_magnitude = 0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<TrialResult> trials;
    double seconds = 0;

    std::size_t passed() const;
    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
    ordered_json to_json() const;
};

TrialResult run_trial(const ExperimentConfig& cfg, std::size_t index);
ExperimentReport run_equivalence_experiment(const ExperimentConfig& cfg);

/// Everything needed to rerun one trial: config, trial index and seed, and the source.
ordered_json repro_bundle(const ExperimentConfig& cfg, const TrialResult& trial);
TrialResult replay_bundle(const ordered_json& bundle);

}  // namespace ksumred
