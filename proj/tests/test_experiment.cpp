#include "oracle.hpp"

#include "ksumred/errors.hpp"
#include "ksumred/experiment.hpp"
#include "ksumred/generators.hpp"
#include "ksumred/serialize.hpp"

#include <doctest.h>

using namespace ksumred;

namespace {

ExperimentConfig config(std::vector<std::string> chain, std::size_t trials) {
    ExperimentConfig c;
    c.chain = std::move(chain);
    c.trials = trials;
    c.seed = 2024;
    return c;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("gen_random_ksum") {
        const auto x = gen_random_ksum(4, 2, 10, Plant::Plant, 1);
        CHECK(oracle::ksum(x));
        const auto z = gen_random_ksum(4, 2, 0, Plant::None, 5);
        for (const auto& v : z.numbers()) CHECK(v == 0);
        CHECK(oracle::ksum(z) == (z.target() == 0));
        CHECK(serialize_instance(gen_random_ksum(9, 3, 1000, Plant::Plant, 77)) ==
              serialize_instance(gen_random_ksum(9, 3, 1000, Plant::Plant, 77)));
        CHECK_THROWS_AS(gen_random_ksum(1, 2, 10, Plant::None, 1), ParameterError);
    }

    TEST_CASE("gen_random_graph") {
        const auto planted = std::get<CliqueInstance>(gen_random_graph(6, 0.0, 3, true, WeightKind::None, 0, 3));
        CHECK(planted.graph().m() == 3);
        const auto tris = oracle::all_subsets_where(6, 3, [&](const oracle::Subset& s) {
            return oracle::is_clique(oracle::edge_set(planted.graph()), s);
        });
        CHECK(tris.size() == 1);
        const auto full = std::get<CliqueInstance>(gen_random_graph(6, 1.0, 3, false, WeightKind::None, 0, 3));
        CHECK(full.graph().m() == 15);
        CHECK(oracle::clique(full));
        CHECK(gen_random_graph(10, 0.4, 3, false, WeightKind::Edge, 9, 12) ==
              gen_random_graph(10, 0.4, 3, false, WeightKind::Edge, 9, 12));
        const auto nw = std::get<WeightedGraph>(gen_random_graph(8, 0.5, 3, true, WeightKind::Node, 9, 4));
        CHECK(oracle::weighted_clique(nw));
        const auto ew = std::get<WeightedGraph>(gen_random_graph(8, 0.5, 3, true, WeightKind::Edge, 9, 4));
        CHECK(oracle::weighted_clique(ew));
        CHECK(ew.weight_bound() <= 9);
        CHECK_THROWS_AS(gen_random_graph(4, 1.5, 2, false, WeightKind::None, 0, 1), ParameterError);
    }

    TEST_CASE("experiment: digit vectors") {
        auto c = config({"ksum_to_vectorsum"}, 100);
        c.n_min = 2;
        c.n_max = 10;
        const auto r = run_equivalence_experiment(c);
        CHECK(r.passed() == 100);
        for (const auto& t : r.trials)
            if (!t.pass) MESSAGE(t.failure);
    }

    TEST_CASE("experiment: empty chain") {
        const auto r = run_equivalence_experiment(config({}, 20));
        CHECK(r.passed() == 20);
    }

    TEST_CASE("experiment: clique to k-SUM through vectors") {
        auto c = config({"clique_to_vectorsum", "vectorsum_to_ksum"}, 100);
        c.n_min = 3;
        c.n_max = 6;
        c.k_min = 2;
        c.k_max = 3;
        const auto r = run_equivalence_experiment(c);
        CHECK(r.passed() == 100);
        std::size_t lifts = 0;
        for (const auto& t : r.trials) lifts += t.lifts;
        CHECK(lifts > 0);
    }

    TEST_CASE("report is deterministic and thread independent") {
        auto c = config({"ksum_to_nodeweight", "nodeweight_to_edgeweight"}, 12);
        c.n_max = 7;
        const auto a = run_equivalence_experiment(c).to_json().dump();
        const auto b = run_equivalence_experiment(c).to_json().dump();
        c.threads = 3;
        auto cj = run_equivalence_experiment(c).to_json();
        cj["config"]["threads"] = 1;
        CHECK(a == b);
        CHECK(a == cj.dump());
    }

    TEST_CASE("failures produce bundles that replay") {
        // A tiny prime range makes false positives frequent on unsolvable sources.
        auto c = config({"ksum_mod_reduce"}, 200);
        c.n_min = 3;
        c.n_max = 3;
        c.k_min = 2;
        c.k_max = 2;
        c.M_min = 1000000000;
        c.M_max = 1000000000;
        c.d_param = 1;
        const auto r = run_equivalence_experiment(c);
        REQUIRE(r.failed() > 0);
        for (const auto& t : r.trials) {
            if (t.pass) continue;
            const auto bundle = ordered_json::parse(repro_bundle(c, t).dump());
            const auto again = replay_bundle(bundle);
            CHECK_FALSE(again.pass);
            CHECK(again.failure == t.failure);
            CHECK(again.seed == t.seed);
        }
        c.allow_false_positives = true;
        const auto lenient = run_equivalence_experiment(c);
        CHECK(lenient.ok());
    }

    TEST_CASE("config validation") {
        CHECK_THROWS_AS(ExperimentConfig::from_json(ordered_json::parse(R"({"trials":0})")), ValidationError);
        CHECK_THROWS_AS(ExperimentConfig::from_json(ordered_json::parse(R"({"chain":["nope"]})")), Error);
        CHECK_THROWS_AS(ExperimentConfig::from_json(ordered_json::parse(R"({"colour":1})")), ValidationError);
        const auto c = ExperimentConfig::from_json(
            ordered_json::parse(R"({"trials":5,"seed":"18446744073709551615","n":[3,4],"M":["0","99"]})"));
        CHECK(c.seed == 18446744073709551615ull);
        CHECK(c.M_max == 99);
        CHECK(ExperimentConfig::from_json(c.to_json()).to_json() == c.to_json());
    }

    TEST_CASE("catalog") {
        const auto names = reduction_catalog();
        CHECK(names.size() == 14);
        for (const auto& n : names) CHECK_FALSE(stage_input_kind(n).empty());
    }
}
