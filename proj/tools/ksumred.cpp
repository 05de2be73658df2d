// ksumred: generate, reduce, solve and verify instances, and run seeded
// equivalence experiments.

#include "ksumred/backward.hpp"
#include "ksumred/errors.hpp"
#include "ksumred/experiment.hpp"
#include "ksumred/fieldapps.hpp"
#include "ksumred/forward.hpp"
#include "ksumred/generators.hpp"
#include "ksumred/modprime.hpp"
#include "ksumred/serialize.hpp"
#include "ksumred/solvers.hpp"
#include "ksumred/sumfree.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ksumred;
namespace fs = std::filesystem;

namespace {

constexpr int kExitSolvable = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

std::string read_input(const std::string& path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParameterError("cannot open '" + path + "'");
        ss << in.rdbuf();
    }
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParameterError("cannot write '" + path.string() + "'");
    out << text;
}

// Prints the artifact and, with --out, stores it under that directory.
void emit(const std::string& out_dir, const std::string& name, const std::string& text) {
    std::cout << text;
    if (!out_dir.empty()) write_file(fs::path(out_dir) / name, text);
}

bool looks_like_collection(const std::string& text) {
    const auto nl = text.find('\n');
    const auto first = text.substr(0, nl);
    try {
        const auto j = ordered_json::parse(first);
        return j.is_object() && j.contains("meta");
    } catch (const nlohmann::json::exception&) {
        return false;
    }
}

template <class T>
const T& as(const Instance& inst, const std::string& what) {
    if (const auto* p = std::get_if<T>(&inst)) return *p;
    throw ParameterError("expected a " + what + " instance, got " + instance_type(inst));
}

template <class T>
ReducedCollection<T> single(const std::string& reduction, const Instance& source, T inst,
                            ordered_json params = ordered_json::object()) {
    ReducedCollection<T> out;
    out.reduction = reduction;
    out.source_digest = content_digest(source);
    out.params = std::move(params);
    out.items.emplace_back(std::move(inst), Provenance{});
    return out;
}

std::string radices_note(const std::vector<BigInt>& r) {
    std::string s;
    for (const auto& x : r) s += (s.empty() ? "" : ",") + to_decimal(x);
    return s;
}

struct ReduceArgs {
    std::string input = "-";
    std::string from, to, via;
    int d = 2;
    int d_param = 100;
    std::uint64_t seed = 1;
    int f_exp = 0;
    std::size_t max_items = 100000;
    std::size_t vertex_budget = 2'000'000;
    bool supported_only = false;
    std::string sumfree = "behrend";
};

std::string default_route(const std::string& from, const std::string& to) {
    static const std::map<std::pair<std::string, std::string>, std::string> routes{
        {{"ksum", "ksum"}, "normalize_zero_target"},
        {{"ksum", "vectorsum"}, "ksum_to_vectorsum"},
        {{"vectorsum", "ksum"}, "vectorsum_to_ksum"},
        {{"ksum", "nodeweight"}, "ksum_to_nodeweight"},
        {{"nodeweight", "edgeweight"}, "nodeweight_to_edgeweight"},
        {{"edgeweight", "clique"}, "edgeweight_to_unweighted"},
        {{"ksum", "clique"}, "smallksum_to_kclique"},
        {{"clique", "vectorsum"}, "clique_to_vectorsum"},
        {{"clique", "ksum"}, "kclique_to_ksum"},
        {{"ksum", "targetsum"}, "ksum_to_targetsum"},
        {{"targetsum", "ksum"}, "targetsum_to_ksum"},
        {{"lindep", "vectorsum"}, "lindep_to_vectorsum"},
        {{"clique", "clique"}, "merge"},
    };
    auto it = routes.find({from, to});
    if (it == routes.end()) throw ParameterError("no reduction from " + from + " to " + to);
    return it->second;
}

std::string run_reduce(const ReduceArgs& a) {
    const std::string via = a.via.empty() ? default_route(a.from, a.to) : a.via;
    const std::string text = read_input(a.input);
    if (via == "merge") {
        const auto parsed = parse_collection(text);
        ReducedCollection<CliqueInstance> coll;
        coll.reduction = parsed.meta.value("reduction", "");
        coll.source_digest = parsed.meta.value("source_digest", "");
        for (const auto& [inst, prov] : parsed.items) coll.items.emplace_back(as<CliqueInstance>(inst, "clique"), prov);
        std::optional<int> k;
        if (parsed.meta.contains("params") && parsed.meta["params"].contains("k"))
            k = parsed.meta["params"]["k"].get<int>();
        auto merged = merge_clique_instances(coll, k);
        ReducedCollection<CliqueInstance> out;
        out.reduction = "merge";
        out.source_digest = coll.source_digest;
        out.params["components"] = merged.components.size();
        ordered_json comps = ordered_json::array();
        for (const auto& p : merged.components) comps.push_back(p.to_json());
        out.params["component_provenance"] = std::move(comps);
        out.items.emplace_back(std::move(merged.instance), Provenance{});
        return serialize_collection(out);
    }
    const Instance src = parse_instance(text);
    if (via == "normalize_zero_target")
        return serialize_collection(single(via, src, normalize_zero_target(as<KSumInstance>(src, "ksum"))));
    if (via == "ksum_to_vectorsum") {
        const auto& x = as<KSumInstance>(src, "ksum");
        return serialize_collection(ksum_to_vectorsum(x, smallest_radix(x.k(), x.range().hi, a.d), a.d));
    }
    if (via == "vectorsum_to_ksum")
        return serialize_collection(single(via, src, vectorsum_to_ksum(as<VectorSumInstance>(src, "vectorsum"))));
    if (via == "ksum_to_nodeweight")
        return serialize_collection(single(via, src, ksum_to_nodeweight(as<KSumInstance>(src, "ksum"))));
    if (via == "nodeweight_to_edgeweight") {
        const auto& g = as<WeightedGraph>(src, "node-weighted graph");
        BigInt M = 0;
        for (const auto& w : g.node_weights().value_or(std::vector<BigInt>{})) M = std::max(M, w);
        return serialize_collection(nodeweight_to_edgeweight(g, smallest_radix(g.k(), M, a.d), a.d));
    }
    if (via == "edgeweight_to_unweighted") {
        const auto& g = as<WeightedGraph>(src, "edge-weighted graph");
        const AlphaFamily fam(g, g.weight_bound());
        if (!a.supported_only) return serialize_collection(fam.materialize(a.max_items));
        ReducedCollection<CliqueInstance> out;
        out.reduction = via;
        out.source_digest = content_digest(src);
        out.params["k"] = g.k();
        out.params["bound"] = to_decimal(fam.bound());
        out.params["alpha_count"] = to_decimal(fam.size());
        fam.for_each_supported_alpha([&](const AlphaFamily::Alpha& al) {
            if (out.items.size() >= a.max_items) throw ResourceError("more supported alphas than --max-items");
            Provenance prov;
            prov.alpha = std::vector<BigInt>(al.begin(), al.end());
            out.items.emplace_back(fam.instance(al), std::move(prov));
            return true;
        });
        out.params["certified_empty"] = to_decimal(fam.size() - out.items.size());
        return serialize_collection(out);
    }
    if (via == "smallksum_to_kclique") {
        const auto& x = as<KSumInstance>(src, "ksum");
        int f = a.f_exp;
        if (f <= 0) {
            f = 1;
            while (x.size() >= 2 && ipow(BigInt(x.size()), static_cast<unsigned>(f)) < x.range().hi) ++f;
        }
        const SmallKSumReduction red(x, f);
        auto merged = red.merge(a.vertex_budget);
        const auto& pp = red.params();
        ordered_json params;
        params["f_exp"] = pp.f_exp;
        params["d"] = pp.d;
        params["p"] = to_decimal(pp.p);
        params["M"] = to_decimal(pp.max_value);
        params["edge_bound"] = to_decimal(pp.edge_bound);
        params["s"] = pp.s;
        params["s_feasible"] = pp.s_feasible;
        params["alpha_count"] = to_decimal(pp.alpha_count);
        params["instance_count"] = to_decimal(pp.instance_count);
        params["components"] = merged.components.size();
        return serialize_collection(single(via, src, std::move(merged.instance), std::move(params)));
    }
    const SumFreeSource sf = a.sumfree == "greedy" ? SumFreeSource::Greedy : SumFreeSource::Behrend;
    if (via == "clique_to_vectorsum") {
        auto red = clique_to_vectorsum(as<CliqueInstance>(src, "clique"), sf);
        return serialize_collection(single(via, src, red.instance, encoding_to_json(red)));
    }
    if (via == "kclique_to_ksum" || via == "kclique_to_ksum_mixed") {
        const auto mode = via == "kclique_to_ksum" ? RadixMode::Uniform : RadixMode::Mixed;
        auto red = kclique_to_ksum(as<CliqueInstance>(src, "clique"), mode, sf);
        ordered_json params = encoding_to_json(red.vec);
        params["mode"] = mode == RadixMode::Uniform ? "uniform" : "mixed";
        params["radices"] = radices_note(red.radices);
        return serialize_collection(single(via, src, red.instance, std::move(params)));
    }
    if (via == "ksum_mod_reduce") return serialize_collection(ksum_mod_reduce(as<KSumInstance>(src, "ksum"), a.d_param, a.seed));
    if (via == "ksum_to_targetsum")
        return serialize_collection(single(via, src, ksum_to_targetsum(as<KSumInstance>(src, "ksum"))));
    if (via == "targetsum_to_ksum") return serialize_collection(targetsum_to_ksum(as<TargetSumInstance>(src, "targetsum")));
    if (via == "lindep_to_vectorsum") return serialize_collection(lindep_to_vectorsum(as<LinDepInstance>(src, "lindep")));
    throw ParameterError("unknown reduction '" + via + "'");
}

// Solves an instance, or every item of a collection (answer = OR over items).
int run_solve(const std::string& input, const std::string& solver, bool timing, const std::string& out_dir) {
    const std::string text = read_input(input);
    if (!looks_like_collection(text)) {
        const auto rep = solve(parse_instance(text), solver);
        emit(out_dir, "report.json", rep.to_json(timing).dump(2) + "\n");
        return rep.solvable ? kExitSolvable : kExitUnsolvable;
    }
    const auto coll = parse_collection(text);
    ordered_json j;
    j["solver"] = solver;
    j["items"] = coll.items.size();
    bool any = false;
    ordered_json first = nullptr;
    ordered_json per_item = ordered_json::array();
    for (std::size_t i = 0; i < coll.items.size(); ++i) {
        const auto rep = solve(coll.items[i].first, solver);
        per_item.push_back(rep.solvable ? "solvable" : "unsolvable");
        if (rep.solvable && !any) {
            any = true;
            first = {{"item", i}, {"witness", rep.witness.value_or(Witness{})}};
        }
    }
    j["answer"] = any ? "solvable" : "unsolvable";
    j["first_solvable"] = first;
    j["item_answers"] = std::move(per_item);
    emit(out_dir, "report.json", j.dump(2) + "\n");
    return any ? kExitSolvable : kExitUnsolvable;
}

Witness parse_witness_list(const std::string& s) {
    Witness w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size()) throw ParameterError("bad witness index '" + tok + "'");
        w.push_back(static_cast<std::size_t>(v));
    }
    return w;
}

int run_verify(const std::string& input, const std::string& witness, const std::string& report) {
    const Instance inst = parse_instance(read_input(input));
    Witness w;
    if (!report.empty()) {
        const auto j = ordered_json::parse(read_input(report));
        if (!j.contains("witness") || j["witness"].is_null()) throw ParameterError("report carries no witness");
        w = j["witness"].get<Witness>();
    } else {
        w = parse_witness_list(witness);
    }
    ordered_json out;
    out["type"] = instance_type(inst);
    out["witness"] = w;
    try {
        out["valid"] = verify_witness(inst, w);
    } catch (const MalformedWitness& e) {
        out["valid"] = false;
        out["reason"] = e.what();
    }
    std::cout << out.dump() << "\n";
    return out["valid"].get<bool>() ? kExitSolvable : kExitUnsolvable;
}

int run_experiment(const std::string& config, const std::string& replay, std::optional<std::uint64_t> seed,
                   int f_exp, unsigned threads, bool timing, const std::string& out_dir) {
    if (!replay.empty()) {
        const auto bundle = ordered_json::parse(read_input(replay));
        const auto tr = replay_bundle(bundle);
        ordered_json j;
        j["trial"] = tr.index;
        j["trial_seed"] = tr.seed;
        j["pass"] = tr.pass;
        j["reason"] = tr.failure;
        j["reproduced"] = tr.failure == bundle.value("reason", "");
        emit(out_dir, "replay.json", j.dump(2) + "\n");
        return tr.pass ? kExitSolvable : kExitMismatch;
    }
    auto cfg = ExperimentConfig::from_json(ordered_json::parse(read_input(config)));
    if (seed) cfg.seed = *seed;
    if (f_exp > 0) cfg.f_exp = f_exp;
    if (threads > 0) cfg.threads = threads;
    if (timing) cfg.timing = true;
    const auto report = run_equivalence_experiment(cfg);
    const std::string text = report.to_json().dump(2) + "\n";
    emit(out_dir, "report.json", text);
    if (!cfg.report.empty()) write_file(cfg.report, text);
    for (const auto& t : report.trials) {
        if (t.pass) continue;
        const std::string bundle = repro_bundle(cfg, t).dump(2) + "\n";
        std::cerr << "trial " << t.index << " (seed " << t.seed << ") failed: " << t.failure << "\n";
        if (!out_dir.empty()) write_file(fs::path(out_dir) / ("repro_" + std::to_string(t.index) + ".json"), bundle);
        else std::cerr << bundle;
    }
    return report.ok() ? kExitSolvable : kExitMismatch;
}

std::uint64_t seed_or_default(std::optional<std::uint64_t> s) { return s.value_or(1); }

struct GenArgs {
    std::string type = "ksum";
    std::size_t n = 8;
    int k = 3;
    std::string M = "100";
    bool plant = false;
    double p = 0.5;
    std::string weights = "none";
    std::size_t dim = 2;
    std::string q = "7";
    double eps = 0.5;
};

std::string run_gen(const GenArgs& g, std::uint64_t seed) {
    const BigInt M = parse_decimal(g.M);
    const Plant plant = g.plant ? Plant::Plant : Plant::None;
    if (g.type == "ksum") return serialize_instance(gen_random_ksum(g.n, g.k, M, plant, seed)) + "\n";
    if (g.type == "vectorsum")
        return serialize_instance(gen_random_vectorsum(g.n, g.k, g.dim, M, plant, seed)) + "\n";
    if (g.type == "graph") {
        WeightKind w = WeightKind::None;
        if (g.weights == "node") w = WeightKind::Node;
        else if (g.weights == "edge") w = WeightKind::Edge;
        else if (g.weights != "none") throw ParameterError("--weights must be none, node or edge");
        return serialize_instance(gen_random_graph(g.n, g.p, g.k, g.plant, w, M, seed)) + "\n";
    }
    if (g.type == "targetsum")
        return serialize_instance(gen_random_targetsum(g.n, g.k, parse_decimal(g.q), plant, seed)) + "\n";
    if (g.type == "lindep") {
        const BigInt q = parse_decimal(g.q);
        if (!is_prime(q) || q > BigInt(1) << 31) throw ParameterError("--q must be a prime below 2^31");
        return serialize_instance(gen_random_lindep(g.n, g.dim, g.k, q.convert_to<std::int64_t>(), seed)) + "\n";
    }
    if (g.type == "sumfree") return sumfree_to_json(behrend_sumfree(g.n, g.k, g.eps)).dump() + "\n";
    throw ParameterError("unknown instance type '" + g.type + "'");
}

// Subset-SUM as one edge-weight instance family per subset size k = 1..n. The
// digit dimension grows with n/f so that each size yields about 2^(n/f) graphs.
int run_subsetsum(const std::string& input, int f_exp, bool solve_items, const std::string& out_dir) {
    const auto src = as<KSumInstance>(parse_instance(read_input(input)), "ksum");
    const std::size_t n = src.size();
    const int f = f_exp > 0 ? f_exp : 2;
    BigInt lo = 0, hi = 0;
    for (const auto& x : src.numbers()) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    ordered_json summary;
    summary["n"] = n;
    summary["f_exp"] = f;
    ordered_json per_k = ordered_json::array();
    bool any = false;
    ordered_json found = nullptr;
    for (int k = 1; k <= static_cast<int>(n); ++k) {
        std::vector<BigInt> shifted;
        for (const auto& x : src.numbers()) shifted.push_back(x - lo);
        const BigInt t = src.target() - lo * k;
        const KSumInstance ks(k, shifted, t, Bounds{0, hi - lo});
        ordered_json row;
        row["k"] = k;
        if (k == 1) {
            row["instances"] = 0;
            row["note"] = "k = 1 scanned directly";
            if (solve_items) {
                const auto rep = solve_ksum_bruteforce(ks);
                row["solvable"] = rep.solvable;
                if (rep.solvable && !any) {
                    any = true;
                    found = {{"k", k}, {"witness", *rep.witness}};
                }
            }
            per_k.push_back(std::move(row));
            continue;
        }
        const double budget = static_cast<double>(n) / f / std::log2(static_cast<double>(k + 1));
        const int d = std::max(1, static_cast<int>(std::floor(budget)) + 1);
        const BigInt M = hi - lo;
        const auto coll = nodeweight_to_edgeweight(ksum_to_nodeweight(ks), smallest_radix(k, M, d), d);
        row["d"] = d;
        row["instances"] = coll.items.size();
        row["edge_bound"] = coll.params.value("edge_bound", "0");
        if (!out_dir.empty())
            write_file(fs::path(out_dir) / ("k" + std::to_string(k) + ".jsonl"), serialize_collection(coll));
        if (solve_items) {
            bool hit = false;
            for (const auto& [g, prov] : coll.items) {
                const auto rep = solve_kclique_bruteforce(g);
                if (!rep.solvable) continue;
                hit = true;
                if (!any) {
                    any = true;
                    found = {{"k", k}, {"witness", *rep.witness}};
                }
                break;
            }
            row["solvable"] = hit;
        }
        per_k.push_back(std::move(row));
    }
    summary["sizes"] = std::move(per_k);
    if (solve_items) {
        summary["answer"] = any ? "solvable" : "unsolvable";
        summary["witness"] = found;
    }
    emit(out_dir, "summary.json", summary.dump(2) + "\n");
    return !solve_items || any ? kExitSolvable : kExitUnsolvable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reductions between k-SUM, k-Vector-SUM and k-Clique variants"};
    app.require_subcommand(1);
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    int f_exp = 0;
    bool timing = false;
    app.add_option("--seed", seed, "64-bit seed")->check(CLI::NonNegativeNumber);
    app.add_option("--out", out_dir, "directory for output artifacts");
    app.add_option("--f-exponent", f_exp, "numbers are bounded by n^f")->check(CLI::PositiveNumber);
    app.add_flag("--timing", timing, "include wall-clock times in reports");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    gen_cmd->add_option("type", gen.type, "ksum, vectorsum, graph, targetsum, lindep or sumfree")
        ->check(CLI::IsMember({"ksum", "vectorsum", "graph", "targetsum", "lindep", "sumfree"}));
    gen_cmd->add_option("--n", gen.n, "element, vertex or vector count");
    gen_cmd->add_option("--k", gen.k, "arity");
    gen_cmd->add_option("--M", gen.M, "value bound");
    gen_cmd->add_flag("--plant", gen.plant, "plant a solution");
    gen_cmd->add_option("--p", gen.p, "edge probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--weights", gen.weights, "none, node or edge")
        ->check(CLI::IsMember({"none", "node", "edge"}));
    gen_cmd->add_option("--dim", gen.dim, "vector dimension");
    gen_cmd->add_option("--q", gen.q, "modulus");
    gen_cmd->add_option("--eps", gen.eps, "sum-free density exponent");

    ReduceArgs red;
    auto* red_cmd = app.add_subcommand("reduce", "apply one reduction; writes a JSON-lines collection");
    red_cmd->add_option("input", red.input, "instance file, - for stdin");
    red_cmd->add_option("--from", red.from, "ksum, vectorsum, nodeweight, edgeweight, clique, targetsum, lindep")
        ->required();
    red_cmd->add_option("--to", red.to, "target type")->required();
    red_cmd->add_option("--via", red.via, "reduction name (or merge)");
    red_cmd->add_option("--d", red.d, "digit dimension")->check(CLI::PositiveNumber);
    red_cmd->add_option("--d-param", red.d_param, "modular reduction confidence")->check(CLI::PositiveNumber);
    red_cmd->add_option("--max-items", red.max_items, "cap on emitted alpha instances");
    red_cmd->add_option("--vertex-budget", red.vertex_budget, "cap on merged graph vertices");
    red_cmd->add_flag("--supported-only", red.supported_only, "emit only alphas built from present weights");
    red_cmd->add_option("--sumfree", red.sumfree, "behrend or greedy")->check(CLI::IsMember({"behrend", "greedy"}));

    std::string solve_input = "-", solver = "auto";
    auto* solve_cmd = app.add_subcommand("solve", "decide an instance or every item of a collection");
    solve_cmd->add_option("input", solve_input, "instance or collection file, - for stdin");
    solve_cmd->add_option("--solver", solver, "solver name")->check(CLI::IsMember(solver_names()));

    std::string verify_input = "-", witness, report_file;
    auto* verify_cmd = app.add_subcommand("verify", "check a witness against an instance");
    verify_cmd->add_option("input", verify_input, "instance file, - for stdin");
    auto* wopt = verify_cmd->add_option("--witness", witness, "comma-separated indices");
    auto* ropt = verify_cmd->add_option("--report", report_file, "solver report holding the witness");
    wopt->excludes(ropt);

    std::string config, replay;
    unsigned threads = 0;
    auto* exp_cmd = app.add_subcommand("experiment", "run a seeded equivalence experiment");
    auto* copt = exp_cmd->add_option("--config", config, "experiment config JSON");
    auto* rpopt = exp_cmd->add_option("--replay", replay, "repro bundle to rerun");
    copt->excludes(rpopt);
    exp_cmd->add_option("--threads", threads, "worker threads");

    std::string ss_input = "-";
    bool ss_solve = false;
    auto* ss_cmd = app.add_subcommand("subsetsum-mode", "Subset-SUM as edge-weight clique families, k = 1..n");
    ss_cmd->add_option("input", ss_input, "ksum instance whose k is ignored");
    ss_cmd->add_flag("--solve", ss_solve, "decide every generated graph by brute force");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen_cmd) {
            emit(out_dir, "instance.json", run_gen(gen, seed_or_default(seed)));
            return kExitSolvable;
        }
        if (*red_cmd) {
            red.seed = seed_or_default(seed);
            red.f_exp = f_exp;
            emit(out_dir, "collection.jsonl", run_reduce(red));
            return kExitSolvable;
        }
        if (*solve_cmd) return run_solve(solve_input, solver, timing, out_dir);
        if (*verify_cmd) {
            if (witness.empty() && report_file.empty()) throw ParameterError("give --witness or --report");
            return run_verify(verify_input, witness, report_file);
        }
        if (*exp_cmd) {
            if (config.empty() && replay.empty()) throw ParameterError("give --config or --replay");
            return run_experiment(config, replay, seed, f_exp, threads, timing, out_dir);
        }
        if (*ss_cmd) return run_subsetsum(ss_input, f_exp, ss_solve, out_dir);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
