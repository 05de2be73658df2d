#include "ksumred/experiment.hpp"

#include "ksumred/backward.hpp"
#include "ksumred/errors.hpp"
#include "ksumred/fieldapps.hpp"
#include "ksumred/forward.hpp"
#include "ksumred/generators.hpp"
#include "ksumred/modprime.hpp"
#include "ksumred/rng.hpp"
#include "ksumred/serialize.hpp"
#include "ksumred/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace ksumred {

namespace {

struct Candidate {
    Instance instance;
    std::function<Witness(const Witness&)> lift;
    bool expect_unsolvable = false;  // certification sample: must have no solution
};

using Sink = std::function<bool(Candidate&&)>;  // false: stop visiting

struct Stage {
    BigInt total = 0;
    bool lazy = false;          // items not visited are certified unsolvable
    bool exact_lift = true;     // solvable items always lift to source witnesses
    // Returns the number of items visited, certification samples excluded.
    std::function<std::size_t(const Sink&)> visit;
};

const std::map<std::string, std::string>& catalog() {
    static const std::map<std::string, std::string> table{
        {"normalize_zero_target", "ksum"},
        {"ksum_to_vectorsum", "ksum"},
        {"vectorsum_to_ksum", "vectorsum"},
        {"ksum_to_nodeweight", "ksum"},
        {"nodeweight_to_edgeweight", "nodegraph"},
        {"edgeweight_to_unweighted", "edgegraph"},
        {"smallksum_to_kclique", "ksum"},
        {"clique_to_vectorsum", "clique"},
        {"kclique_to_ksum", "clique"},
        {"kclique_to_ksum_mixed", "clique"},
        {"ksum_mod_reduce", "ksum"},
        {"ksum_to_targetsum", "ksum"},
        {"targetsum_to_ksum", "targetsum"},
        {"lindep_to_vectorsum", "lindep"},
    };
    return table;
}

const std::vector<std::string>& source_kinds() {
    static const std::vector<std::string> kinds{"ksum",   "vectorsum", "nodegraph", "edgegraph",
                                                "clique", "targetsum", "lindep"};
    return kinds;
}

template <class T>
const T& expect(const Instance& in, const std::string& stage) {
    if (const auto* p = std::get_if<T>(&in)) return *p;
    throw ParameterError(stage + " cannot consume a " + instance_type(in) + " instance");
}

Witness sorted_copy(const Witness& w) {
    Witness s = w;
    std::sort(s.begin(), s.end());
    return s;
}

template <class T>
Stage from_collection(ReducedCollection<T> coll, bool exact = true) {
    Stage st;
    st.total = coll.items.size();
    st.exact_lift = exact;
    auto shared = std::make_shared<ReducedCollection<T>>(std::move(coll));
    st.visit = [shared](const Sink& sink) {
        std::size_t visited = 0;
        for (const auto& [inst, prov] : shared->items) {
            ++visited;
            if (!sink({Instance(inst), sorted_copy})) break;
        }
        return visited;
    };
    return st;
}

Stage single(Instance inst, std::function<Witness(const Witness&)> lift) {
    Stage st;
    st.total = 1;
    auto shared = std::make_shared<Instance>(std::move(inst));
    st.visit = [shared, lift](const Sink& sink) {
        sink({*shared, lift});
        return std::size_t{1};
    };
    return st;
}

// Random alpha outside the supported set, if one turns up within a few draws.
std::optional<AlphaFamily::Alpha> unsupported_alpha(const AlphaFamily& fam, Rng& rng) {
    const std::size_t C = fam.pair_count();
    if (C == 0) return std::nullopt;
    const BigInt& M = fam.bound();
    for (int attempt = 0; attempt < 64; ++attempt) {
        AlphaFamily::Alpha a(C);
        std::int64_t sum = 0;
        for (std::size_t i = 0; i + 1 < C; ++i) {
            a[i] = uniform_in(-M, M, rng).convert_to<std::int64_t>();
            sum += a[i];
        }
        a[C - 1] = -sum;
        if (BigInt(a[C - 1]) > M || BigInt(a[C - 1]) < -M) continue;
        if (!fam.supported(a)) return a;
    }
    return std::nullopt;
}

// Candidates of one alpha family: everything when small, else the supported
// alphas plus a few unsupported ones that must come out unsolvable.
std::size_t visit_family(const AlphaFamily& fam, bool full, std::size_t samples, Rng& rng,
                         const std::function<Witness(const AlphaFamily::Alpha&, const Witness&)>& lift,
                         const Sink& sink) {
    std::size_t visited = 0;
    bool more = true;
    auto emit = [&](const AlphaFamily::Alpha& a, bool certify) {
        return sink({Instance(fam.instance(a)), [lift, a](const Witness& w) { return lift(a, w); }, certify});
    };
    if (full) {
        fam.for_each_alpha([&](const AlphaFamily::Alpha& a) {
            ++visited;
            return more = emit(a, false);
        });
        return visited;
    }
    fam.for_each_supported_alpha([&](const AlphaFamily::Alpha& a) {
        ++visited;
        return more = emit(a, false);
    });
    for (std::size_t s = 0; s < samples && more; ++s)
        if (auto a = unsupported_alpha(fam, rng)) more = emit(*a, true);
    return visited;
}

int default_f_exp(std::size_t n, const BigInt& M) {
    if (n < 2) return 1;
    int f = 1;
    while (ipow(BigInt(n), static_cast<unsigned>(f)) < M) ++f;
    return f;
}

Stage apply_stage(const std::string& name, const Instance& in, const ExperimentConfig& cfg, Rng& rng) {
    if (name == "normalize_zero_target")
        return single(Instance(normalize_zero_target(expect<KSumInstance>(in, name))), sorted_copy);
    if (name == "ksum_to_vectorsum") {
        const auto& x = expect<KSumInstance>(in, name);
        const BigInt p = smallest_radix(x.k(), x.range().hi, cfg.d);
        return from_collection(ksum_to_vectorsum(x, p, cfg.d));
    }
    if (name == "vectorsum_to_ksum")
        return single(Instance(vectorsum_to_ksum(expect<VectorSumInstance>(in, name))), sorted_copy);
    if (name == "ksum_to_nodeweight")
        return single(Instance(ksum_to_nodeweight(expect<KSumInstance>(in, name))), sorted_copy);
    if (name == "nodeweight_to_edgeweight") {
        const auto& g = expect<WeightedGraph>(in, name);
        BigInt M = 0;
        for (const auto& w : g.node_weights().value_or(std::vector<BigInt>{})) M = std::max(M, w);
        return from_collection(nodeweight_to_edgeweight(g, smallest_radix(g.k(), M, cfg.d), cfg.d));
    }
    if (name == "edgeweight_to_unweighted") {
        const auto& g = expect<WeightedGraph>(in, name);
        auto fam = std::make_shared<AlphaFamily>(g, g.weight_bound());
        Stage st;
        st.total = fam->size();
        const bool full = st.total <= cfg.full_alpha_budget;
        st.lazy = !full;
        Rng* r = &rng;
        const std::size_t samples = cfg.certify_samples;
        st.visit = [fam, full, samples, r](const Sink& sink) {
            return visit_family(*fam, full, samples, *r,
                                [fam](const AlphaFamily::Alpha& a, const Witness& w) { return fam->lift(a, w); },
                                sink);
        };
        return st;
    }
    if (name == "smallksum_to_kclique") {
        const auto& x = expect<KSumInstance>(in, name);
        const int f = cfg.f_exp > 0 ? cfg.f_exp : default_f_exp(x.size(), x.range().hi);
        auto red = std::make_shared<SmallKSumReduction>(x, f);
        Stage st;
        st.total = red->params().instance_count;
        if (red->merged_vertex_count() <= cfg.merge_vertex_budget) {
            auto merged = std::make_shared<MergedClique>(red->merge(cfg.merge_vertex_budget));
            st.visit = [red, merged](const Sink& sink) {
                sink({Instance(merged->instance),
                      [red, merged](const Witness& w) { return red->lift_merged(*merged, w); }});
                return std::size_t{1};
            };
            st.total = 1;
            return st;
        }
        st.lazy = true;
        Rng* r = &rng;
        const std::size_t samples = cfg.certify_samples;
        st.visit = [red, samples, r](const Sink& sink) {
            std::size_t visited = 0;
            bool more = true;
            const Sink guarded = [&](Candidate&& c) { return more = sink(std::move(c)); };
            for (std::size_t f = 0; f < red->families().size() && more; ++f)
                visited += visit_family(
                    red->families()[f], false, samples, *r,
                    [red, f](const AlphaFamily::Alpha& a, const Witness& w) { return red->lift(f, a, w); }, guarded);
            return visited;
        };
        return st;
    }
    if (name == "clique_to_vectorsum") {
        auto red = std::make_shared<CliqueToVectorSum>(clique_to_vectorsum(expect<CliqueInstance>(in, name)));
        return single(Instance(red->instance),
                      [red](const Witness& w) { return sorted_copy(lift_vectorsum_witness_to_clique(*red, w)); });
    }
    if (name == "kclique_to_ksum" || name == "kclique_to_ksum_mixed") {
        const auto mode = name == "kclique_to_ksum" ? RadixMode::Uniform : RadixMode::Mixed;
        auto red = std::make_shared<CliqueToKSum>(kclique_to_ksum(expect<CliqueInstance>(in, name), mode));
        return single(Instance(red->instance),
                      [red](const Witness& w) { return sorted_copy(lift_ksum_witness_to_clique(*red, w)); });
    }
    if (name == "ksum_mod_reduce") {
        const auto& x = expect<KSumInstance>(in, name);
        return from_collection(ksum_mod_reduce(x, cfg.d_param, rng()), false);
    }
    if (name == "ksum_to_targetsum")
        return single(Instance(ksum_to_targetsum(expect<KSumInstance>(in, name))), sorted_copy);
    if (name == "targetsum_to_ksum") return from_collection(targetsum_to_ksum(expect<TargetSumInstance>(in, name)));
    if (name == "lindep_to_vectorsum") {
        const auto& x = expect<LinDepInstance>(in, name);
        auto src = std::make_shared<LinDepInstance>(x);
        auto coll = std::make_shared<ReducedCollection<VectorSumInstance>>(lindep_to_vectorsum(x));
        Stage st;
        st.total = coll->items.size();
        st.visit = [src, coll](const Sink& sink) {
            std::size_t visited = 0;
            for (const auto& [inst, prov] : coll->items) {
                ++visited;
                if (!sink({Instance(inst), [src](const Witness& w) { return lift_lindep_witness(*src, w).indices; }}))
                    break;
            }
            return visited;
        };
        return st;
    }
    throw ParameterError("unknown reduction '" + name + "'");
}

BigInt magnitude(const Instance& inst) {
    BigInt m = 0;
    auto take = [&](const BigInt& x) { m = std::max(m, BigInt(abs(x))); };
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, KSumInstance>) {
                for (const auto& v : x.numbers()) take(v);
                take(x.target());
            } else if constexpr (std::is_same_v<T, VectorSumInstance>) {
                for (const auto& v : x.vectors())
                    for (const auto& e : v) take(e);
                for (const auto& e : x.target()) take(e);
            } else if constexpr (std::is_same_v<T, WeightedGraph>) {
                take(x.weight_bound());
                take(x.target());
            } else if constexpr (std::is_same_v<T, TargetSumInstance>) {
                take(x.q());
            } else if constexpr (std::is_same_v<T, LinDepInstance>) {
                take(BigInt(x.q()));
            }
        },
        inst);
    return m;
}

struct Eval {
    bool solvable = false;
    std::optional<Witness> witness;
};

Eval evaluate(const Instance& inst, std::size_t level, const ExperimentConfig& cfg, TrialResult& tr, Rng& rng) {
    tr.max_magnitude = std::max(tr.max_magnitude, magnitude(inst));
    if (level == cfg.chain.size()) {
        const auto rep = solve(inst, cfg.oracle);
        if (rep.solvable != rep.witness.has_value() || (rep.witness && !verify_witness(inst, *rep.witness)))
            throw Error("oracle returned an unverifiable witness");
        return {rep.solvable, rep.witness};
    }
    const bool last = level + 1 == cfg.chain.size();
    Stage st = apply_stage(cfg.chain[level], inst, cfg, rng);
    tr.instance_count = std::max(tr.instance_count, st.total);
    Eval out;
    bool stopped = false;
    const std::size_t visited = st.visit([&](Candidate&& c) {
        const Eval sub = evaluate(c.instance, level + 1, cfg, tr, rng);
        if (c.expect_unsolvable) {
            if (sub.solvable && tr.failure.empty()) tr.failure = "an item certified unsolvable has a solution";
            return true;
        }
        if (last) ++tr.solved_items;
        if (!sub.solvable) return true;
        out.solvable = true;
        if (!sub.witness) return true;
        bool ok = false;
        Witness w;
        try {
            w = c.lift(*sub.witness);
            ok = verify_witness(inst, w);
        } catch (const Error&) {
            ok = false;
        }
        if (ok) {
            ++tr.lifts;
            if (!out.witness) out.witness = w;
        } else if (st.exact_lift) {
            ++tr.lift_failures;
        }
        stopped = cfg.stop_at_witness && out.witness.has_value();
        return !stopped;
    });
    if (last) {
        tr.items += st.total;
        if (stopped)
            tr.unvisited += st.total - visited;
        else if (st.lazy)
            tr.certified_empty += st.total - visited;
    }
    return out;
}

Instance generate_source(const std::string& kind, const ExperimentConfig& cfg, Rng& rng) {
    std::size_t n = uniform_in(BigInt(cfg.n_min), BigInt(cfg.n_max), rng).convert_to<std::size_t>();
    const int k_hi = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(cfg.k_max),
                                                            std::max<std::size_t>(n, cfg.k_min)));
    const int k = uniform_in(cfg.k_min, k_hi, rng).convert_to<int>();
    const BigInt M = uniform_in(cfg.M_min, cfg.M_max, rng);
    const bool plant = bernoulli(0.5, rng);
    const std::uint64_t seed = rng();
    const Plant pl = plant ? Plant::Plant : Plant::None;
    if (kind == "ksum") return gen_random_ksum(std::max<std::size_t>(n, k), k, M, pl, seed);
    if (kind == "vectorsum") {
        const auto dim = uniform_in(BigInt(cfg.dim_min), BigInt(cfg.dim_max), rng).convert_to<std::size_t>();
        return gen_random_vectorsum(std::max<std::size_t>(n, k), k, dim, M, pl, seed);
    }
    if (kind == "nodegraph") return gen_random_graph(n, cfg.edge_prob, k, plant && n >= std::size_t(k), WeightKind::Node, M, seed);
    if (kind == "edgegraph") return gen_random_graph(n, cfg.edge_prob, k, plant && n >= std::size_t(k), WeightKind::Edge, M, seed);
    if (kind == "clique") return gen_random_graph(n, cfg.edge_prob, k, plant && n >= std::size_t(k), WeightKind::None, M, seed);
    if (kind == "targetsum") {
        const BigInt q = std::max(BigInt(2), M);
        return gen_random_targetsum(n, k, q, pl, seed);
    }
    if (kind == "lindep") {
        if (cfg.primes.empty()) throw ParameterError("no LinDependence moduli configured");
        const auto dim = uniform_in(BigInt(cfg.dim_min), BigInt(cfg.dim_max), rng).convert_to<std::size_t>();
        const auto qi = uniform_below(BigInt(cfg.primes.size()), rng).convert_to<std::size_t>();
        return gen_random_lindep(n, dim, k, cfg.primes[qi], seed);
    }
    throw ParameterError("unknown source kind '" + kind + "'");
}

bool chain_is_exact(const ExperimentConfig& cfg) {
    return std::find(cfg.chain.begin(), cfg.chain.end(), "ksum_mod_reduce") == cfg.chain.end();
}

std::pair<std::size_t, std::size_t> read_size_range(const ordered_json& v) {
    if (v.is_array() && v.size() == 2) return {v[0].get<std::size_t>(), v[1].get<std::size_t>()};
    const auto x = v.get<std::size_t>();
    return {x, x};
}

BigInt read_big(const ordered_json& v) {
    if (v.is_string()) return parse_decimal(v.get<std::string>());
    return BigInt(v.get<std::int64_t>());
}

}  // namespace

std::vector<std::string> reduction_catalog() {
    std::vector<std::string> out;
    for (const auto& [name, kind] : catalog()) out.push_back(name);
    return out;
}

std::string stage_input_kind(const std::string& stage) {
    auto it = catalog().find(stage);
    if (it == catalog().end()) throw ParameterError("unknown reduction '" + stage + "'");
    return it->second;
}

ExperimentConfig ExperimentConfig::from_json(const ordered_json& j) {
    if (!j.is_object()) throw ValidationError("experiment config must be a JSON object");
    ExperimentConfig c;
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "trials") {
                c.trials = v.get<std::size_t>();
            } else if (key == "seed") {
                c.seed = v.is_string() ? std::stoull(v.get<std::string>()) : v.get<std::uint64_t>();
            } else if (key == "chain") {
                c.chain = v.get<std::vector<std::string>>();
            } else if (key == "source") {
                c.source = v.get<std::string>();
            } else if (key == "oracle") {
                c.oracle = v.get<std::string>();
            } else if (key == "n") {
                std::tie(c.n_min, c.n_max) = read_size_range(v);
            } else if (key == "k") {
                const auto [lo, hi] = read_size_range(v);
                c.k_min = static_cast<int>(lo);
                c.k_max = static_cast<int>(hi);
            } else if (key == "M") {
                if (v.is_array() && v.size() == 2) {
                    c.M_min = read_big(v[0]);
                    c.M_max = read_big(v[1]);
                } else {
                    c.M_min = c.M_max = read_big(v);
                }
            } else if (key == "dim") {
                std::tie(c.dim_min, c.dim_max) = read_size_range(v);
            } else if (key == "primes") {
                c.primes = v.get<std::vector<std::int64_t>>();
            } else if (key == "edge_prob") {
                c.edge_prob = v.get<double>();
            } else if (key == "f_exp") {
                c.f_exp = v.get<int>();
            } else if (key == "d") {
                c.d = v.get<int>();
            } else if (key == "d_param") {
                c.d_param = v.get<int>();
            } else if (key == "allow_false_positives") {
                c.allow_false_positives = v.get<bool>();
            } else if (key == "full_alpha_budget") {
                c.full_alpha_budget = v.get<std::size_t>();
            } else if (key == "certify_samples") {
                c.certify_samples = v.get<std::size_t>();
            } else if (key == "merge_vertex_budget") {
                c.merge_vertex_budget = v.get<std::size_t>();
            } else if (key == "stop_at_witness") {
                c.stop_at_witness = v.get<bool>();
            } else if (key == "threads") {
                c.threads = v.get<unsigned>();
            } else if (key == "timing") {
                c.timing = v.get<bool>();
            } else if (key == "report") {
                c.report = v.get<std::string>();
            } else {
                throw ValidationError("unknown experiment config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad experiment config value: ") + e.what());
    }
    if (c.trials < 1) throw ValidationError("trials must be at least 1");
    if (c.n_min > c.n_max || c.k_min > c.k_max || c.M_min > c.M_max || c.dim_min > c.dim_max)
        throw ValidationError("range with min > max");
    if (c.k_min < 1) throw ValidationError("k must be at least 1");
    if (c.M_min < 0) throw ValidationError("M must be nonnegative");
    if (c.dim_min < 1) throw ValidationError("dim must be at least 1");
    if (c.threads < 1) throw ValidationError("threads must be at least 1");
    for (const auto& s : c.chain) stage_input_kind(s);
    if (!c.source.empty() &&
        std::find(source_kinds().begin(), source_kinds().end(), c.source) == source_kinds().end())
        throw ValidationError("unknown source kind '" + c.source + "'");
    const auto names = solver_names();
    if (std::find(names.begin(), names.end(), c.oracle) == names.end())
        throw ValidationError("unknown oracle '" + c.oracle + "'");
    return c;
}

ordered_json ExperimentConfig::to_json() const {
    ordered_json j;
    j["trials"] = trials;
    j["seed"] = seed;
    j["chain"] = chain;
    j["source"] = source;
    j["oracle"] = oracle;
    j["n"] = {n_min, n_max};
    j["k"] = {k_min, k_max};
    j["M"] = {to_decimal(M_min), to_decimal(M_max)};
    j["dim"] = {dim_min, dim_max};
    j["primes"] = primes;
    j["edge_prob"] = edge_prob;
    j["f_exp"] = f_exp;
    j["d"] = d;
    j["d_param"] = d_param;
    j["allow_false_positives"] = allow_false_positives;
    j["full_alpha_budget"] = full_alpha_budget;
    j["certify_samples"] = certify_samples;
    j["merge_vertex_budget"] = merge_vertex_budget;
    j["stop_at_witness"] = stop_at_witness;
    j["threads"] = threads;
    j["timing"] = timing;
    j["report"] = report;
    return j;
}

TrialResult run_trial(const ExperimentConfig& cfg, std::size_t index) {
    TrialResult tr;
    tr.index = index;
    tr.seed = child_seed(cfg.seed, index);
    Rng rng(tr.seed);
    try {
        const std::string kind =
            !cfg.source.empty() ? cfg.source : cfg.chain.empty() ? "ksum" : stage_input_kind(cfg.chain.front());
        tr.source = generate_source(kind, cfg, rng);
        const auto rep = solve(*tr.source, cfg.oracle);
        if (rep.solvable != rep.witness.has_value() || (rep.witness && !verify_witness(*tr.source, *rep.witness)))
            throw Error("oracle returned an unverifiable witness");
        tr.source_solvable = rep.solvable;
        Rng stage_rng(child_seed(tr.seed, 1));
        const Eval e = evaluate(*tr.source, 0, cfg, tr, stage_rng);
        tr.reduced_solvable = e.solvable;
        if (tr.source_solvable != tr.reduced_solvable) {
            if (!tr.source_solvable && cfg.allow_false_positives)
                tr.false_positive = true;
            else if (tr.failure.empty())
                tr.failure = tr.source_solvable ? "source solvable but no reduced item is"
                                                : "source unsolvable but a reduced item is solvable";
        }
        if (tr.failure.empty() && tr.lift_failures > 0) tr.failure = "a lifted witness failed verification";
        if (tr.failure.empty() && tr.source_solvable && tr.reduced_solvable && chain_is_exact(cfg) && !e.witness)
            tr.failure = "no lifted witness verifies on the source";
    } catch (const std::exception& ex) {
        tr.failure = std::string("error: ") + ex.what();
    }
    tr.pass = tr.failure.empty();
    return tr;
}

ExperimentReport run_equivalence_experiment(const ExperimentConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentReport report;
    report.config = cfg;
    report.trials.resize(cfg.trials);
    if (cfg.threads <= 1) {
        for (std::size_t i = 0; i < cfg.trials; ++i) report.trials[i] = run_trial(cfg, i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < cfg.threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cfg.trials; i = next++) report.trials[i] = run_trial(cfg, i);
            });
        for (auto& th : pool) th.join();
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::size_t ExperimentReport::passed() const {
    return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const auto& t) { return t.pass; }));
}

std::size_t ExperimentReport::failed() const { return trials.size() - passed(); }

ordered_json ExperimentReport::to_json() const {
    ordered_json j;
    j["config"] = config.to_json();
    j["trials"] = trials.size();
    j["passed"] = passed();
    j["failed"] = failed();
    std::size_t solvable = 0, lifts = 0, lift_failures = 0, false_positives = 0, solved_items = 0;
    BigInt items_total = 0, items_min = -1, items_max = 0, certified = 0, unvisited = 0, g_max = 0, mag = 0;
    for (const auto& t : trials) {
        solvable += t.source_solvable;
        lifts += t.lifts;
        lift_failures += t.lift_failures;
        false_positives += t.false_positive;
        solved_items += t.solved_items;
        items_total += t.items;
        if (items_min < 0 || t.items < items_min) items_min = t.items;
        items_max = std::max(items_max, t.items);
        certified += t.certified_empty;
        unvisited += t.unvisited;
        g_max = std::max(g_max, t.instance_count);
        mag = std::max(mag, t.max_magnitude);
    }
    j["solvable_sources"] = solvable;
    j["lifted_witnesses"] = lifts;
    j["lift_failures"] = lift_failures;
    j["false_positives"] = false_positives;
    j["items"] = {{"total", to_decimal(items_total)},
                  {"min", to_decimal(std::max(items_min, BigInt(0)))},
                  {"max", to_decimal(items_max)},
                  {"solved", solved_items},
                  {"certified_empty", to_decimal(certified)},
                  {"unvisited", to_decimal(unvisited)}};
    j["max_instance_count"] = to_decimal(g_max);
    j["max_weight_magnitude"] = to_decimal(mag);
    ordered_json failures = ordered_json::array();
    for (const auto& t : trials)
        if (!t.pass) failures.push_back({{"trial", t.index}, {"seed", t.seed}, {"reason", t.failure}});
    j["failures"] = std::move(failures);
    if (config.timing) j["seconds"] = seconds;
    return j;
}

ordered_json repro_bundle(const ExperimentConfig& cfg, const TrialResult& trial) {
    ordered_json j;
    j["config"] = cfg.to_json();
    j["trial"] = trial.index;
    j["trial_seed"] = trial.seed;
    j["reason"] = trial.failure;
    j["source"] = trial.source ? instance_to_json(*trial.source) : ordered_json(nullptr);
    return j;
}

TrialResult replay_bundle(const ordered_json& bundle) {
    const auto cfg = ExperimentConfig::from_json(bundle.at("config"));
    auto tr = run_trial(cfg, bundle.at("trial").get<std::size_t>());
    if (tr.seed != bundle.at("trial_seed").get<std::uint64_t>())
        throw ValidationError("bundle trial seed does not match its config");
    if (!bundle.at("source").is_null() && tr.source && instance_from_json(bundle.at("source")) != *tr.source)
        throw ValidationError("replayed source differs from the bundled one");
    return tr;
}

}  // namespace ksumred
