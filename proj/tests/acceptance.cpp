// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracle.hpp"

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

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace ksumred;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail << "first failure: " << what << "; ";
        pass = false;
    }
};

// Shared by criterion 3: solvable trials of criteria 1 and 2 and how many lifted.
struct LiftTally {
    std::size_t solvable = 0;
    std::size_t lifted = 0;
};
LiftTally lift_tally;

std::size_t uniform_size(std::size_t lo, std::size_t hi, Rng& rng) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

// ---- criterion 1 ----

void forward_stages(Verdict& v) {
    struct Run {
        const char* label;
        std::vector<std::string> chain;
        std::string source;
        std::uint64_t seed;
    };
    const std::vector<Run> runs{
        {"digits", {"ksum_to_vectorsum"}, "", 101},
        {"squaring", {"nodeweight_to_edgeweight"}, "nodegraph", 102},
        {"alpha", {"edgeweight_to_unweighted"}, "edgegraph", 103},
        {"pipeline", {"smallksum_to_kclique"}, "", 104},
    };
    const auto start = Clock::now();
    for (const auto& r : runs) {
        ExperimentConfig c;
        c.trials = 1000;
        c.seed = r.seed;
        c.chain = r.chain;
        c.source = r.source;
        c.n_min = 6;
        c.n_max = 12;
        c.k_min = 2;
        c.k_max = 4;
        c.M_min = 0;
        c.M_max = 500;
        c.stop_at_witness = true;
        const auto t0 = Clock::now();
        const auto rep = run_equivalence_experiment(c);
        std::size_t solvable = 0, lifted = 0;
        for (const auto& t : rep.trials) {
            if (!t.source_solvable) continue;
            ++solvable;
            lifted += t.lifts > 0 && t.lift_failures == 0;
        }
        lift_tally.solvable += solvable;
        lift_tally.lifted += lifted;
        v.detail << r.label << " " << rep.passed() << "/" << rep.trials.size() << " (" << solvable
                 << " solvable, " << static_cast<int>(since(t0)) << "s); ";
        for (const auto& t : rep.trials)
            v.require(t.pass, std::string(r.label) + " trial " + std::to_string(t.index) + ": " + t.failure);
    }
    const double total = since(start);
    v.detail << "total " << static_cast<int>(total) << "s";
    v.require(total < 300, "runtime over 5 minutes");
}

// ---- criterion 2 ----

bool reduced_solvable(const CliqueToKSum& red, std::optional<Witness>& w) {
    const auto& x = red.instance;
    const SolverReport rep = binomial(static_cast<unsigned>(x.size()), static_cast<unsigned>(x.k())) <= 2'000'000
                                 ? solve_ksum_bruteforce(x)
                                 : solve_ksum_mim(x);
    w = rep.witness;
    return rep.solvable;
}

void check_backward(const CliqueInstance& g, Verdict& v, std::size_t& graphs, std::size_t& positives) {
    const bool truth = oracle::clique(g);
    ++graphs;
    positives += truth;
    for (auto mode : {RadixMode::Uniform, RadixMode::Mixed}) {
        const auto red = kclique_to_ksum(g, mode);
        std::optional<Witness> w;
        const bool got = reduced_solvable(red, w);
        v.require(got == truth, "mismatch on a graph with n = " + std::to_string(g.graph().n()));
        if (!truth) continue;
        ++lift_tally.solvable;
        if (!w) continue;
        try {
            const auto lifted = lift_ksum_witness_to_clique(red, *w);
            const bool ok = verify_witness(g, lifted);
            lift_tally.lifted += ok;
            v.require(ok, "lifted clique does not verify");
        } catch (const Error& e) {
            v.require(false, std::string("lift threw: ") + e.what());
        }
    }
}

void backward_chain(Verdict& v) {
    const auto start = Clock::now();
    std::size_t graphs = 0, positives = 0;
    for (int k = 2; k <= 3; ++k)
        for (std::size_t n = 1; n <= 5; ++n) {
            std::vector<Edge> all;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) all.push_back({a, b});
            for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
                std::vector<Edge> es;
                for (std::size_t e = 0; e < all.size(); ++e)
                    if (mask >> e & 1) es.push_back(all[e]);
                check_backward(CliqueInstance(k, Graph(n, es)), v, graphs, positives);
            }
        }
    const std::size_t exhaustive = graphs;
    Rng rng(202);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = uniform_size(3, 9, rng);
        const double p = 0.2 + 0.1 * static_cast<double>(rng() % 7);
        const auto g = std::get<CliqueInstance>(gen_random_graph(n, p, 3, rng() % 2, WeightKind::None, 0, rng()));
        check_backward(g, v, graphs, positives);
    }
    const double secs = since(start);
    v.detail << exhaustive << " exhaustive + " << graphs - exhaustive << " random graphs, " << positives
             << " with a clique, both radix modes, " << static_cast<int>(secs) << "s";
    v.require(secs < 600, "runtime over 10 minutes");
}

// ---- criterion 3 ----

void witness_lifting(Verdict& v) {
    v.detail << lift_tally.lifted << "/" << lift_tally.solvable << " solvable trials lifted and verified";
    v.require(lift_tally.solvable > 0, "no solvable trials");
    v.require(lift_tally.lifted == lift_tally.solvable, "some solvable trial has no verified lifted witness");
}

// ---- criteria 4 and 5 ----

BigInt own_edge_bound(int k, int d, const BigInt& p) { return BigInt(2) * k * k * k * d * p * p; }

void nonnegative_cliques(Verdict& v, Verdict& bounds) {
    Rng rng(404);
    std::size_t cliques = 0, hitting = 0, edges = 0;
    for (int i = 0; i < 200; ++i) {
        const int k = 2 + static_cast<int>(rng() % 3);
        const std::size_t n = uniform_size(static_cast<std::size_t>(k), 9, rng);
        const int d = 1 + static_cast<int>(rng() % 3);
        const BigInt M = static_cast<long long>(rng() % 201);
        const auto g = std::get<WeightedGraph>(gen_random_graph(n, 0.7, k, rng() % 2, WeightKind::Node, M, rng()));
        BigInt max_w = 0;
        for (const auto& w : *g.node_weights()) max_w = std::max(max_w, w);
        const BigInt p = smallest_radix(k, max_w, d);
        const auto coll = nodeweight_to_edgeweight(g, p, d);
        const BigInt bound = own_edge_bound(k, d, p);
        for (const auto& [h, prov] : coll.items)
            for (const auto& w : *h.edge_weights()) {
                ++edges;
                bounds.require(abs(w) <= bound, "squaring edge weight beyond 2k^3dp^2");
            }
        const auto es = oracle::edge_set(g.graph());
        oracle::any_subset(n, static_cast<std::size_t>(k), [&](const oracle::Subset& s) {
            if (!oracle::is_clique(es, s)) return false;
            ++cliques;
            BigInt node_sum = 0;
            for (auto x : s) node_sum += (*g.node_weights())[x];
            const bool hits = node_sum == g.target();
            hitting += hits;
            std::size_t zeros = 0;
            for (const auto& [h, prov] : coll.items) {
                const BigInt w = oracle::edge_weight_sum(h, s);
                v.require(w >= 0, "negative clique edge weight");
                zeros += w == 0;
            }
            v.require(hits ? zeros == 1 : zeros == 0, "zero-weight clique does not match the target");
            return false;
        });
    }
    v.detail << "200 graphs, " << cliques << " cliques checked in every output, " << hitting << " hit t";
    bounds.detail << edges << " squaring edge weights in bound; ";
}

// Tuples in [-M, M]^C summing to zero, by inclusion-exclusion on the shifted sum.
BigInt own_alpha_count(std::size_t C, const BigInt& M) {
    if (C == 0) return 1;
    const BigInt width = 2 * M + 1;
    const BigInt total = M * C;
    BigInt out = 0;
    for (std::size_t j = 0; j <= C; ++j) {
        const BigInt rest = total - width * j;
        if (rest < 0) break;
        BigInt term = binomial(static_cast<unsigned>(C), static_cast<unsigned>(j));
        // C(rest + C - 1, C - 1)
        BigInt ways = 1;
        for (std::size_t i = 1; i < C; ++i) ways = ways * (rest + i) / i;
        term *= ways;
        out += j % 2 ? -term : term;
    }
    return out;
}

// Carry guesses whose per-digit targets all land in [0, k(p-1)].
std::size_t own_feasible_carries(const BigInt& t, int k, const BigInt& p, int d) {
    std::vector<BigInt> a(d);
    BigInt rest = t;
    for (int j = 0; j < d; ++j) {
        a[j] = j + 1 == d ? rest : rest % p;
        rest /= p;
    }
    const BigInt hi = BigInt(k) * (p - 1);
    std::vector<int> c(static_cast<std::size_t>(std::max(d - 1, 0)), 0);
    std::size_t count = 0;
    for (;;) {
        bool ok = true;
        for (int j = 0; j < d && ok; ++j) {
            BigInt tj = a[j];
            if (j + 1 < d) tj += BigInt(c[j]) * p;
            if (j > 0) tj -= c[j - 1];
            ok = tj >= 0 && tj <= hi;
        }
        count += ok;
        std::size_t pos = 0;
        while (pos < c.size() && c[pos] == k) c[pos++] = 0;
        if (pos == c.size()) break;
        ++c[pos];
    }
    return count;
}

bool k_partite_layout(const CliqueInstance& x, int k, std::size_t n) {
    if (x.graph().n() != static_cast<std::size_t>(k) * n) return false;
    if (!x.partition()) return false;
    for (std::size_t u = 0; u < x.graph().n(); ++u)
        if ((*x.partition())[u] != static_cast<int>(u / n) + 1) return false;
    for (const auto& e : x.graph().edges())
        if (e.u / n == e.v / n) return false;
    return true;
}

void accounting(Verdict& v) {
    Rng rng(505);
    std::size_t pipelines = 0, merged = 0, layouts = 0, families = 0;
    for (int i = 0; i < 60; ++i) {
        const int k = 2 + static_cast<int>(rng() % 3);
        const std::size_t n = uniform_size(static_cast<std::size_t>(k), 8, rng);
        const BigInt M = static_cast<long long>(rng() % 60);
        const auto x = gen_random_ksum(n, k, M, rng() % 2 ? Plant::Plant : Plant::None, rng());
        int f = 1;
        while (ipow(BigInt(n), static_cast<unsigned>(f)) < M) ++f;
        const SmallKSumReduction red(x, f);
        const auto& pp = red.params();
        ++pipelines;
        const std::size_t C = static_cast<std::size_t>(k * (k - 1) / 2);
        const BigInt bound = own_edge_bound(k, pp.d, pp.p);
        v.require(pp.edge_bound == bound, "pipeline edge bound differs from 2k^3dp^2");
        for (const auto& [h, prov] : red.edge_stage().items)
            for (const auto& w : *h.edge_weights()) v.require(abs(w) <= bound, "pipeline edge weight beyond bound");
        // Targets past k times the largest number give an empty edge stage.
        const BigInt top = *std::max_element(x.numbers().begin(), x.numbers().end());
        const bool in_range = x.target() >= 0 && x.target() <= top * k;
        const std::size_t s_feasible = in_range ? own_feasible_carries(x.target(), k, pp.p, pp.d) : 0;
        const BigInt A = own_alpha_count(C, bound);
        v.require(pp.s_feasible == s_feasible, "feasible carry count differs");
        v.require(red.edge_stage().items.size() == s_feasible, "edge stage emits a wrong number of graphs");
        v.require(pp.alpha_count == A, "|A| differs from the tuple count");
        v.require(A <= ipow(2 * bound + 1, static_cast<unsigned>(C - 1)), "|A| beyond (2M'+1)^(C(k,2)-1)");
        v.require(pp.instance_count == A * s_feasible, "g(n,k) differs from s_feasible * |A|");
        v.require(red.families().size() == s_feasible, "family count differs");
        for (const auto& fam : red.families()) {
            ++families;
            v.require(fam.size() == A, "family size differs from |A|");
            std::size_t seen = 0;
            fam.for_each_supported_alpha([&](const AlphaFamily::Alpha& a) {
                ++layouts;
                v.require(k_partite_layout(fam.instance(a), k, n), "G_alpha is not k-partite on k*n vertices");
                return ++seen < 20;
            });
        }
        if (red.merged_vertex_count() <= 200'000) {
            const auto m = red.merge(200'000);
            ++merged;
            v.require(BigInt(m.components.size()) == pp.instance_count, "merged component count differs");
            v.require(BigInt(m.instance.graph().n()) == pp.instance_count * k * n, "merged vertex count differs");
        }
    }
    // Full enumeration where |A| is small.
    std::size_t enumerated = 0;
    for (int i = 0; i < 60; ++i) {
        const int k = 2 + static_cast<int>(rng() % 3);
        const std::size_t n = uniform_size(static_cast<std::size_t>(k), 7, rng);
        const BigInt b = static_cast<long long>(rng() % 4);
        const auto g = std::get<WeightedGraph>(gen_random_graph(n, 0.6, k, rng() % 2, WeightKind::Edge, b, rng()));
        const AlphaFamily fam(g, b);
        const std::size_t C = static_cast<std::size_t>(k * (k - 1) / 2);
        std::set<std::int64_t> present;
        for (const auto& w : *g.edge_weights()) present.insert(w.convert_to<std::int64_t>());
        std::size_t count = 0, supported = 0;
        fam.for_each_alpha([&](const AlphaFamily::Alpha& a) {
            ++count;
            std::int64_t sum = 0;
            bool sup = true;
            for (auto e : a) {
                sum += e;
                sup = sup && present.count(e);
                v.require(BigInt(e) <= b && BigInt(e) >= -b, "alpha entry outside [-M', M']");
            }
            v.require(sum == 0, "alpha does not sum to zero");
            supported += sup;
            v.require(k_partite_layout(fam.instance(a), k, n), "G_alpha is not k-partite on k*n vertices");
            return true;
        });
        std::size_t listed = 0;
        fam.for_each_supported_alpha([&](const AlphaFamily::Alpha&) { return ++listed, true; });
        enumerated += count;
        v.require(BigInt(count) == own_alpha_count(C, b), "enumerated alphas differ from the tuple count");
        v.require(BigInt(count) == fam.size(), "family size differs from its enumeration");
        v.require(listed == supported, "supported-alpha listing differs from a direct filter");
    }
    v.detail << pipelines << " pipelines (" << families << " families, " << merged << " merged), " << layouts
             << " G_alpha layouts, " << enumerated << " alphas enumerated";
}

// ---- criterion 6 ----

bool progression_free(const std::vector<BigInt>& s) {
    const std::set<BigInt> in(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const BigInt twice = s[i] + s[j];
            if (twice % 2 == 0 && in.count(twice / 2)) return false;
        }
    return true;
}

void sumfree_suite(Verdict& v) {
    std::size_t brute_counts = 0;
    for (std::size_t n = 1; n <= 200; ++n) {
        const auto s = behrend_sumfree(n, 3, 0.5);
        const auto& P = s.params;
        v.require(s.elements.size() == n, "wrong size at n = " + std::to_string(n));
        v.require(verify_sumfree(s.elements, 3), "verify_sumfree rejects n = " + std::to_string(n));
        v.require(progression_free(s.elements), "three-term progression at n = " + std::to_string(n));
        const BigInt top = ipow(BigInt(P.base), P.m);
        for (const auto& x : s.elements) {
            v.require(x >= 0 && x < top, "element not below base^m");
            BigInt rest = x;
            std::uint64_t norm = 0;
            for (unsigned j = 0; j < P.m; ++j) {
                const auto digit = (rest % P.base).convert_to<std::uint64_t>();
                rest /= P.base;
                v.require(digit < P.b, "digit not below b");
                norm += digit * digit;
            }
            v.require(norm == P.r, "element off the chosen norm");
        }
        const BigInt classes = BigInt(P.m) * (P.b - 1) * (P.b - 1) + 1;
        v.require(s.norm_class_size * classes >= ipow(BigInt(P.b), P.m), "pigeonhole floor fails");
        if (ipow(BigInt(P.b), P.m) <= 2'000'000) {
            ++brute_counts;
            std::vector<std::uint64_t> d(P.m, 0);
            BigInt count = 0;
            for (;;) {
                std::uint64_t norm = 0;
                for (auto x : d) norm += x * x;
                count += norm == P.r;
                std::size_t pos = 0;
                while (pos < d.size() && d[pos] == P.b - 1) d[pos++] = 0;
                if (pos == d.size()) break;
                ++d[pos];
            }
            v.require(count == s.norm_class_size, "norm class size differs from a direct count");
        }
    }
    v.detail << "n = 1..200 at k = 3; " << brute_counts << " norm classes recounted directly";
}

// ---- criterion 7 ----

void modprime_suite(Verdict& v) {
    Rng rng(707);
    std::size_t complete = 0;
    for (int i = 0; i < 200; ++i) {
        const int k = 1 + static_cast<int>(rng() % 4);
        const std::size_t n = uniform_size(std::max<std::size_t>(static_cast<std::size_t>(k), 2), 10, rng);
        const BigInt M = uniform_in(BigInt(1), BigInt(1000000000), rng);
        const auto x = gen_random_ksum(n, k, M, Plant::Plant, rng());
        const auto sols = oracle::ksum_solutions(x.numbers(), k, x.target());
        v.require(!sols.empty(), "planted source without a solution");
        if (sols.empty()) continue;
        const auto c = ksum_mod_reduce(x, i % 2 ? 100 : 1, rng());
        bool hit = false;
        for (const auto& [y, prov] : c.items) hit = hit || verify_witness(y, sols.front());
        complete += hit;
    }
    v.require(complete == 200, "a solvable source lost its solution");

    std::size_t false_pos = 0, sources = 0;
    for (std::uint64_t seed = 0; sources < 500; ++seed) {
        const auto x = gen_random_ksum(10, 3, 1000000000, Plant::None, child_seed(7070, seed));
        if (oracle::ksum(x)) continue;
        ++sources;
        const auto c = ksum_mod_reduce(x, 100, child_seed(7071, seed));
        bool any = false;
        for (const auto& [y, prov] : c.items) any = any || oracle::ksum(y);
        false_pos += any;
    }
    const double rate = static_cast<double>(false_pos) / static_cast<double>(sources);
    v.detail << "completeness " << complete << "/200; false positives " << false_pos << "/" << sources << " ("
             << rate * 100 << "%)";
    v.require(rate <= 0.05, "false-positive rate above 5%");
}

// ---- criterion 8 ----

void solver_suite(Verdict& v) {
    Rng rng(808);
    auto t0 = Clock::now();
    std::size_t agree = 0, yes = 0;
    for (int i = 0; i < 1000; ++i) {
        const int k = 1 + static_cast<int>(rng() % 5);
        const std::size_t n = uniform_size(static_cast<std::size_t>(k), 14, rng);
        const BigInt M = i % 10 == 0 ? ipow(BigInt(2), 70) : BigInt(static_cast<long long>(rng() % 60));
        const auto x = gen_random_ksum(n, k, M, rng() % 2 ? Plant::Plant : Plant::None, rng());
        const auto a = solve_ksum_bruteforce(x);
        const auto b = solve_ksum_mim(x);
        const bool same = a.solvable == b.solvable && a.witness == b.witness && a.solvable == oracle::ksum(x);
        agree += same;
        yes += a.solvable;
    }
    const double mim_s = since(t0);
    v.require(agree == 1000, "mim and brute disagree");
    v.require(mim_s < 120, "k-SUM suite over 2 minutes");

    t0 = Clock::now();
    std::size_t tri_agree = 0, tri_yes = 0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = uniform_size(3, 128, rng);
        const double p = std::array<double, 5>{0.01, 0.03, 0.06, 0.1, 0.3}[rng() % 5];
        const auto g = std::get<CliqueInstance>(gen_random_graph(n, p, 3, rng() % 4 == 0, WeightKind::None, 0, rng()));
        const auto a = detect_triangle(g.graph(), {TriangleBackend::NaiveMM, std::nullopt});
        const auto b = detect_triangle(g.graph(), {TriangleBackend::DegreeSplit, std::nullopt});
        const auto c = solve_kclique_bruteforce(g);
        bool ok = a.solvable == b.solvable && b.solvable == c.solvable;
        if (a.witness) ok = ok && verify_witness(g, *a.witness);
        if (b.witness) ok = ok && verify_witness(g, *b.witness);
        tri_agree += ok;
        tri_yes += c.solvable;
    }
    const double tri_s = since(t0);
    v.require(tri_agree == 500, "triangle backends disagree");
    v.require(tri_s < 120, "triangle suite over 2 minutes");

    // Triangle pipeline on n <= 40, weights up to 10^3; the k-clique pipeline runs on the same graphs.
    t0 = Clock::now();
    std::size_t nw_agree = 0, nw_yes = 0;
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = uniform_size(3, 40, rng);
        const double p = std::array<double, 4>{0.1, 0.2, 0.4, 0.6}[rng() % 4];
        const BigInt M = static_cast<long long>(rng() % 1001);
        const auto g = std::get<WeightedGraph>(gen_random_graph(n, p, 3, rng() % 2, WeightKind::Node, M, rng()));
        const auto truth = solve_kclique_bruteforce(g);
        const auto a = solve_nw_triangle(g);
        const auto b = solve_nw_kclique(g);
        const bool ok = a.solvable == truth.solvable && b.solvable == truth.solvable &&
                        (!a.witness || verify_witness(g, *a.witness)) && (!b.witness || verify_witness(g, *b.witness)) &&
                        truth.solvable == oracle::weighted_clique(g);
        nw_agree += ok;
        nw_yes += truth.solvable;
    }
    const double nw_s = since(t0);
    v.require(nw_agree == 300, "node-weight pipeline disagrees with brute force");
    v.require(nw_s < 120, "node-weight suite over 2 minutes");

    // General k on smaller graphs.
    t0 = Clock::now();
    std::size_t kc_agree = 0, kc_yes = 0;
    for (int i = 0; i < 100; ++i) {
        const int k = 2 + static_cast<int>(rng() % 3);
        const std::size_t n = uniform_size(static_cast<std::size_t>(k), 10, rng);
        const BigInt M = static_cast<long long>(rng() % 41);
        const auto g = std::get<WeightedGraph>(gen_random_graph(n, 0.6, k, rng() % 2, WeightKind::Node, M, rng()));
        const auto truth = solve_kclique_bruteforce(g);
        const auto a = solve_nw_kclique(g);
        const bool ok = a.solvable == truth.solvable && (!a.witness || verify_witness(g, *a.witness)) &&
                        truth.solvable == oracle::weighted_clique(g);
        kc_agree += ok;
        kc_yes += truth.solvable;
    }
    const double kc_s = since(t0);
    v.require(kc_agree == 100, "node-weight k-clique pipeline disagrees with brute force");
    v.require(kc_s < 120, "node-weight k-clique suite over 2 minutes");
    v.detail << "k-SUM " << agree << "/1000 (" << yes << " yes, " << static_cast<int>(mim_s) << "s); triangles "
             << tri_agree << "/500 (" << tri_yes << " yes, " << static_cast<int>(tri_s) << "s); node-weight "
             << nw_agree << "/300 at k = 3, n <= 40 (" << nw_yes << " yes, " << static_cast<int>(nw_s) << "s); k <= 4, n <= 10 "
             << kc_agree << "/100 (" << kc_yes << " yes, " << static_cast<int>(kc_s) << "s)";
}

// ---- criterion 9 ----

void field_suite(Verdict& v) {
    Rng rng(909);
    std::size_t ts = 0, ts_yes = 0;
    for (std::size_t r = 1; r <= 12; ++r)
        for (int k = 1; k <= 4; ++k)
            for (int q = 2; q <= 17; ++q)
                for (int rep = 0; rep < 2; ++rep) {
                    std::vector<BigInt> el(r);
                    for (auto& e : el) e = static_cast<long long>(rng() % static_cast<std::uint64_t>(q));
                    for (int z = 0; z < q; ++z) {
                        const TargetSumInstance x(q, el, k, z);
                        const bool truth = oracle::targetsum(x);
                        bool any = false;
                        for (const auto& [y, prov] : targetsum_to_ksum(x).items) {
                            const auto s = solve_ksum_bruteforce(y);
                            if (!s.solvable) continue;
                            any = true;
                            v.require(verify_witness(x, *s.witness), "TargetSum witness does not carry over");
                        }
                        v.require(any == truth, "TargetSum mismatch");
                        ++ts;
                        ts_yes += truth;
                    }
                }
    std::size_t back = 0;
    for (int i = 0; i < 300; ++i) {
        const int k = 1 + static_cast<int>(rng() % 4);
        const auto y = gen_random_ksum(uniform_size(static_cast<std::size_t>(k), 12, rng), k, 16,
                                       rng() % 2 ? Plant::Plant : Plant::None, rng());
        v.require(oracle::targetsum(ksum_to_targetsum(y)) == oracle::ksum(y), "k-SUM to TargetSum mismatch");
        ++back;
    }

    std::size_t ld = 0, ld_yes = 0;
    for (std::size_t r = 1; r <= 8; ++r)
        for (std::size_t dim = 1; dim <= 3; ++dim)
            for (int k = 1; k <= 3; ++k)
                for (std::int64_t q : {2, 3, 5})
                    for (int rep = 0; rep < 4; ++rep) {
                        const auto x = gen_random_lindep(r, dim, k, q, rng());
                        const bool truth = oracle::lindep_span(x);
                        bool any = false;
                        for (const auto& [y, prov] : lindep_to_vectorsum(x).items) {
                            const auto s = solve_vectorsum_bruteforce(y);
                            if (!s.solvable) continue;
                            any = true;
                            const auto lifted = lift_lindep_witness(x, *s.witness);
                            std::vector<std::int64_t> acc(dim, 0);
                            for (const auto& [idx, coef] : lifted.combination)
                                for (std::size_t j = 0; j < dim; ++j) acc[j] = (acc[j] + coef * x.vectors()[idx][j]) % q;
                            v.require(acc == x.z() && verify_witness(x, lifted.indices),
                                      "LinDependence witness does not carry over");
                        }
                        v.require(any == truth, "LinDependence mismatch");
                        ++ld;
                        ld_yes += truth;
                    }
    v.detail << "TargetSum " << ts << " sources (" << ts_yes << " yes) + " << back << " reverse; LinDependence "
             << ld << " sources (" << ld_yes << " yes)";
}

// ---- criterion 10 ----

std::map<std::string, std::string> read_tree(const fs::path& root) {
    std::map<std::string, std::string> out;
    if (!fs::exists(root)) return out;
    for (const auto& e : fs::recursive_directory_iterator(root)) {
        if (!e.is_regular_file()) continue;
        std::ifstream in(e.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        out[fs::relative(e.path(), root).string()] = ss.str();
    }
    return out;
}

std::size_t cli_runs(Verdict& v) {
#ifdef KSUMRED_CLI
    const fs::path work = fs::temp_directory_path() / "ksumred_acceptance";
    fs::remove_all(work);
    const std::string cli = KSUMRED_CLI;
    auto run_all = [&](const fs::path& dir) {
        fs::create_directories(dir / "stdout");
        const std::string d = dir.string();
        const std::vector<std::pair<std::string, std::string>> steps{
            {"gen_ksum", "--seed 5 --out " + d + "/gen gen ksum --n 9 --k 3 --M 80 --plant"},
            {"gen_graph", "--seed 6 --out " + d + "/graph gen graph --n 6 --k 3 --p 0.6 --weights edge --M 1 --plant"},
            {"gen_nw", "--seed 7 --out " + d + "/nw gen graph --n 7 --k 3 --p 0.6 --weights node --M 30 --plant"},
            {"gen_clique", "--seed 8 --out " + d + "/clique gen graph --n 5 --k 3 --p 0.7 --plant"},
            {"gen_sumfree", "gen sumfree --n 60 --k 3"},
            {"reduce_vec", "--out " + d + "/vec reduce " + d + "/gen/instance.json --from ksum --to vectorsum"},
            {"reduce_sq", "--out " + d + "/sq reduce " + d + "/nw/instance.json --from nodeweight --to edgeweight"},
            {"reduce_mod", "--seed 9 --out " + d + "/mod reduce " + d +
                               "/gen/instance.json --from ksum --to ksum --via ksum_mod_reduce"},
            {"reduce_alpha", "--out " + d + "/alpha reduce " + d +
                                 "/graph/instance.json --from edgeweight --to clique --supported-only"},
            {"reduce_back", "--out " + d + "/back reduce " + d + "/clique/instance.json --from clique --to ksum"},
            {"solve_vec", "solve " + d + "/vec/collection.jsonl"},
            {"solve_nw", "solve " + d + "/nw/instance.json --solver nw-kclique"},
            {"subsetsum", "--out " + d + "/ss subsetsum-mode " + d + "/gen/instance.json"},
        };
        for (const auto& [name, args] : steps) {
            const std::string cmd = "\"" + cli + "\" " + args + " > \"" + d + "/stdout/" + name + ".out\" 2>&1";
            const int rc = std::system(cmd.c_str());
            std::ofstream(dir / "stdout" / (name + ".rc")) << rc;
        }
    };
    run_all(work / "a");
    run_all(work / "b");
    const auto a = read_tree(work / "a");
    const auto b = read_tree(work / "b");
    v.require(a.size() >= 24, "too few CLI artifacts");
    v.require(a == b, "CLI artifacts differ between identical runs");
    fs::remove_all(work);
    return a.size();
#else
    (void)v;
    return 0;
#endif
}

void determinism(Verdict& v) {
    // In-process: generators, reductions and an experiment report, twice each.
    auto snapshot = [] {
        std::string out;
        out += serialize_instance(gen_random_ksum(10, 3, 1000, Plant::Plant, 3));
        out += serialize_instance(gen_random_graph(9, 0.5, 3, true, WeightKind::Edge, 5, 4));
        out += serialize_instance(gen_random_targetsum(8, 3, 13, Plant::Plant, 5));
        out += serialize_instance(gen_random_lindep(6, 2, 2, 5, 6));
        const auto x = gen_random_ksum(8, 3, 200, Plant::Plant, 7);
        out += serialize_collection(ksum_to_vectorsum(x, smallest_radix(3, 200, 2), 2));
        out += serialize_collection(ksum_mod_reduce(x, 100, 8));
        out += sumfree_to_json(behrend_sumfree(50, 4)).dump();
        ExperimentConfig c;
        c.trials = 30;
        c.seed = 9;
        c.chain = {"ksum_to_nodeweight", "nodeweight_to_edgeweight", "edgeweight_to_unweighted"};
        c.n_max = 6;
        c.M_max = 8;
        c.d = 1;
        out += run_equivalence_experiment(c).to_json().dump();
        return out;
    };
    const auto first = snapshot();
    v.require(first == snapshot(), "in-process outputs differ between identical runs");
    const std::size_t files = cli_runs(v);
    v.detail << "in-process snapshot of " << first.size() << " bytes identical";
    if (files) v.detail << "; " << files << " CLI artifacts byte-identical";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Verdict&)> run;
    };
    Verdict bounds_partial;
    const std::vector<Criterion> criteria{
        {1, "forward-stage equivalence", forward_stages},
        {2, "backward-chain equivalence", backward_chain},
        {3, "witness lifting", witness_lifting},
        {4, "nonnegative cliques", [&](Verdict& v) { nonnegative_cliques(v, bounds_partial); }},
        {5, "weight and count accounting",
         [&](Verdict& v) {
             v.pass = bounds_partial.pass;
             v.detail << bounds_partial.detail.str();
             accounting(v);
         }},
        {6, "sum-free sets", sumfree_suite},
        {7, "modular reduction", modprime_suite},
        {8, "solver cross-validation", solver_suite},
        {9, "field reductions", field_suite},
        {10, "determinism", determinism},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Verdict v;
        const auto t0 = Clock::now();
        try {
            c.run(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        all = all && v.pass;
        std::cout << "criterion " << c.id << " (" << c.name << "): " << (v.pass ? "PASS" : "FAIL") << "  "
                  << v.detail.str() << " [" << static_cast<int>(since(t0)) << "s]" << std::endl;
    }
    return all ? 0 : 1;
}
