#include "ksumred/solvers.hpp"

#include "ksumred/errors.hpp"
#include "ksumred/fieldapps.hpp"
#include "ksumred/forward.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>

namespace ksumred {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Sums are compared modulo 2^64 first; every residue hit is confirmed exactly.
std::uint64_t residue64(const BigInt& x) {
    static const BigInt modulus = BigInt(1) << 64;
    return floor_mod(x, modulus).convert_to<std::uint64_t>();
}

void guard_count(const BigInt& count, std::uint64_t budget, const std::string& what) {
    if (count > budget)
        throw ResourceError(what + " needs " + count.str() + " candidates, budget " + std::to_string(budget));
}

class BitGraph {
public:
    explicit BitGraph(const Graph& g) : n_(g.n()), words_((g.n() + 63) / 64), bits_(n_ * words_, 0) {
        for (const auto& e : g.edges()) {
            set(e.u, e.v);
            set(e.v, e.u);
        }
    }
    std::size_t n() const { return n_; }
    std::size_t words() const { return words_; }
    const std::uint64_t* row(std::size_t v) const { return bits_.data() + v * words_; }
    bool has(std::size_t u, std::size_t v) const { return (row(u)[v / 64] >> (v % 64)) & 1u; }

private:
    void set(std::size_t u, std::size_t v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

std::uint64_t above_mask(std::size_t word, std::size_t v) {
    if (word < v / 64) return 0;
    if (word > v / 64) return ~std::uint64_t{0};
    const unsigned s = static_cast<unsigned>(v % 64);
    return s == 63 ? 0 : ~std::uint64_t{0} << (s + 1);
}

// Returns the number of search nodes visited.
std::uint64_t enumerate_cliques(const Graph& g, int k, const std::function<bool(const Witness&)>& fn,
                                std::uint64_t budget) {
    if (k < 1) throw ParameterError("clique arity must be positive");
    const std::size_t n = g.n();
    const auto uk = static_cast<std::size_t>(k);
    if (n < uk) return 0;
    const BitGraph adj(g);
    const std::size_t words = adj.words();
    // Candidate sets per depth, flattened.
    std::vector<std::uint64_t> cand(uk * words, 0);
    // Start vertices need degree k - 1.
    std::vector<std::size_t> degree(n, 0);
    for (const auto& e : g.edges()) {
        ++degree[e.u];
        ++degree[e.v];
    }
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] + 1 >= uk) cand[v / 64] |= std::uint64_t{1} << (v % 64);
    Witness clique(uk);
    std::uint64_t nodes = 0;
    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
        const std::uint64_t* cur = cand.data() + depth * words;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = cur[w];
            while (word) {
                const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
                word &= word - 1;
                if (++nodes > budget) throw ResourceError("clique search exceeded its node budget");
                clique[depth] = v;
                if (depth + 1 == uk) {
                    if (!fn(clique)) return false;
                    continue;
                }
                std::uint64_t* next = cand.data() + (depth + 1) * words;
                const auto* nb = adj.row(v);
                // At least uk - depth - 1 candidates must remain.
                std::size_t need = uk - depth - 1;
                for (std::size_t q = 0; q < words; ++q) {
                    next[q] = cur[q] & nb[q] & above_mask(q, v);
                    for (std::uint64_t x = next[q]; x && need; x &= x - 1) --need;
                }
                if (need > 0) continue;
                if (!self(self, depth + 1)) return false;
            }
        }
        return true;
    };
    dfs(dfs, 0);
    return nodes;
}

// Lexicographic k-subset walk; leaf(idx, depth) returns false to stop.
template <class Leaf>
void combination_walk(std::size_t n, int k, Leaf&& leaf) {
    const auto uk = static_cast<std::size_t>(k);
    if (n < uk) return;
    std::vector<std::size_t> idx(uk);
    auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
        for (std::size_t i = start; i + (uk - depth) <= n; ++i) {
            idx[depth] = i;
            if (depth + 1 == uk) {
                if (!leaf(idx, depth)) return false;
            } else if (!self(self, depth + 1, i + 1)) {
                return false;
            }
        }
        return true;
    };
    if (uk == 0) {
        leaf(idx, 0);
        return;
    }
    rec(rec, 0, 0);
}

std::optional<std::array<std::size_t, 3>> lex_min_triangle(const BitGraph& adj,
                                                           const std::vector<std::size_t>& verts) {
    // verts ascending; the first hit of the (a, b, c) scan is the smallest triangle among verts.
    for (std::size_t ia = 0; ia < verts.size(); ++ia)
        for (std::size_t ib = ia + 1; ib < verts.size(); ++ib) {
            const auto a = verts[ia], b = verts[ib];
            if (!adj.has(a, b)) continue;
            for (std::size_t ic = ib + 1; ic < verts.size(); ++ic)
                if (adj.has(a, verts[ic]) && adj.has(b, verts[ic])) return std::array{a, b, verts[ic]};
        }
    return std::nullopt;
}

// Boolean square of the induced adjacency, intersected with adjacency.
std::optional<std::array<std::size_t, 3>> naive_mm(const BitGraph& adj, const std::vector<std::size_t>& verts,
                                                   SolverStats& stats) {
    const std::size_t h = verts.size();
    const std::size_t words = (h + 63) / 64;
    std::vector<std::uint64_t> rows(h * words, 0);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            if (i != j && adj.has(verts[i], verts[j])) rows[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
    std::vector<std::uint64_t> square(words);
    bool found = false;
    for (std::size_t i = 0; i < h && !found; ++i) {
        std::fill(square.begin(), square.end(), 0);
        for (std::size_t j = 0; j < h; ++j)
            if ((rows[i * words + j / 64] >> (j % 64)) & 1u)
                for (std::size_t q = 0; q < words; ++q) square[q] |= rows[j * words + q];
        ++stats.candidates_examined;
        for (std::size_t q = 0; q < words; ++q)
            if (square[q] & rows[i * words + q]) found = true;
    }
    if (!found) return std::nullopt;
    return lex_min_triangle(adj, verts);
}

SolverReport scan_small_arity(const WeightedGraph& g, const BigInt& target, const std::vector<BigInt>& w,
                              const std::string& name) {
    SolverReport rep;
    rep.solver = name;
    if (g.k() == 1) {
        for (std::size_t v = 0; v < g.n(); ++v) {
            ++rep.stats.candidates_examined;
            if (w[v] == target) {
                rep.solvable = true;
                rep.witness = Witness{v};
                break;
            }
        }
    } else {
        for (const auto& e : g.graph().edges()) {
            ++rep.stats.candidates_examined;
            if (w[e.u] + w[e.v] == target) {
                rep.solvable = true;
                rep.witness = Witness{e.u, e.v};
                break;
            }
        }
    }
    return rep;
}

SolverReport nodeweight_pipeline(const WeightedGraph& g, const NodeWeightOptions& opt, bool triangle) {
    const auto start = Clock::now();
    const std::string name = triangle ? "nw-triangle" : "nw-kclique";
    if (!g.node_weighted()) throw ParameterError(name + " needs node weights");
    const int k = g.k();
    if (triangle && k != 3) throw UnsupportedArity("nw-triangle needs k = 3");
    if (opt.d < 1) throw ParameterError("dimension d must be at least 1");

    // Shift into [0, 2M] when any weight is negative.
    std::vector<BigInt> weights = *g.node_weights();
    BigInt target = g.target();
    if (std::any_of(weights.begin(), weights.end(), [](const BigInt& x) { return x < 0; })) {
        const BigInt shift = g.weight_bound();
        for (auto& x : weights) x += shift;
        target += shift * k;
    }
    if (k <= 2) {
        auto rep = scan_small_arity(g, target, weights, name);
        rep.stats.wall_seconds = seconds_since(start);
        return rep;
    }
    SolverReport rep;
    rep.solver = name;
    BigInt M = 0;
    for (const auto& x : weights) M = std::max(M, x);
    if (target < 0 || target > M * k) {
        rep.stats.wall_seconds = seconds_since(start);
        return rep;
    }
    const WeightedGraph shifted = WeightedGraph::with_node_weights(k, g.graph(), weights, target);
    const BigInt p = smallest_radix(k, M, opt.d);
    const auto coll = nodeweight_to_edgeweight(shifted, p, opt.d);
    const BigInt bound = edge_weight_bound(k, opt.d, p);
    std::vector<AlphaFamily> families;
    for (const auto& [h, prov] : coll.items) {
        families.emplace_back(h, bound);
        rep.stats.instances_generated += families.back().size();
    }
    const std::uint64_t edge_cap = static_cast<std::uint64_t>(k) * k * g.graph().m();
    for (const auto& fam : families) {
        fam.for_each_supported_alpha([&](const AlphaFamily::Alpha& alpha) {
            const auto inst = fam.instance(alpha);
            ++rep.stats.candidates_examined;
            rep.stats.max_generated_edges = std::max<std::uint64_t>(rep.stats.max_generated_edges, inst.graph().m());
            if (inst.graph().m() > edge_cap) throw Error("generated graph exceeds k^2 m edges");
            const auto sub = triangle ? detect_triangle(inst.graph(), opt.triangle) : solve_kclique_bruteforce(inst);
            if (!sub.solvable) return true;
            Witness w = fam.lift(alpha, *sub.witness);
            std::sort(w.begin(), w.end());
            if (!verify_witness(g, w)) throw Error("lifted clique misses the node-weight target");
            rep.solvable = true;
            rep.witness = std::move(w);
            return false;
        });
        if (rep.solvable) break;
    }
    rep.stats.wall_seconds = seconds_since(start);
    return rep;
}

}  // namespace

ordered_json SolverReport::to_json(bool include_timing) const {
    ordered_json j;
    j["solver"] = solver;
    j["answer"] = solvable ? "solvable" : "unsolvable";
    j["witness"] = witness ? ordered_json(*witness) : ordered_json(nullptr);
    ordered_json s;
    s["instances_generated"] = to_decimal(stats.instances_generated);
    s["candidates_examined"] = stats.candidates_examined;
    s["low_degree_pairs"] = stats.low_degree_pairs;
    s["core_vertices"] = stats.core_vertices;
    s["max_generated_edges"] = stats.max_generated_edges;
    if (include_timing) s["wall_seconds"] = stats.wall_seconds;
    j["stats"] = std::move(s);
    return j;
}

void for_each_combination(std::size_t n, int k,
                          const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    if (k < 0) throw ParameterError("subset size must be nonnegative");
    combination_walk(n, k, [&](const std::vector<std::size_t>& idx, std::size_t) { return fn(idx); });
}

void for_each_kclique(const Graph& g, int k, const std::function<bool(const Witness&)>& fn,
                      std::uint64_t budget) {
    enumerate_cliques(g, k, fn, budget);
}

SolverReport solve_ksum_bruteforce(const KSumInstance& inst, std::uint64_t budget) {
    const auto start = Clock::now();
    SolverReport rep;
    rep.solver = "brute";
    const std::size_t n = inst.size();
    const int k = inst.k();
    if (n >= static_cast<std::size_t>(k)) {
        guard_count(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)), budget, "brute-force k-SUM");
        std::vector<std::uint64_t> r;
        for (const auto& x : inst.numbers()) r.push_back(residue64(x));
        const std::uint64_t rt = residue64(inst.target());
        combination_walk(n, k, [&](const std::vector<std::size_t>& idx, std::size_t) {
            std::uint64_t s = 0;
            for (auto i : idx) s += r[i];
            ++rep.stats.candidates_examined;
            if (s != rt || !verify_witness(inst, idx)) return true;
            rep.solvable = true;
            rep.witness = idx;
            return false;
        });
    }
    rep.stats.wall_seconds = seconds_since(start);
    return rep;
}

SolverReport solve_ksum_mim(const KSumInstance& inst, std::uint64_t budget) {
    const auto start = Clock::now();
    SolverReport rep;
    rep.solver = "mim";
    const std::size_t n = inst.size();
    const int k = inst.k();
    if (n < static_cast<std::size_t>(k)) {
        rep.stats.wall_seconds = seconds_since(start);
        return rep;
    }
    const int L = (k + 1) / 2;
    const int R = k / 2;
    const auto un = static_cast<unsigned>(n);
    guard_count(binomial(un, static_cast<unsigned>(L)) + binomial(un, static_cast<unsigned>(R)), budget,
                "meet-in-the-middle table");

    std::vector<std::uint64_t> r;
    for (const auto& x : inst.numbers()) r.push_back(residue64(x));
    const std::uint64_t rt = residue64(inst.target());

    struct Entry {
        std::uint64_t sum;
        std::uint32_t ordinal;
    };
    std::vector<Entry> table;
    std::vector<std::uint32_t> combos;  // R indices per ordinal, lexicographic
    combination_walk(n, R, [&](const std::vector<std::size_t>& idx, std::size_t) {
        std::uint64_t s = 0;
        for (auto i : idx) {
            s += r[i];
            combos.push_back(static_cast<std::uint32_t>(i));
        }
        table.push_back({s, static_cast<std::uint32_t>(table.size())});
        return true;
    });
    std::stable_sort(table.begin(), table.end(), [](const Entry& a, const Entry& b) { return a.sum < b.sum; });
    auto min_index = [&](const Entry& e) -> std::size_t {
        return R == 0 ? n : combos[static_cast<std::size_t>(e.ordinal) * R];
    };

    Witness cand(static_cast<std::size_t>(k));
    combination_walk(n, L, [&](const std::vector<std::size_t>& left, std::size_t) {
        std::uint64_t s = 0;
        for (auto i : left) s += r[i];
        const std::uint64_t need = rt - s;
        auto lo = std::lower_bound(table.begin(), table.end(), need,
                                   [](const Entry& e, std::uint64_t v) { return e.sum < v; });
        auto hi = std::upper_bound(lo, table.end(), need,
                                   [](std::uint64_t v, const Entry& e) { return v < e.sum; });
        const std::size_t top = left.back();
        auto it = std::partition_point(lo, hi, [&](const Entry& e) { return min_index(e) <= top; });
        for (; it != hi; ++it) {
            ++rep.stats.candidates_examined;
            std::copy(left.begin(), left.end(), cand.begin());
            for (int q = 0; q < R; ++q)
                cand[static_cast<std::size_t>(L + q)] = combos[static_cast<std::size_t>(it->ordinal) * R + q];
            if (verify_witness(inst, cand)) {
                rep.solvable = true;
                rep.witness = cand;
                return false;
            }
        }
        return true;
    });
    rep.stats.wall_seconds = seconds_since(start);
    return rep;
}

SolverReport solve_vectorsum_bruteforce(const VectorSumInstance& inst, std::uint64_t budget) {
    const auto start = Clock::now();
    SolverReport rep;
    rep.solver = "brute";
    if (!inst.trivially_unsolvable()) {
        const std::size_t n = inst.size();
        const std::size_t dim = inst.dim();
        const int k = inst.k();
        guard_count(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)), budget,
                    "brute-force vector sum");
        std::vector<std::uint64_t> r(n * dim);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < dim; ++j) r[i * dim + j] = residue64(inst.vectors()[i][j]);
        std::vector<std::uint64_t> rt(dim);
        for (std::size_t j = 0; j < dim; ++j) rt[j] = residue64(inst.target()[j]);
        std::vector<std::uint64_t> acc(dim);
        combination_walk(n, k, [&](const std::vector<std::size_t>& idx, std::size_t) {
            ++rep.stats.candidates_examined;
            std::fill(acc.begin(), acc.end(), 0);
            for (auto i : idx)
                for (std::size_t j = 0; j < dim; ++j) acc[j] += r[i * dim + j];
            if (acc != rt || !verify_witness(inst, idx)) return true;
            rep.solvable = true;
            rep.witness = idx;
            return false;
        });
    }
    rep.stats.wall_seconds = seconds_since(start);
    return rep;
}

SolverReport solve_kclique_bruteforce(const CliqueInstance& inst, std::uint64_t budget) {
    const auto start = Clock::now();
    SolverReport rep;
    rep.solver = "brute";
    rep.stats.candidates_examined = enumerate_cliques(
        inst.graph(), inst.k(),
        [&](const Witness& w) {
            rep.solvable = true;
            rep.witness = w;
            return false;
        },
        budget);
    rep.stats.wall_seconds = seconds_since(start);
    return rep;
}

SolverReport solve_kclique_bruteforce(const WeightedGraph& inst, std::uint64_t budget) {
    const auto start = Clock::now();
    SolverReport rep;
    rep.solver = "brute";
    const auto& g = inst.graph();
    const int k = inst.k();
    const unsigned terms = static_cast<unsigned>(k * k + 1);
    const bool small = bit_length(inst.weight_bound()) + ceil_log2(BigInt(terms)) + 2 < 63 &&
                       bit_length(inst.target()) < 62;
    auto run = [&](auto zero) {
        using Int = decltype(zero);
        const auto& src = inst.node_weighted() ? *inst.node_weights() : *inst.edge_weights();
        std::vector<Int> w;
        w.reserve(src.size());
        for (const auto& x : src) {
            if constexpr (std::is_same_v<Int, std::int64_t>)
                w.push_back(x.template convert_to<std::int64_t>());
            else
                w.push_back(x);
        }
        Int target;
        if constexpr (std::is_same_v<Int, std::int64_t>)
            target = inst.target().template convert_to<std::int64_t>();
        else
            target = inst.target();
        rep.stats.candidates_examined = enumerate_cliques(
            g, k,
            [&](const Witness& c) {
                Int sum = 0;
                if (inst.node_weighted()) {
                    for (auto v : c) sum += w[v];
                } else {
                    for (std::size_t a = 0; a < c.size(); ++a)
                        for (std::size_t b = a + 1; b < c.size(); ++b) sum += w[*g.edge_index(c[a], c[b])];
                }
                if (sum != target) return true;
                rep.solvable = true;
                rep.witness = c;
                return false;
            },
            budget);
    };
    if (small)
        run(std::int64_t{0});
    else
        run(BigInt(0));
    rep.stats.wall_seconds = seconds_since(start);
    return rep;
}

SolverReport detect_triangle(const Graph& g, const TriangleOptions& opt) {
    const auto start = Clock::now();
    SolverReport rep;
    const BitGraph adj(g);
    std::optional<std::array<std::size_t, 3>> tri;
    if (opt.backend == TriangleBackend::NaiveMM) {
        rep.solver = "triangle-naive";
        std::vector<std::size_t> all(g.n());
        for (std::size_t v = 0; v < g.n(); ++v) all[v] = v;
        tri = naive_mm(adj, all, rep.stats);
    } else {
        rep.solver = "triangle-split";
        const std::size_t m = g.m();
        const std::size_t delta =
            opt.delta.value_or(std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(double(m))))));
        if (delta == 0) throw ParameterError("degree threshold must be positive");
        std::vector<std::vector<std::size_t>> nbrs(g.n());
        for (const auto& e : g.edges()) {
            nbrs[e.u].push_back(e.v);
            nbrs[e.v].push_back(e.u);
        }
        for (auto& list : nbrs) std::sort(list.begin(), list.end());
        std::vector<std::size_t> core;
        for (std::size_t v = 0; v < g.n() && !tri; ++v) {
            if (nbrs[v].size() >= delta) {
                core.push_back(v);
                continue;
            }
            const auto& list = nbrs[v];
            for (std::size_t a = 0; a < list.size() && !tri; ++a)
                for (std::size_t b = a + 1; b < list.size(); ++b) {
                    ++rep.stats.low_degree_pairs;
                    if (adj.has(list[a], list[b])) {
                        std::array<std::size_t, 3> t{v, list[a], list[b]};
                        std::sort(t.begin(), t.end());
                        tri = t;
                        break;
                    }
                }
        }
        if (!tri) {
            rep.stats.core_vertices = core.size();
            tri = naive_mm(adj, core, rep.stats);
        }
    }
    if (tri) {
        rep.solvable = true;
        rep.witness = Witness(tri->begin(), tri->end());
    }
    rep.stats.wall_seconds = seconds_since(start);
    return rep;
}

SolverReport solve_nw_triangle(const WeightedGraph& g, const NodeWeightOptions& opt) {
    return nodeweight_pipeline(g, opt, true);
}

SolverReport solve_nw_kclique(const WeightedGraph& g, const NodeWeightOptions& opt) {
    return nodeweight_pipeline(g, opt, false);
}

std::vector<std::string> solver_names() {
    return {"auto", "brute", "mim", "triangle-naive", "triangle-split", "nw-triangle", "nw-kclique"};
}

SolverReport solve(const Instance& inst, const std::string& solver) {
    auto unsupported = [&]() -> SolverReport {
        throw ParameterError("solver '" + solver + "' does not apply to " + instance_type(inst) + " instances");
    };
    if (const auto* x = std::get_if<KSumInstance>(&inst)) {
        if (solver == "brute") return solve_ksum_bruteforce(*x);
        if (solver == "mim") return solve_ksum_mim(*x);
        if (solver == "auto") {
            const bool small = x->size() < static_cast<std::size_t>(x->k()) ||
                               binomial(static_cast<unsigned>(x->size()), static_cast<unsigned>(x->k())) <= 2'000'000;
            return small ? solve_ksum_bruteforce(*x) : solve_ksum_mim(*x);
        }
        return unsupported();
    }
    if (const auto* x = std::get_if<VectorSumInstance>(&inst)) {
        if (solver == "brute" || solver == "auto") return solve_vectorsum_bruteforce(*x);
        return unsupported();
    }
    if (const auto* x = std::get_if<CliqueInstance>(&inst)) {
        if (solver == "brute" || solver == "auto") return solve_kclique_bruteforce(*x);
        if (solver == "triangle-naive" || solver == "triangle-split") {
            if (x->k() != 3) throw UnsupportedArity("triangle detection needs k = 3");
            TriangleOptions opt;
            opt.backend = solver == "triangle-naive" ? TriangleBackend::NaiveMM : TriangleBackend::DegreeSplit;
            return detect_triangle(x->graph(), opt);
        }
        return unsupported();
    }
    if (const auto* x = std::get_if<WeightedGraph>(&inst)) {
        if (solver == "brute" || solver == "auto") return solve_kclique_bruteforce(*x);
        if (solver == "nw-triangle") return solve_nw_triangle(*x);
        if (solver == "nw-kclique") return solve_nw_kclique(*x);
        return unsupported();
    }
    if (const auto* x = std::get_if<TargetSumInstance>(&inst)) {
        if (solver == "brute" || solver == "auto") return solve_targetsum_bruteforce(*x);
        return unsupported();
    }
    const auto& x = std::get<LinDepInstance>(inst);
    if (solver == "brute" || solver == "auto") return solve_lindep_bruteforce(x);
    return unsupported();
}

}  // namespace ksumred
