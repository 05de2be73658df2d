#include "ksumred/forward.hpp"

#include "ksumred/errors.hpp"
#include "ksumred/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ksumred {

namespace {

BigInt big_binomial(const BigInt& n, unsigned r) {
    if (n < 0 || BigInt(r) > n) return 0;
    BigInt out = 1;
    for (unsigned i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
}

void check_radix(int k, const BigInt& p, int d) {
    if (k < 1) throw ParameterError("arity must be positive");
    if (d < 1) throw ParameterError("dimension d must be at least 1");
    if (p <= k) throw ParameterError("radix p must exceed k");
}

// Digits with the top digit absorbing any overflow beyond p^d.
std::vector<BigInt> target_digits(const BigInt& t, const BigInt& p, int d) {
    std::vector<BigInt> out(d);
    BigInt rest = t;
    for (int j = 0; j + 1 < d; ++j) {
        out[j] = rest % p;
        rest /= p;
    }
    out[d - 1] = rest;
    return out;
}

}  // namespace

std::vector<BigInt> base_p_digits(const BigInt& x, const BigInt& p, int d) {
    if (p < 2) throw ParameterError("radix must be at least 2");
    if (d < 1) throw ParameterError("digit count must be at least 1");
    if (x < 0 || x >= ipow(p, static_cast<unsigned>(d)))
        throw RangeError("value " + x.str() + " is outside [0, p^d)");
    std::vector<BigInt> out(d);
    BigInt rest = x;
    for (int j = 0; j < d; ++j) {
        out[j] = rest % p;
        rest /= p;
    }
    return out;
}

BigInt recompose_digits(const std::vector<BigInt>& digits, const BigInt& p) {
    BigInt out = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) out = out * p + *it;
    return out;
}

bool CarryContext::feasible(std::size_t i) const {
    const BigInt hi = BigInt(k) * (p - 1);
    return std::all_of(targets[i].begin(), targets[i].end(),
                       [&](const BigInt& e) { return e >= 0 && e <= hi; });
}

CarryContext carry_targets(const BigInt& t, int k, const BigInt& p, int d) {
    check_radix(k, p, d);
    const BigInt top = BigInt(k) * (ipow(p, static_cast<unsigned>(d)) - 1);
    if (t < 0 || t > top) throw RangeError("target outside [0, k(p^d - 1)]");
    CarryContext ctx;
    ctx.k = k;
    ctx.p = p;
    ctx.d = d;
    const auto a = target_digits(t, p, d);
    std::vector<int> gamma(d - 1, 0);
    for (;;) {
        std::vector<BigInt> tg(d);
        if (d == 1) {
            tg[0] = a[0];
        } else {
            tg[0] = a[0] + BigInt(gamma[0]) * p;
            for (int j = 1; j + 1 < d; ++j) tg[j] = a[j] - gamma[j - 1] + BigInt(gamma[j]) * p;
            tg[d - 1] = a[d - 1] - gamma[d - 2];
        }
        ctx.gammas.push_back(gamma);
        ctx.targets.push_back(std::move(tg));
        int pos = d - 2;
        while (pos >= 0 && gamma[pos] == k) gamma[pos--] = 0;
        if (pos < 0) break;
        ++gamma[pos];
    }
    return ctx;
}

std::vector<BigInt> map_f(const BigInt& x, const std::vector<BigInt>& t_gamma, int k, const BigInt& p,
                          int d) {
    if (static_cast<int>(t_gamma.size()) != d) throw ParameterError("target vector length must be d");
    auto v = base_p_digits(x, p, d);
    for (int j = 0; j < d; ++j) v[j] = v[j] * k - t_gamma[j];
    return v;
}

BigInt smallest_radix(int k, const BigInt& max_value, int d) {
    if (d < 1) throw ParameterError("dimension d must be at least 1");
    const BigInt need = max_value * k + 1;
    BigInt lo = 1, hi = need;
    while (lo < hi) {
        const BigInt mid = (lo + hi) / 2;
        if (ipow(mid, static_cast<unsigned>(d)) >= need)
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max(lo, BigInt(k + 1));
}

ReducedCollection<VectorSumInstance> ksum_to_vectorsum(const KSumInstance& inst, const BigInt& p,
                                                       int d) {
    const int k = inst.k();
    check_radix(k, p, d);
    if (inst.range().lo < 0) throw ParameterError("numbers must lie in [0, M]; normalize first");
    const BigInt& M = inst.range().hi;
    if (ipow(p, static_cast<unsigned>(d)) < M * k + 1) throw ParameterError("p^d must be at least kM + 1");

    ReducedCollection<VectorSumInstance> out;
    out.reduction = "ksum_to_vectorsum";
    out.source_digest = content_digest(inst);
    out.params["k"] = k;
    out.params["p"] = to_decimal(p);
    out.params["d"] = d;
    out.params["M"] = to_decimal(M);

    const BigInt& t = inst.target();
    if (t < 0 || t > M * k) {
        out.params["s"] = 0;
        out.params["s_feasible"] = 0;
        Provenance prov;
        prov.note = "target outside [0, kM]";
        out.skipped.push_back(std::move(prov));
        return out;
    }
    std::vector<std::vector<BigInt>> vectors;
    vectors.reserve(inst.size());
    for (const auto& x : inst.numbers()) vectors.push_back(base_p_digits(x, p, d));

    const auto ctx = carry_targets(t, k, p, d);
    std::size_t feasible = 0;
    for (std::size_t i = 0; i < ctx.s(); ++i) {
        Provenance prov;
        prov.carry_index = i;
        prov.gamma = ctx.gammas[i];
        if (!ctx.feasible(i)) {
            prov.note = "infeasible carry target";
            out.skipped.push_back(std::move(prov));
            continue;
        }
        ++feasible;
        out.items.emplace_back(VectorSumInstance(k, static_cast<std::size_t>(d), vectors,
                                                 ctx.targets[i], Bounds{0, p - 1}),
                               std::move(prov));
    }
    out.params["s"] = ctx.s();
    out.params["s_feasible"] = feasible;
    return out;
}

WeightedGraph ksum_to_nodeweight(const KSumInstance& inst) {
    const std::size_t n = inst.size();
    std::vector<Edge> edges;
    edges.reserve(n * (n - (n > 0)) / 2);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) edges.push_back({u, v});
    return WeightedGraph::with_node_weights(inst.k(), Graph(n, std::move(edges)), inst.numbers(),
                                            inst.target());
}

BigInt edge_weight_bound(int k, int d, const BigInt& p) {
    return BigInt(2) * k * k * k * d * p * p;
}

BigInt squaring_weight(const std::vector<BigInt>& u, const std::vector<BigInt>& v, int k) {
    if (u.size() != v.size()) throw ParameterError("vectors must have equal length");
    BigInt w = 0;
    for (std::size_t j = 0; j < u.size(); ++j)
        w += u[j] * u[j] + v[j] * v[j] + BigInt(2 * (k - 1)) * u[j] * v[j];
    return w;
}

ReducedCollection<WeightedGraph> nodeweight_to_edgeweight(const WeightedGraph& g, const BigInt& p,
                                                          int d) {
    const int k = g.k();
    if (k < 2) throw UnsupportedArity("edge weights need k >= 2");
    if (!g.node_weighted()) throw ParameterError("source graph must carry node weights");
    check_radix(k, p, d);
    const auto& weights = *g.node_weights();
    BigInt M = 0;
    for (const auto& w : weights) {
        if (w < 0) throw ParameterError("node weights must be nonnegative; shift first");
        M = std::max(M, w);
    }
    if (ipow(p, static_cast<unsigned>(d)) < M * k + 1) throw ParameterError("p^d must be at least kM + 1");

    ReducedCollection<WeightedGraph> out;
    out.reduction = "nodeweight_to_edgeweight";
    out.source_digest = content_digest(g);
    out.params["k"] = k;
    out.params["p"] = to_decimal(p);
    out.params["d"] = d;
    out.params["M"] = to_decimal(M);
    out.params["edge_bound"] = to_decimal(edge_weight_bound(k, d, p));

    const BigInt& t = g.target();
    if (t < 0 || t > M * k) {
        out.params["s"] = 0;
        out.params["s_feasible"] = 0;
        Provenance prov;
        prov.note = "target outside [0, kM]";
        out.skipped.push_back(std::move(prov));
        return out;
    }
    const auto ctx = carry_targets(t, k, p, d);
    const auto& edges = g.graph().edges();
    std::size_t feasible = 0;
    for (std::size_t i = 0; i < ctx.s(); ++i) {
        Provenance prov;
        prov.carry_index = i;
        prov.gamma = ctx.gammas[i];
        if (!ctx.feasible(i)) {
            prov.note = "infeasible carry target";
            out.skipped.push_back(std::move(prov));
            continue;
        }
        ++feasible;
        std::vector<std::vector<BigInt>> f(g.n());
        for (std::size_t v = 0; v < g.n(); ++v) f[v] = map_f(weights[v], ctx.targets[i], k, p, d);
        std::vector<WeightedEdge> wedges;
        wedges.reserve(edges.size());
        for (const auto& e : edges) wedges.push_back({e.u, e.v, squaring_weight(f[e.u], f[e.v], k)});
        out.items.emplace_back(WeightedGraph::with_edge_weights(k, g.n(), std::move(wedges), 0),
                               std::move(prov));
    }
    out.params["s"] = ctx.s();
    out.params["s_feasible"] = feasible;
    return out;
}

BigInt alpha_tuple_count(std::size_t pairs, const BigInt& bound) {
    if (bound < 0) throw ParameterError("weight bound must be nonnegative");
    if (pairs == 0) return 1;
    const BigInt C(pairs);
    const unsigned r = static_cast<unsigned>(pairs - 1);
    BigInt total = 0;
    for (std::size_t j = 0; j <= pairs; ++j) {
        const BigInt top = C * bound - BigInt(j) * (2 * bound + 1);
        if (top < 0) break;
        const BigInt term = binomial(static_cast<unsigned>(pairs), static_cast<unsigned>(j)) *
                            big_binomial(top + r, r);
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

std::vector<std::pair<int, int>> slot_pairs(int k) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) out.emplace_back(i, j);
    return out;
}

AlphaFamily::AlphaFamily(WeightedGraph source, BigInt bound)
    : source_(std::move(source)), bound_(std::move(bound)), m_(-1), pairs_(slot_pairs(source_.k())) {
    if (!source_.edge_weighted()) throw ParameterError("weight removal needs an edge-weighted graph");
    if (source_.target() != 0) throw ParameterError("edge-weight cliques must target weight 0");
    if (bound_ < source_.weight_bound()) throw ParameterError("edge weights exceed the declared bound");
    // Sums of C(k,2) entries must stay within int64 during enumeration.
    const unsigned headroom = ceil_log2(BigInt(pairs_.size() + 1)) + 2;
    if (bit_length(bound_) + headroom < 63) m_ = bound_.convert_to<std::int64_t>();
    if (m_ < 0) return;
    const auto& edges = source_.graph().edges();
    const auto& w = *source_.edge_weights();
    for (std::size_t e = 0; e < edges.size(); ++e) by_weight_[w[e].convert_to<std::int64_t>()].push_back(edges[e]);
    for (const auto& [weight, list] : by_weight_) weights_.push_back(weight);
}

BigInt AlphaFamily::size() const { return alpha_tuple_count(pairs_.size(), bound_); }

void AlphaFamily::for_each_alpha(const Visitor& fn) const {
    const std::size_t C = pairs_.size();
    if (C == 0) {
        fn({});
        return;
    }
    if (m_ < 0) throw ResourceError("weight bound too large to enumerate alpha tuples");
    Alpha a(C, -m_);
    const int last_free = static_cast<int>(C) - 2;
    for (;;) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i + 1 < C; ++i) sum += a[i];
        const std::int64_t forced = -sum;
        if (forced >= -m_ && forced <= m_) {
            a[C - 1] = forced;
            if (!fn(a)) return;
        }
        int pos = last_free;
        while (pos >= 0 && a[pos] == m_) a[pos--] = -m_;
        if (pos < 0) break;
        ++a[pos];
    }
}

bool AlphaFamily::supported(const Alpha& alpha) const {
    return std::all_of(alpha.begin(), alpha.end(), [&](std::int64_t x) {
        return std::binary_search(weights_.begin(), weights_.end(), x);
    });
}

void AlphaFamily::for_each_supported_alpha(const Visitor& fn) const {
    const std::size_t C = pairs_.size();
    if (C == 0) {
        fn({});
        return;
    }
    if (m_ < 0) throw ResourceError("weight bound too large to enumerate alpha tuples");
    if (weights_.empty()) return;
    const std::size_t nw = weights_.size();
    const std::size_t left = (C + 1) / 2;
    const std::size_t right = C - left;

    // Right halves in lexicographic order, then stably grouped by sum.
    std::size_t table_size = 1;
    for (std::size_t i = 0; i < right; ++i) {
        if (table_size > (std::size_t{1} << 25) / nw)
            throw ResourceError("alpha support enumeration exceeds its memory budget");
        table_size *= nw;
    }
    std::vector<std::pair<std::int64_t, std::size_t>> table;
    table.reserve(table_size);
    {
        std::vector<std::size_t> idx(right, 0);
        for (std::size_t ordinal = 0; ordinal < table_size; ++ordinal) {
            std::int64_t sum = 0;
            for (auto i : idx) sum += weights_[i];
            table.emplace_back(sum, ordinal);
            for (std::size_t pos = right; pos-- > 0;) {
                if (++idx[pos] < nw) break;
                idx[pos] = 0;
            }
        }
    }
    std::stable_sort(table.begin(), table.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    const std::int64_t min_w = weights_.front();
    const std::int64_t max_w = weights_.back();
    Alpha a(C, 0);
    bool stop = false;
    auto recurse = [&](auto&& self, std::size_t pos, std::int64_t partial) -> void {
        if (pos == left) {
            const std::int64_t need = -partial;
            auto lo = std::lower_bound(table.begin(), table.end(), need,
                                       [](const auto& e, std::int64_t v) { return e.first < v; });
            for (auto it = lo; it != table.end() && it->first == need; ++it) {
                std::size_t ord = it->second;
                for (std::size_t q = C; q-- > left;) {
                    a[q] = weights_[ord % nw];
                    ord /= nw;
                }
                if (!fn(a)) {
                    stop = true;
                    return;
                }
            }
            return;
        }
        const auto rest = static_cast<std::int64_t>(C - pos - 1);
        for (std::int64_t w : weights_) {
            const std::int64_t need = -(partial + w);
            if (need < rest * min_w) break;
            if (need > rest * max_w) continue;
            a[pos] = w;
            self(self, pos + 1, partial + w);
            if (stop) return;
        }
    };
    recurse(recurse, 0, 0);
}

CliqueInstance AlphaFamily::instance(const Alpha& alpha) const {
    if (alpha.size() != pairs_.size()) throw ParameterError("alpha must have C(k,2) entries");
    const std::size_t n = source_.n();
    const int k = source_.k();
    std::vector<Edge> edges;
    std::size_t total = 0;
    for (auto x : alpha)
        if (auto it = by_weight_.find(x); it != by_weight_.end()) total += it->second.size();
    edges.reserve(total);
    for (std::size_t c = 0; c < pairs_.size(); ++c) {
        auto it = by_weight_.find(alpha[c]);
        if (it == by_weight_.end()) continue;
        const std::size_t oi = static_cast<std::size_t>(pairs_[c].first - 1) * n;
        const std::size_t oj = static_cast<std::size_t>(pairs_[c].second - 1) * n;
        for (const auto& e : it->second) edges.push_back({oi + e.u, oj + e.v});
    }
    std::vector<int> partition(static_cast<std::size_t>(k) * n);
    for (std::size_t x = 0; x < partition.size(); ++x) partition[x] = static_cast<int>(x / n) + 1;
    return CliqueInstance(k, Graph(static_cast<std::size_t>(k) * n, std::move(edges)),
                          std::move(partition));
}

Witness AlphaFamily::lift(const Alpha& alpha, const Witness& w) const {
    const auto inst = instance(alpha);
    if (!verify_witness(inst, w)) throw MalformedWitness("witness is not a k-clique of G_alpha");
    const std::size_t n = source_.n();
    Witness sorted = w;
    std::sort(sorted.begin(), sorted.end());
    Witness out;
    for (auto x : sorted) out.push_back(x % n);
    if (!verify_witness(source_, out)) throw Error("lifted clique does not have edge weight 0");
    return out;
}

ReducedCollection<CliqueInstance> AlphaFamily::materialize(std::size_t max_items) const {
    const BigInt total = size();
    if (total > max_items) throw ResourceError("alpha family has " + total.str() + " items");
    ReducedCollection<CliqueInstance> out;
    out.reduction = "edgeweight_to_unweighted";
    out.source_digest = content_digest(source_);
    out.params["k"] = k();
    out.params["bound"] = to_decimal(bound_);
    out.params["alpha_count"] = to_decimal(total);
    for_each_alpha([&](const Alpha& a) {
        Provenance prov;
        prov.alpha = std::vector<BigInt>(a.begin(), a.end());
        out.items.emplace_back(instance(a), std::move(prov));
        return true;
    });
    return out;
}

std::pair<std::size_t, Witness> MergedClique::locate(const Witness& w) const {
    if (w.empty()) throw MalformedWitness("empty witness");
    std::size_t c = 0;
    while (c < components.size() &&
           !(w[0] >= *components[c].vertex_offset && w[0] < *components[c].vertex_offset + sizes[c]))
        ++c;
    if (c == components.size()) throw MalformedWitness("witness vertex outside every component");
    const std::size_t off = *components[c].vertex_offset;
    Witness local;
    for (auto x : w) {
        if (x < off || x >= off + sizes[c]) throw MalformedWitness("witness spans several components");
        local.push_back(x - off);
    }
    return {c, local};
}

MergedClique merge_clique_instances(const ReducedCollection<CliqueInstance>& coll,
                                    std::optional<int> k_if_empty) {
    if (coll.items.empty() && !k_if_empty) throw ParameterError("cannot infer k for an empty merge");
    const int k = coll.items.empty() ? *k_if_empty : coll.items.front().first.k();
    bool partitioned = true;
    std::size_t total = 0;
    for (const auto& [inst, prov] : coll.items) {
        if (inst.k() != k) throw ParameterError("merged instances must share k");
        partitioned = partitioned && inst.partition().has_value();
        total += inst.n();
    }
    std::vector<Edge> edges;
    std::vector<int> partition;
    MergedClique out{CliqueInstance(k, Graph()), {}, {}};
    std::size_t offset = 0;
    for (std::size_t c = 0; c < coll.items.size(); ++c) {
        const auto& [inst, prov] = coll.items[c];
        for (const auto& e : inst.graph().edges()) edges.push_back({offset + e.u, offset + e.v});
        if (partitioned)
            partition.insert(partition.end(), inst.partition()->begin(), inst.partition()->end());
        Provenance p = prov;
        p.component = c;
        p.vertex_offset = offset;
        out.components.push_back(std::move(p));
        out.sizes.push_back(inst.n());
        offset += inst.n();
    }
    out.instance = CliqueInstance(k, Graph(total, std::move(edges)),
                                  partitioned && !coll.items.empty()
                                      ? std::optional<std::vector<int>>(std::move(partition))
                                      : std::nullopt);
    return out;
}

int pipeline_dimension(std::size_t n) {
    if (n < 4) return 1;
    const double l = std::log2(static_cast<double>(n));
    const double ratio = l / std::log2(l);
    return std::max(1, static_cast<int>(std::ceil(ratio - 1e-9)));
}

BigInt pipeline_radix(std::size_t n, int k, int f_exp, const BigInt& max_value, int d) {
    BigInt p = 0;
    if (n > 1) {
        const double raw = k * std::ldexp(1.0, f_exp) * std::log2(static_cast<double>(n));
        p = BigInt(static_cast<std::uint64_t>(std::ceil(raw - 1e-9)));
    }
    return std::max(p, smallest_radix(k, max_value, d));
}

SmallKSumReduction::SmallKSumReduction(const KSumInstance& inst, int f_exp)
    : source_(inst), node_graph_(ksum_to_nodeweight(inst)) {
    const int k = inst.k();
    if (k < 2) throw UnsupportedArity("the clique pipeline needs k >= 2");
    if (f_exp < 1) throw ParameterError("f exponent must be at least 1");
    if (inst.range().lo < 0) throw ParameterError("numbers must lie in [0, n^f]");
    const std::size_t n = inst.size();
    const BigInt limit = ipow(BigInt(n), static_cast<unsigned>(f_exp));
    if (inst.range().hi > limit)
        throw ParameterError("numbers exceed n^f; apply ksum_mod_reduce first");

    params_.f_exp = f_exp;
    params_.max_value = inst.range().hi;
    params_.d = pipeline_dimension(n);
    params_.p = pipeline_radix(n, k, f_exp, params_.max_value, params_.d);
    params_.edge_bound = edge_weight_bound(k, params_.d, params_.p);

    edge_stage_ = nodeweight_to_edgeweight(node_graph_, params_.p, params_.d);
    params_.s = edge_stage_.params["s"].get<std::size_t>();
    params_.s_feasible = edge_stage_.items.size();
    for (const auto& [g, prov] : edge_stage_.items) families_.emplace_back(g, params_.edge_bound);
    params_.alpha_count = alpha_tuple_count(slot_pairs(k).size(), params_.edge_bound);
    params_.instance_count = params_.alpha_count * params_.s_feasible;
}

BigInt SmallKSumReduction::merged_vertex_count() const {
    return params_.instance_count * source_.k() * source_.size();
}

MergedClique SmallKSumReduction::merge(std::size_t vertex_budget) const {
    if (merged_vertex_count() > vertex_budget)
        throw ResourceError("merged graph would have " + merged_vertex_count().str() + " vertices");
    ReducedCollection<CliqueInstance> coll;
    coll.reduction = "smallksum_to_kclique";
    coll.source_digest = content_digest(source_);
    for (std::size_t f = 0; f < families_.size(); ++f) {
        const auto& base = edge_stage_.items[f].second;
        families_[f].for_each_alpha([&](const AlphaFamily::Alpha& a) {
            Provenance prov;
            prov.carry_index = base.carry_index;
            prov.gamma = base.gamma;
            prov.alpha = std::vector<BigInt>(a.begin(), a.end());
            coll.items.emplace_back(families_[f].instance(a), std::move(prov));
            return true;
        });
    }
    return merge_clique_instances(coll, source_.k());
}

void SmallKSumReduction::for_each_candidate(
    const std::function<bool(std::size_t, const AlphaFamily::Alpha&)>& fn) const {
    for (std::size_t f = 0; f < families_.size(); ++f) {
        bool go = true;
        families_[f].for_each_supported_alpha([&](const AlphaFamily::Alpha& a) {
            go = fn(f, a);
            return go;
        });
        if (!go) return;
    }
}

Witness SmallKSumReduction::lift(std::size_t family, const AlphaFamily::Alpha& alpha,
                                 const Witness& w) const {
    Witness out = families_.at(family).lift(alpha, w);
    std::sort(out.begin(), out.end());
    if (!verify_witness(source_, out)) throw Error("lifted indices do not solve the k-SUM source");
    return out;
}

Witness SmallKSumReduction::lift_merged(const MergedClique& merged, const Witness& w) const {
    const auto [c, local] = merged.locate(w);
    const auto& prov = merged.components[c];
    std::size_t family = 0;
    while (family < edge_stage_.items.size() &&
           edge_stage_.items[family].second.carry_index != prov.carry_index)
        ++family;
    if (family == edge_stage_.items.size() || !prov.alpha)
        throw MalformedWitness("component provenance does not name a carry tuple");
    AlphaFamily::Alpha alpha;
    for (const auto& x : *prov.alpha) alpha.push_back(x.convert_to<std::int64_t>());
    return lift(family, alpha, local);
}

}  // namespace ksumred
