#include "ksumred/backward.hpp"

#include "ksumred/errors.hpp"
#include "ksumred/sumfree.hpp"

#include <algorithm>

namespace ksumred {

namespace {

// 0-based position of 1-based coordinate c.
constexpr std::size_t coord(std::size_t c) { return c - 1; }

std::vector<BigInt> sumfree_codes(std::size_t n, int k, SumFreeSource source) {
    if (n == 0) return {};
    if (source == SumFreeSource::Greedy) {
        if (n > 64) throw ParameterError("greedy sum-free sets are limited to n <= 64");
        return greedy_sumfree(n, k);
    }
    return behrend_sumfree(n, k).elements;
}

}  // namespace

CliqueToVectorSum clique_to_vectorsum(const CliqueInstance& g, SumFreeSource source) {
    if (g.k() < 2) throw UnsupportedArity("clique to vector-sum needs k >= 2");
    return clique_to_vectorsum(g, sumfree_codes(g.n(), g.k(), source));
}

CliqueToVectorSum clique_to_vectorsum(const CliqueInstance& g, std::vector<BigInt> codes) {
    const int k = g.k();
    if (k < 2) throw UnsupportedArity("clique to vector-sum needs k >= 2");
    const std::size_t n = g.n();
    const std::size_t uk = static_cast<std::size_t>(k);
    if (codes.size() != n) throw ParameterError("need one code per vertex");
    for (const auto& c : codes)
        if (c < 0) throw ParameterError("codes must be nonnegative");
    if (!verify_sumfree(codes, k)) throw ParameterError("codes are not k-sum-free");

    CliqueEncoding enc;
    enc.k = k;
    enc.k_prime = k + k * (k - 1) / 2;
    enc.codes = std::move(codes);
    enc.Q = enc.codes.empty() ? BigInt(0) : *std::max_element(enc.codes.begin(), enc.codes.end());
    enc.T = enc.Q * (k - 1) + 1;
    enc.dim = uk * uk + uk + 1;
    const std::size_t last = enc.dim;

    std::vector<std::vector<BigInt>> vectors;
    std::vector<VectorOrigin> origins;
    vectors.reserve(uk * n + uk * (uk - 1) * g.graph().m());
    for (std::size_t v = 0; v < n; ++v)
        for (int i = 1; i <= k; ++i) {
            std::vector<BigInt> eta(enc.dim, 0);
            eta[coord(i)] = enc.T - enc.codes[v] * (k - 1);
            eta[coord(last)] = 1;
            vectors.push_back(std::move(eta));
            origins.push_back({true, v, v, i, i});
        }
    for (const auto& e : g.graph().edges())
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
                for (int orient = 0; orient < 2; ++orient) {
                    const std::size_t a = orient == 0 ? e.u : e.v;
                    const std::size_t b = orient == 0 ? e.v : e.u;
                    std::vector<BigInt> eta(enc.dim, 0);
                    eta[coord(i)] = enc.codes[a];
                    eta[coord(j)] = enc.codes[b];
                    eta[coord(uk * i + j)] = 1;
                    vectors.push_back(std::move(eta));
                    origins.push_back({false, a, b, i, j});
                }

    std::vector<BigInt> target(enc.dim, 0);
    target[coord(last)] = k;
    for (int i = 1; i <= k; ++i) target[coord(i)] = enc.T;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) target[coord(uk * i + j)] = 1;

    VectorSumInstance inst(enc.k_prime, enc.dim, std::move(vectors), std::move(target),
                           Bounds{0, enc.T});
    return CliqueToVectorSum{g, std::move(enc), std::move(inst), std::move(origins), n < uk};
}

Witness lift_vectorsum_witness_to_clique(const CliqueToVectorSum& red, const Witness& w) {
    if (!verify_witness(red.instance, w))
        throw MalformedWitness("witness does not solve the vector-sum instance");
    const int k = red.encoding.k;
    std::vector<std::optional<std::size_t>> slot_vertex(k + 1);
    std::vector<std::vector<const VectorOrigin*>> pair_edges(static_cast<std::size_t>(k) * k + k + 1);
    std::size_t vertex_vectors = 0;
    for (auto idx : w) {
        const auto& o = red.origins[idx];
        if (o.is_vertex) {
            ++vertex_vectors;
            if (slot_vertex[o.slot_i]) throw Error("two vertex vectors share slot " + std::to_string(o.slot_i));
            slot_vertex[o.slot_i] = o.first;
        } else {
            pair_edges[static_cast<std::size_t>(k) * o.slot_i + o.slot_j].push_back(&o);
        }
    }
    if (vertex_vectors != static_cast<std::size_t>(k)) throw Error("witness does not hold k vertex vectors");
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            const auto& list = pair_edges[static_cast<std::size_t>(k) * i + j];
            if (list.size() != 1) throw Error("slot pair without exactly one edge vector");
            // Sum-free deduction: the edge endpoints carry the slot vertices' codes.
            const auto& codes = red.encoding.codes;
            if (codes[list[0]->first] != codes[*slot_vertex[i]] ||
                codes[list[0]->second] != codes[*slot_vertex[j]])
                throw Error("edge vector codes disagree with the slot vertices");
        }
    Witness out;
    for (int i = 1; i <= k; ++i) out.push_back(*slot_vertex[i]);
    if (!verify_witness(red.source, out)) throw Error("decoded vertices do not form a k-clique");
    return out;
}

BigInt pack_vector(const std::vector<BigInt>& v, const std::vector<BigInt>& radices) {
    if (v.size() != radices.size()) throw ParameterError("vector and radix lengths differ");
    BigInt x = 0;
    for (std::size_t j = v.size(); j-- > 0;) x = x * radices[j] + v[j];
    return x;
}

std::vector<BigInt> unpack_vector(const BigInt& x, const std::vector<BigInt>& radices) {
    if (x < 0) throw RangeError("packed value must be nonnegative");
    std::vector<BigInt> v(radices.size());
    BigInt rest = x;
    for (std::size_t j = 0; j < radices.size(); ++j) {
        v[j] = rest % radices[j];
        rest /= radices[j];
    }
    if (rest != 0) throw RangeError("packed value exceeds the radix product");
    return v;
}

KSumInstance pack_vectorsum(const VectorSumInstance& inst, const std::vector<BigInt>& radices) {
    if (radices.size() != inst.dim()) throw ParameterError("one radix per coordinate required");
    const int k = inst.k();
    for (std::size_t j = 0; j < inst.dim(); ++j) {
        BigInt top = 0;
        for (const auto& v : inst.vectors()) {
            if (v[j] < 0) throw ParameterError("packing needs nonnegative entries; shift first");
            top = std::max(top, v[j]);
        }
        if (top * k >= radices[j] || inst.target()[j] < 0 || inst.target()[j] >= radices[j])
            throw ParameterError("radix of coordinate " + std::to_string(j + 1) + " admits carries");
    }
    std::vector<BigInt> numbers;
    numbers.reserve(inst.size());
    for (const auto& v : inst.vectors()) numbers.push_back(pack_vector(v, radices));
    BigInt prod = 1;
    for (const auto& r : radices) prod *= r;
    return KSumInstance(k, std::move(numbers), pack_vector(inst.target(), radices), Bounds{0, prod - 1});
}

KSumInstance vectorsum_to_ksum(const VectorSumInstance& inst) {
    if (inst.entry_range().lo < 0) throw ParameterError("packing needs entries in [0, M]; shift first");
    const BigInt& M = inst.entry_range().hi;
    const BigInt kM = M * inst.k();
    for (const auto& t : inst.target())
        if (t < 0 || t > kM) throw ParameterError("target entries must lie in [0, kM]");
    return pack_vectorsum(inst, std::vector<BigInt>(inst.dim(), kM + 1));
}

CliqueToKSum kclique_to_ksum(const CliqueInstance& g, RadixMode mode, SumFreeSource source) {
    auto vec = clique_to_vectorsum(g, source);
    const auto& enc = vec.encoding;
    const BigInt wide = enc.T * enc.k_prime + 1;
    std::vector<BigInt> radices(enc.dim, wide);
    if (mode == RadixMode::Mixed)
        for (std::size_t j = static_cast<std::size_t>(enc.k); j < enc.dim; ++j)
            radices[j] = BigInt(enc.k_prime) * enc.k + 1;
    auto inst = pack_vectorsum(vec.instance, radices);
    return CliqueToKSum{std::move(vec), mode, std::move(radices), std::move(inst)};
}

Witness lift_ksum_witness_to_clique(const CliqueToKSum& red, const Witness& w) {
    if (!verify_witness(red.instance, w)) throw MalformedWitness("witness does not solve the k-SUM instance");
    // Carry-free packing keeps indices, so the same set solves the vector instance.
    return lift_vectorsum_witness_to_clique(red.vec, w);
}

ordered_json encoding_to_json(const CliqueToVectorSum& red) {
    ordered_json j;
    j["k"] = red.encoding.k;
    j["k_prime"] = red.encoding.k_prime;
    ordered_json codes = ordered_json::array();
    for (const auto& c : red.encoding.codes) codes.push_back(to_decimal(c));
    j["vertex_codes"] = std::move(codes);
    j["Q"] = to_decimal(red.encoding.Q);
    j["T"] = to_decimal(red.encoding.T);
    j["dim"] = red.encoding.dim;
    ordered_json origins = ordered_json::array();
    for (const auto& o : red.origins) {
        if (o.is_vertex)
            origins.push_back({"vertex", o.first, o.slot_i});
        else
            origins.push_back({"edge", o.first, o.second, o.slot_i, o.slot_j});
    }
    j["origins"] = std::move(origins);
    j["trivially_unsolvable"] = red.trivially_unsolvable;
    return j;
}

}  // namespace ksumred
