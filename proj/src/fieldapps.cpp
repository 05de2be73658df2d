#include "ksumred/fieldapps.hpp"

#include "ksumred/errors.hpp"
#include "ksumred/serialize.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace ksumred {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

ReducedCollection<KSumInstance> targetsum_to_ksum(const TargetSumInstance& inst) {
    ReducedCollection<KSumInstance> out;
    out.reduction = "targetsum_to_ksum";
    out.source_digest = content_digest(inst);
    out.params["q"] = to_decimal(inst.q());
    for (int i = 0; i < inst.k(); ++i) {
        Provenance prov;
        prov.offset = std::vector<BigInt>{inst.q() * i};
        out.items.emplace_back(
            KSumInstance(inst.k(), inst.elements(), inst.z() + inst.q() * i, Bounds{0, inst.q() - 1}),
            std::move(prov));
    }
    return out;
}

TargetSumInstance ksum_to_targetsum(const KSumInstance& inst) {
    if (inst.range().lo < 0) throw ParameterError("numbers must lie in [0, M]; normalize first");
    const BigInt kM = inst.range().hi * inst.k();
    const BigInt& t = inst.target();
    if (t < 0 || t > kM) return TargetSumInstance(kM + 2, inst.numbers(), inst.k(), kM + 1);
    return TargetSumInstance(std::max(kM + 1, BigInt(2)), inst.numbers(), inst.k(), t);
}

ReducedCollection<VectorSumInstance> lindep_to_vectorsum(const LinDepInstance& inst, std::uint64_t budget) {
    const std::int64_t q = inst.q();
    const std::size_t dim = inst.dim();
    const int k = inst.k();
    const BigInt count = ipow(BigInt(k), static_cast<unsigned>(dim));
    if (count * q * inst.size() > budget)
        throw ResourceError("LinDependence expansion needs " + (count * q * inst.size()).str() +
                            " vector slots, budget " + std::to_string(budget));

    ReducedCollection<VectorSumInstance> out;
    out.reduction = "lindep_to_vectorsum";
    out.source_digest = content_digest(inst);
    out.params["q"] = q;
    out.params["instances"] = to_decimal(count);
    if (inst.size() < static_cast<std::size_t>(k)) {
        Provenance prov;
        prov.note = "fewer than k vectors";
        out.skipped.push_back(std::move(prov));
        return out;
    }

    std::vector<std::vector<BigInt>> items;
    items.reserve(inst.size() * static_cast<std::size_t>(q));
    for (const auto& x : inst.vectors())
        for (std::int64_t c = 0; c < q; ++c) {
            std::vector<BigInt> v(dim);
            for (std::size_t j = 0; j < dim; ++j) v[j] = c * x[j] % q;
            items.push_back(std::move(v));
        }

    std::vector<int> shift(dim, 0);
    for (;;) {
        std::vector<BigInt> target(dim);
        for (std::size_t j = 0; j < dim; ++j) target[j] = BigInt(inst.z()[j]) + BigInt(q) * shift[j];
        Provenance prov;
        std::vector<BigInt> offset(dim);
        for (std::size_t j = 0; j < dim; ++j) offset[j] = BigInt(q) * shift[j];
        prov.offset = std::move(offset);
        out.items.emplace_back(VectorSumInstance(k, dim, items, std::move(target), Bounds{0, q - 1}),
                               std::move(prov));
        std::size_t pos = dim;
        while (pos > 0 && shift[pos - 1] == k - 1) shift[--pos] = 0;
        if (pos == 0) break;
        ++shift[pos - 1];
    }
    return out;
}

LinDepLift lift_lindep_witness(const LinDepInstance& inst, const Witness& w) {
    const auto q = static_cast<std::size_t>(inst.q());
    if (w.size() != static_cast<std::size_t>(inst.k())) throw MalformedWitness("witness must have k items");
    LinDepLift out;
    std::vector<std::int64_t> acc(inst.dim(), 0);
    std::set<std::size_t> used;
    for (auto item : w) {
        const std::size_t i = item / q;
        const auto c = static_cast<std::int64_t>(item % q);
        if (i >= inst.size()) throw MalformedWitness("expanded item index out of range");
        out.combination.emplace_back(i, c);
        used.insert(i);
        for (std::size_t j = 0; j < inst.dim(); ++j) acc[j] = (acc[j] + c * inst.vectors()[i][j]) % inst.q();
    }
    if (acc != inst.z()) throw MalformedWitness("combination does not equal z over F_q");
    // The same vector under two scalings is one coefficient; any k distinct
    // vectors containing the used ones span z as well.
    for (std::size_t i = 0; used.size() < static_cast<std::size_t>(inst.k()) && i < inst.size(); ++i)
        used.insert(i);
    out.indices.assign(used.begin(), used.end());
    if (!verify_witness(inst, out.indices)) throw Error("lifted index set does not span z");
    return out;
}

SolverReport solve_targetsum_bruteforce(const TargetSumInstance& inst, std::uint64_t budget) {
    const auto start = Clock::now();
    SolverReport rep;
    rep.solver = "brute";
    const std::size_t n = inst.size();
    const int k = inst.k();
    if (n >= static_cast<std::size_t>(k)) {
        const BigInt count = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
        if (count > budget) throw ResourceError("brute-force TargetSum exceeds its budget");
        for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
            ++rep.stats.candidates_examined;
            BigInt sum = 0;
            for (auto i : idx) sum += inst.elements()[i];
            if (sum % inst.q() != inst.z()) return true;
            rep.solvable = true;
            rep.witness = idx;
            return false;
        });
    }
    rep.stats.wall_seconds = seconds_since(start);
    return rep;
}

SolverReport solve_lindep_bruteforce(const LinDepInstance& inst, std::uint64_t budget) {
    const auto start = Clock::now();
    SolverReport rep;
    rep.solver = "brute";
    const std::size_t n = inst.size();
    const int k = inst.k();
    if (n >= static_cast<std::size_t>(k)) {
        const BigInt count = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
        if (count > budget) throw ResourceError("brute-force LinDependence exceeds its budget");
        for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
            ++rep.stats.candidates_examined;
            std::vector<std::vector<std::int64_t>> chosen;
            for (auto i : idx) chosen.push_back(inst.vectors()[i]);
            if (!span_contains(chosen, inst.z(), inst.q())) return true;
            rep.solvable = true;
            rep.witness = idx;
            return false;
        });
    }
    rep.stats.wall_seconds = seconds_since(start);
    return rep;
}

}  // namespace ksumred
