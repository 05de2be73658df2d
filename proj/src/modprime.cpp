#include "ksumred/modprime.hpp"

#include "ksumred/errors.hpp"
#include "ksumred/serialize.hpp"

#include <array>

namespace ksumred {

namespace {

using boost::multiprecision::powm;

// 3.317e24: below this the first 13 prime bases are a proven witness set.
const BigInt kDeterministicLimit("3317044064679887385961981");

bool strong_probable_prime(const BigInt& n, const BigInt& base, const BigInt& d, unsigned s) {
    BigInt x = powm(base, d, n);
    const BigInt n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n_minus_1) return true;
        if (x == 1) return false;
    }
    return false;
}

}  // namespace

bool is_prime(const BigInt& n) {
    static constexpr std::array<unsigned, 13> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    if (n < 2) return false;
    for (unsigned p : kBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    if (n < kDeterministicLimit) {
        for (unsigned p : kBases)
            if (!strong_probable_prime(n, p, d, s)) return false;
        return true;
    }
    Rng rng(static_cast<std::uint64_t>(n & BigInt(0xffffffffffffffffull)));
    for (int round = 0; round < 64; ++round) {
        const BigInt base = 2 + uniform_below(n - 3, rng);
        if (!strong_probable_prime(n, base, d, s)) return false;
    }
    return true;
}

BigInt uniform_below(const BigInt& range, Rng& rng) {
    if (range <= 0) throw RangeError("uniform_below needs a positive range");
    const unsigned bits = bit_length(range - 1);
    if (bits == 0) return 0;
    const unsigned words = (bits + 63) / 64;
    const BigInt mask = (BigInt(1) << bits) - 1;
    for (;;) {
        BigInt x = 0;
        for (unsigned i = 0; i < words; ++i) x = (x << 64) | BigInt(rng());
        x &= mask;
        if (x < range) return x;
    }
}

BigInt random_prime_in(const BigInt& lo, const BigInt& hi, Rng& rng) {
    if (lo < 2 || hi < lo) throw ParameterError("prime interval must satisfy 2 <= lo <= hi");
    const BigInt width = hi - lo + 1;
    for (std::uint64_t draw = 0; draw < kPrimeDrawBudget; ++draw) {
        BigInt candidate = lo + uniform_below(width, rng);
        if (is_prime(candidate)) return candidate;
    }
    throw ParameterError("no prime found in [" + lo.str() + ", " + hi.str() + "] within the draw budget");
}

BigInt prime_range_bound(std::size_t n, int k, const BigInt& max_value, int d_param) {
    const BigInt nk = ipow(BigInt(n), static_cast<unsigned>(k));
    const unsigned log_n = std::max(1u, n >= 1 ? ceil_log2(BigInt(n)) : 1u);
    const BigInt kM = max_value * k;
    const unsigned log_km = std::max(1u, kM >= 1 ? ceil_log2(kM) : 1u);
    return BigInt(d_param) * nk * log_n * log_km;
}

ReducedCollection<KSumInstance> ksum_mod_reduce_with_prime(const KSumInstance& inst,
                                                           const BigInt& prime) {
    if (inst.range().lo < 0) throw ParameterError("modular reduction needs numbers in [0, M]");
    if (prime < 2) throw ParameterError("modulus must be at least 2");
    ReducedCollection<KSumInstance> out;
    out.reduction = "ksum_mod_reduce";
    out.source_digest = content_digest(inst);
    out.params["prime"] = to_decimal(prime);

    std::vector<BigInt> residues;
    residues.reserve(inst.size());
    for (const auto& x : inst.numbers()) residues.push_back(floor_mod(x, prime));
    const BigInt base_target = floor_mod(inst.target(), prime);
    for (int i = 0; i < inst.k(); ++i) {
        Provenance prov;
        prov.prime = prime;
        prov.offset = std::vector<BigInt>{BigInt(i) * prime};
        out.items.emplace_back(
            KSumInstance(inst.k(), residues, base_target + BigInt(i) * prime, Bounds{0, prime - 1}),
            std::move(prov));
    }
    return out;
}

ReducedCollection<KSumInstance> ksum_mod_reduce(const KSumInstance& inst, int d_param, Rng& rng) {
    if (d_param < 1) throw ParameterError("confidence parameter must be at least 1");
    const BigInt bound = prime_range_bound(inst.size(), inst.k(), inst.range().hi, d_param);
    if (bound < 2) throw ParameterError("prime range is empty");
    const BigInt prime = random_prime_in(2, bound, rng);
    auto out = ksum_mod_reduce_with_prime(inst, prime);
    out.params["d_param"] = d_param;
    out.params["bound"] = to_decimal(bound);
    out.params["rng"] = kRngAlgorithm;
    return out;
}

ReducedCollection<KSumInstance> ksum_mod_reduce(const KSumInstance& inst, int d_param,
                                                std::uint64_t seed) {
    Rng rng(seed);
    auto out = ksum_mod_reduce(inst, d_param, rng);
    out.params["seed"] = seed;
    return out;
}

}  // namespace ksumred
