#include "oracle.hpp"

#include "ksumred/errors.hpp"
#include "ksumred/generators.hpp"
#include "ksumred/modprime.hpp"

#include <doctest.h>

using namespace ksumred;

namespace {

std::vector<BigInt> nums(std::initializer_list<long long> xs) {
    std::vector<BigInt> out;
    for (auto x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_SUITE("modprime") {
    TEST_CASE("primality examples") {
        CHECK(is_prime(7919));
        CHECK(oracle::trial_division_prime(7919));
        CHECK_FALSE(is_prime(561));
        CHECK_FALSE(oracle::trial_division_prime(561));
        CHECK_FALSE(is_prime(0));
        CHECK_FALSE(is_prime(1));
        CHECK(is_prime(2));
    }

    TEST_CASE("primality matches trial division") {
        for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == oracle::trial_division_prime(n));
        Rng rng(59);
        for (int i = 0; i < 300; ++i) {
            const std::uint64_t n = rng() % 4'000'000'000ull;
            CHECK(is_prime(n) == oracle::trial_division_prime(n));
        }
        // Strong pseudoprimes to several small bases.
        for (std::uint64_t n : {3215031751ull, 2152302898747ull, 3474749660383ull, 341550071728321ull})
            CHECK_FALSE(is_prime(n));
        CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));  // 2^127 - 1
        CHECK_FALSE(is_prime(BigInt("170141183460469231731687303715884105729")));
    }

    TEST_CASE("random_prime_in") {
        Rng rng(61);
        CHECK(random_prime_in(2, 2, rng) == 2);
        for (int i = 0; i < 50; ++i) {
            const auto p = random_prime_in(100, 200, rng);
            CHECK(p >= 100);
            CHECK(p <= 200);
            CHECK(oracle::trial_division_prime(p.convert_to<std::uint64_t>()));
        }
        CHECK_THROWS_AS(random_prime_in(24, 28, rng), ParameterError);
    }

    TEST_CASE("fixed prime examples") {
        const auto a = ksum_mod_reduce_with_prime(KSumInstance(2, nums({2, 9}), 11), 7);
        REQUIRE(a.items.size() == 2);
        CHECK(a.items[0].first.numbers() == nums({2, 2}));
        CHECK(a.items[0].first.target() == 4);
        CHECK(a.items[1].first.target() == 11);
        CHECK(oracle::ksum(a.items[0].first));

        const auto b = ksum_mod_reduce_with_prime(KSumInstance(2, nums({3, 8}), 4), 7);
        CHECK(b.items[0].first.numbers() == nums({3, 1}));
        CHECK(b.items[0].first.target() == 4);
        CHECK(b.items[1].first.target() == 11);
        CHECK(oracle::ksum(b.items[0].first));
        CHECK_FALSE(oracle::ksum(KSumInstance(2, nums({3, 8}), 4)));
    }

    TEST_CASE("large prime is the identity in effect") {
        const KSumInstance x(3, nums({4, 9, 1, 7}), 14, Bounds{0, 10});
        const auto c = ksum_mod_reduce_with_prime(x, 31);
        CHECK(c.items[0].first.numbers() == x.numbers());
        CHECK(oracle::ksum_solutions(c.items[0].first.numbers(), 3, c.items[0].first.target()) ==
              oracle::ksum_solutions(x.numbers(), 3, x.target()));
        for (std::size_t i = 1; i < c.items.size(); ++i) CHECK_FALSE(oracle::ksum(c.items[i].first));
    }

    TEST_CASE("range bound and metadata") {
        CHECK(prime_range_bound(10, 3, 1000000000, 100) == BigInt(100) * 1000 * 4 * 32);
        const auto c = ksum_mod_reduce(KSumInstance(2, nums({5, 6, 7}), 11), 100, 99);
        CHECK(c.params.contains("prime"));
        CHECK(c.params.contains("seed"));
        CHECK(c.params.contains("d_param"));
        CHECK(c.params.contains("bound"));
        CHECK(c.params.contains("rng"));
        const auto again = ksum_mod_reduce(KSumInstance(2, nums({5, 6, 7}), 11), 100, 99);
        CHECK(c.params == again.params);
        CHECK(c.items.size() == again.items.size());
    }

    TEST_CASE("completeness on solvable sources") {
        Rng rng(67);
        for (int trial = 0; trial < 100; ++trial) {
            const int k = 1 + static_cast<int>(rng() % 3);
            const auto x = gen_random_ksum(8, k, 1000000, Plant::Plant, rng());
            REQUIRE(oracle::ksum(x));
            const auto c = ksum_mod_reduce(x, 1, rng());
            bool any = false;
            for (const auto& [y, prov] : c.items) {
                for (const auto& v : y.numbers()) CHECK(v < *prov.prime);
                any = any || oracle::ksum(y);
            }
            CHECK(any);
        }
    }
}
