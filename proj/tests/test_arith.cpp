#include <doctest.h>

#include <numeric>

#include "fmoments/arith.hpp"
#include "oracles.hpp"

using namespace fmoments;

TEST_CASE("primes_up_to agrees with trial division") {
    CHECK(primes_up_to(1).primes.empty());
    CHECK(primes_up_to(11).primes == std::vector<u64>{2, 3, 5, 7, 11});
    const auto table = primes_up_to(97);
    CHECK(table.primes.size() == 25);
    CHECK(table.primes.back() == 97);
    const auto big = primes_up_to(5000);
    for (u64 n = 0; n <= 5000; ++n) {
        CHECK(big.contains(n) == oracle::trial_prime(n));
        CHECK(is_prime(n) == oracle::trial_prime(n));
    }
}

TEST_CASE("factorize") {
    CHECK(factorize(1).empty());
    CHECK_THROWS(factorize(0));
    const auto f28 = factorize(28);
    REQUIRE(f28.size() == 2);
    CHECK(f28[0].prime == 2);
    CHECK(f28[0].exponent == 2);
    CHECK(f28[1].prime == 7);
    CHECK(f28[1].exponent == 1);
    const auto f484 = factorize(484);
    REQUIRE(f484.size() == 2);
    CHECK(f484[1].prime == 11);
    CHECK(f484[1].exponent == 2);
    for (u64 n = 1; n < 3000; ++n) {
        const auto got = factorize(n);
        const auto want = oracle::trial_factor(n);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].prime == want[i].first);
            CHECK(got[i].exponent == want[i].second);
        }
    }
    CHECK(is_prime(4294967291ULL));
    CHECK_FALSE(is_prime(4294967297ULL));
}

TEST_CASE("mobius and phi from their definitions") {
    for (u64 n = 1; n < 500; ++n) {
        int mu = 1;
        for (auto [p, e] : oracle::trial_factor(n)) mu = e > 1 ? 0 : -mu;
        CHECK(mobius(n) == mu);
        u64 phi = 0;
        for (u64 k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
        CHECK(euler_phi(n) == phi);
    }
}

TEST_CASE("index_gamma0") {
    CHECK(index_gamma0(1) == 1);
    CHECK(index_gamma0(28) == 48);
    CHECK(index_gamma0(100) == 180);
    SUBCASE("multiplicative on coprime arguments") {
        for (u64 a = 1; a < 60; ++a)
            for (u64 b = 1; b < 60; ++b)
                if (std::gcd(a, b) == 1) CHECK(index_gamma0(a * b) == index_gamma0(a) * index_gamma0(b));
    }
    SUBCASE("prime powers: p^k (1 + 1/p)") {
        for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL})
            for (u64 q = p; q < 10000; q *= p) CHECK(index_gamma0(q) == q + q / p);
    }
}

TEST_CASE("kronecker_symbol") {
    CHECK(kronecker_symbol(5, 1) == 1);
    CHECK(kronecker_symbol(5, 2) == -1);
    CHECK(kronecker_symbol(5, 10) == 0);
    SUBCASE("matches Euler's criterion at odd primes") {
        for (u64 p : primes_up_to(200).primes) {
            if (p == 2) continue;
            for (long a = -60; a <= 60; ++a) CHECK(kronecker_symbol(a, static_cast<i64>(p)) == oracle::legendre(a, p));
        }
    }
    SUBCASE("completely multiplicative in the bottom argument") {
        for (i64 d : {-4, -3, 5, 8, 12, -7, 13})
            for (i64 a = 1; a < 40; ++a)
                for (i64 b = 1; b < 40; ++b)
                    CHECK(kronecker_symbol(d, a * b) == kronecker_symbol(d, a) * kronecker_symbol(d, b));
    }
    SUBCASE("values at 2 for discriminants") {
        CHECK(kronecker_symbol(1, 2) == 1);   // 1 = 1 mod 8
        CHECK(kronecker_symbol(-3, 2) == -1); // 5 mod 8
        CHECK(kronecker_symbol(-4, 2) == 0);
    }
}

TEST_CASE("sturm_bound") {
    CHECK(sturm_bound(3, SturmConfig::sharp(LevelModel::Natural), 7) == 14);
    CHECK(sturm_bound(3, SturmConfig::sharp(LevelModel::Safe), 7) == 98);
    CHECK(sturm_bound(5, SturmConfig::conservative(LevelModel::Safe), 5) == 165);
    CHECK(sturm_bound(3, SturmConfig::sharp(LevelModel::Safe), 5) == 52);
    CHECK(sturm_bound_at_level(11, BoundMode::Sharp24, 25) == 172);
    CHECK(sturm_bound(1, SturmConfig::custom(BoundMode::Sharp24, 1), 1) == 1);  // clamp: floor(3*6/24) = 0
    CHECK(sturm_bound_at_level(3, BoundMode::Conservative12, 7) ==
          2 * sturm_bound_at_level(3, BoundMode::Sharp24, 7));
    CHECK_THROWS_AS(sturm_bound(4, SturmConfig{}, 7), std::invalid_argument);
    CHECK_THROWS_AS(sturm_bound(3, SturmConfig{}, 9), std::invalid_argument);
    CHECK(resolve_level(SturmConfig::custom(BoundMode::Sharp24, 25), 5) == 25);
    CHECK(parse_bound_mode("sharp24") == BoundMode::Sharp24);
    CHECK(parse_bound_mode("conservative12") == BoundMode::Conservative12);
    CHECK_THROWS(parse_bound_mode("sharp"));
    CHECK(to_string(LevelModel::Safe) == "safe");
}

TEST_CASE("pow_mod") {
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(4294967290ULL, 2, 4294967291ULL) == 1);
    CHECK(pow_mod(7, 0, 13) == 1);
}
