#include "doctest.h"
#include "../oracles.hpp"

#include "coprime_ramsey/primes.hpp"

#include <stdexcept>

using namespace coprime;

TEST_CASE("sieve agrees with trial division")
{
    const PrimeTable t(5000);
    for (std::int64_t v = 0; v <= 5000; ++v)
        CHECK(t.is_prime(v) == oracle::is_prime(v));
    for (std::int64_t x : {0, 1, 2, 3, 10, 100, 997, 1000, 4999, 5000})
        CHECK(t.pi(x) == oracle::pi(x));
    for (std::int64_t m = 1; m <= 300; ++m)
        CHECK(t.nth_prime(m) == oracle::nth_prime(m));
}

TEST_CASE("least prime factor and support")
{
    const PrimeTable t(1000);
    CHECK(t.lpf(2) == 2);
    CHECK(t.lpf(91) == 7);
    CHECK(t.lpf(997) == 997);
    CHECK(t.prime_support(1).empty());
    CHECK(t.prime_support(360) == std::vector<std::int64_t>{2, 3, 5});
    CHECK(t.prime_support(997) == std::vector<std::int64_t>{997});
    CHECK(t.index_of(2) == 1);
    CHECK(t.index_of(13) == 6);
}

TEST_CASE("prime table error paths")
{
    CHECK_THROWS_AS(PrimeTable(1), std::invalid_argument);
    const PrimeTable t(100);
    CHECK_THROWS_AS(t.nth_prime(0), std::invalid_argument);
    CHECK_THROWS_AS(t.nth_prime(26), SieveRangeError);
    CHECK_THROWS_AS(t.lpf(101), SieveRangeError);
    CHECK_THROWS_AS(t.index_of(4), std::invalid_argument);
}

TEST_CASE("covering_index and the global table")
{
    for (std::int64_t m : {1, 5, 6, 7, 100, 1998, 20000}) {
        const auto t = PrimeTable::covering_index(m);
        CHECK(t.prime_count() >= m);
    }
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(6) == 13);
    CHECK(nth_prime(18) == 61);
    CHECK(nth_prime(1998) == 17383);
    CHECK(nth_prime(100000) == 1299709);
    CHECK(shared_primes(50)->limit() >= 50);
}

TEST_CASE("gap scan over a small range")
{
    const auto t = PrimeTable::covering_index(2000);
    const auto g = gap_scan(t, 1000);
    CHECK(g.min_lower_gap == 1);
    CHECK(g.argmin_lower == 2);
    CHECK(g.min_upper_gap == 2);
    CHECK(g.argmin_upper == 2);
    CHECK(g.strict());

    // independent recomputation
    std::int64_t lo = 1 << 30, hi = 1 << 30;
    for (std::int64_t m = 2; m <= 200; ++m) {
        lo = std::min(lo, oracle::nth_prime(2 * m) - 2 * oracle::nth_prime(m));
        hi = std::min(hi, 3 * oracle::nth_prime(m) - oracle::nth_prime(2 * m));
    }
    const auto g200 = gap_scan(t, 200);
    CHECK(g200.min_lower_gap == lo);
    CHECK(g200.min_upper_gap == hi);

    CHECK_THROWS(gap_scan(t, 5000));
}
