#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace coprime {

/// Raised when a prime index or integer lies beyond the sieved range.
class SieveRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Least-prime-factor sieve over [2, limit] with prime listing and pi(x).
///
/// Prime indices are 1-based throughout the library: nth_prime(1) == 2.
/// Immutable after construction.
class PrimeTable {
public:
    explicit PrimeTable(std::int64_t limit);

    /// Smallest table whose primes include p_m (sieves with a little slack).
    static PrimeTable covering_index(std::int64_t m);

    std::int64_t limit() const noexcept { return limit_; }
    std::span<const std::int64_t> primes() const noexcept { return primes_; }
    std::int64_t prime_count() const noexcept { return static_cast<std::int64_t>(primes_.size()); }

    /// p_m, 1-based. Throws SieveRangeError if m exceeds the sieve.
    std::int64_t nth_prime(std::int64_t m) const;

    /// Number of primes <= x. pi(0) = pi(1) = 0.
    std::int64_t pi(std::int64_t x) const;

    /// Least prime factor of v for 2 <= v <= limit.
    std::int64_t lpf(std::int64_t v) const;

    bool is_prime(std::int64_t v) const;

    /// 1-based index of prime p (p must be prime and sieved).
    std::int64_t index_of(std::int64_t p) const;

    /// Distinct prime divisors of v in ascending order (empty for v = 1).
    std::vector<std::int64_t> prime_support(std::int64_t v) const;

private:
    void require(std::int64_t v) const;

    std::int64_t limit_;
    std::vector<std::int32_t> lpf_;
    std::vector<std::int64_t> primes_;
};

/// Sieve bound large enough for p_m: m(ln m + ln ln m) for m >= 6, plus slack.
std::int64_t nth_prime_upper_bound(std::int64_t m);

struct GapScanResult {
    std::int64_t m_max = 0;
    std::int64_t min_lower_gap = 0;    ///< min of p_{2m} - 2 p_m
    std::int64_t argmin_lower = 0;
    std::int64_t min_upper_gap = 0;    ///< min of 3 p_m - p_{2m}
    std::int64_t argmin_upper = 0;

    bool strict() const noexcept { return min_lower_gap >= 1 && min_upper_gap >= 1; }
};

/// Minima of p_{2m} - 2p_m and 3p_m - p_{2m} over 2 <= m <= m_max.
GapScanResult gap_scan(const PrimeTable& table, std::int64_t m_max);

} // namespace coprime

namespace coprime {

/// p_m from a process-wide table that re-sieves on demand. Thread-safe.
std::int64_t nth_prime(std::int64_t m);

/// Shared table whose limit is at least `limit` (grown and cached on demand).
std::shared_ptr<const PrimeTable> shared_primes(std::int64_t limit);

} // namespace coprime
