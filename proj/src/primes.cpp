#include "coprime_ramsey/primes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

namespace coprime {

PrimeTable::PrimeTable(std::int64_t limit) : limit_(limit)
{
    if (limit < 2)
        throw std::invalid_argument("PrimeTable: limit must be at least 2, got " + std::to_string(limit));
    if (limit > std::numeric_limits<std::int32_t>::max())
        throw std::invalid_argument("PrimeTable: limit exceeds 32-bit lpf storage");

    // Linear sieve: every composite is struck exactly once by its least prime factor.
    lpf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (lpf_[i] == 0) {
            lpf_[i] = static_cast<std::int32_t>(i);
            primes_.push_back(i);
        }
        for (std::int64_t p : primes_) {
            if (p > lpf_[i] || p * i > limit)
                break;
            lpf_[p * i] = static_cast<std::int32_t>(p);
        }
    }
}

std::int64_t nth_prime_upper_bound(std::int64_t m)
{
    if (m < 6)
        return 15;
    const double x = static_cast<double>(m);
    return static_cast<std::int64_t>(std::ceil(x * (std::log(x) + std::log(std::log(x))))) + 16;
}

PrimeTable PrimeTable::covering_index(std::int64_t m)
{
    if (m < 1)
        throw std::invalid_argument("prime index must be positive, got " + std::to_string(m));
    PrimeTable table(nth_prime_upper_bound(m));
    if (table.prime_count() < m)
        throw std::logic_error("nth_prime_upper_bound too small for m = " + std::to_string(m));
    return table;
}

void PrimeTable::require(std::int64_t v) const
{
    if (v > limit_)
        throw SieveRangeError("value " + std::to_string(v) + " exceeds sieve limit " + std::to_string(limit_)
                              + "; re-sieve with a larger limit");
}

std::int64_t PrimeTable::nth_prime(std::int64_t m) const
{
    if (m < 1)
        throw std::invalid_argument("prime index must be positive, got " + std::to_string(m));
    if (m > prime_count())
        throw SieveRangeError("p_" + std::to_string(m) + " lies beyond the sieve (limit " + std::to_string(limit_)
                              + ", " + std::to_string(prime_count()) + " primes); re-sieve");
    return primes_[static_cast<std::size_t>(m - 1)];
}

std::int64_t PrimeTable::pi(std::int64_t x) const
{
    if (x < 2)
        return 0;
    require(x);
    return std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin();
}

std::int64_t PrimeTable::lpf(std::int64_t v) const
{
    if (v < 2)
        throw std::invalid_argument("lpf undefined for " + std::to_string(v));
    require(v);
    return lpf_[static_cast<std::size_t>(v)];
}

bool PrimeTable::is_prime(std::int64_t v) const
{
    return v >= 2 && lpf(v) == v;
}

std::int64_t PrimeTable::index_of(std::int64_t p) const
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    return pi(p);
}

std::vector<std::int64_t> PrimeTable::prime_support(std::int64_t v) const
{
    if (v < 1)
        throw std::invalid_argument("prime_support needs a positive integer");
    std::vector<std::int64_t> out;
    while (v > 1) {
        const std::int64_t p = lpf(v);
        out.push_back(p);
        while (v % p == 0)
            v /= p;
    }
    return out;
}

GapScanResult gap_scan(const PrimeTable& table, std::int64_t m_max)
{
    if (m_max < 2)
        throw std::invalid_argument("gap_scan needs m_max >= 2");
    if (2 * m_max > table.prime_count())
        throw SieveRangeError("gap_scan: p_" + std::to_string(2 * m_max) + " is not sieved");

    GapScanResult r;
    r.m_max = m_max;
    r.min_lower_gap = std::numeric_limits<std::int64_t>::max();
    r.min_upper_gap = std::numeric_limits<std::int64_t>::max();
    const auto primes = table.primes();
    for (std::int64_t m = 2; m <= m_max; ++m) {
        const std::int64_t pm = primes[m - 1];
        const std::int64_t p2m = primes[2 * m - 1];
        const std::int64_t lower = p2m - 2 * pm;
        const std::int64_t upper = 3 * pm - p2m;
        if (lower < r.min_lower_gap) {
            r.min_lower_gap = lower;
            r.argmin_lower = m;
        }
        if (upper < r.min_upper_gap) {
            r.min_upper_gap = upper;
            r.argmin_upper = m;
        }
    }
    return r;
}

std::shared_ptr<const PrimeTable> shared_primes(std::int64_t limit)
{
    static std::mutex mutex;
    static std::shared_ptr<const PrimeTable> cache;
    std::lock_guard lock(mutex);
    if (!cache || cache->limit() < limit) {
        const std::int64_t grown = std::max<std::int64_t>({limit, 1 << 16, cache ? 2 * cache->limit() : 0});
        cache = std::make_shared<const PrimeTable>(grown);
    }
    return cache;
}

std::int64_t nth_prime(std::int64_t m)
{
    if (m < 1)
        throw std::invalid_argument("prime index must be positive, got " + std::to_string(m));
    auto table = shared_primes(2);
    if (table->prime_count() < m)
        table = shared_primes(nth_prime_upper_bound(m));
    return table->nth_prime(m);
}

} // namespace coprime
