#pragma once

#include "coprime_ramsey/atom_set.hpp"
#include "coprime_ramsey/primes.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace coprime {

/// Coprime graph on the integer interval {shift+1, ..., shift+length}.
///
/// Each vertex carries its prime support as a bitset over prime ranks
/// (rank r <-> p_{r+1}); two vertices are adjacent iff their supports are
/// disjoint, which is the same as gcd = 1. shift = 0 gives G_n.
class IntervalGraph {
public:
    IntervalGraph(std::int64_t shift, std::int64_t length);
    IntervalGraph(std::int64_t shift, std::int64_t length, const PrimeTable& primes);

    std::int64_t shift() const noexcept { return shift_; }
    std::int64_t length() const noexcept { return length_; }
    std::int64_t first() const noexcept { return shift_ + 1; }
    std::int64_t last() const noexcept { return shift_ + length_; }
    bool contains(std::int64_t v) const noexcept { return v >= first() && v <= last(); }

    /// Number of primes <= last(); the width of every support bitset.
    std::size_t atom_count() const noexcept { return primes_.size(); }
    /// Prime with rank r (0-based).
    std::int64_t atom_prime(std::size_t rank) const { return primes_.at(rank); }

    const AtomSet& support(std::int64_t v) const;

    /// Clique label: 1 for vertex 1, otherwise the least prime factor.
    std::int64_t label(std::int64_t v) const;

    /// gcd(a, b) == 1. Throws std::invalid_argument for a == b or out-of-range vertices.
    bool adjacent(std::int64_t a, std::int64_t b) const;

    std::vector<std::int64_t> vertices() const;

private:
    void build(const PrimeTable& primes);

    std::int64_t shift_;
    std::int64_t length_;
    std::vector<std::int64_t> primes_;
    std::vector<std::int64_t> lpf_;
    std::vector<AtomSet> supports_;
};

struct CliqueNumber {
    std::int64_t size = 0;
    std::vector<std::int64_t> witness;   ///< {1} followed by the primes <= n
};

/// omega(G_n) = pi(n) + 1 with the prime clique as witness. Requires shift 0.
CliqueNumber clique_number(const IntervalGraph& g);

using CliqueVisitor = std::function<void(std::span<const std::int64_t>)>;

/// Number of k-vertex pairwise-coprime subsets of the interval.
///
/// Ordered backtracking: a partial clique carries the union of its prime
/// supports and a candidate extends it iff its support misses that union.
/// When a visitor is supplied it sees every clique exactly once, vertices
/// ascending, cliques in lexicographic order. Throws std::overflow_error if
/// the count leaves 64 bits.
std::uint64_t enumerate_coprime_cliques(const IntervalGraph& g, int k, const CliqueVisitor& visitor = {});

/// Same enumeration restricted to a caller-chosen vertex subset of g.
std::uint64_t enumerate_coprime_cliques(const IntervalGraph& g, std::span<const std::int64_t> vertex_subset, int k,
                                        const CliqueVisitor& visitor = {});

struct LabelScan {
    std::int64_t n = 0;
    std::int64_t rank = 0;              ///< pi(n) + 1
    std::uint64_t coprime_edges = 0;
    std::uint64_t collisions = 0;       ///< coprime edges whose endpoints share a label

    bool pass() const noexcept { return collisions == 0; }
};

/// Checks every unordered coprime pair of G_n for equal least-prime-factor labels.
LabelScan label_collision_scan(const IntervalGraph& g);

} // namespace coprime
