#pragma once

#include "coprime_ramsey/thresholds.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coprime {

/// A coloring of {shift+1, ..., shift+length} with one witness prime per vertex.
///
/// Colors are 0-based. The witness prime of vertex 1 is 0 (vertex 1 has no
/// prime divisor and is handled by the capacity rule instead).
struct ColoringWitness {
    std::int64_t shift = 0;
    std::int64_t length = 0;
    std::vector<int> colors;
    std::vector<std::int64_t> witness_primes;

    std::int64_t first() const noexcept { return shift + 1; }
    std::int64_t last() const noexcept { return shift + length; }
    int color_of(std::int64_t v) const { return colors.at(static_cast<std::size_t>(v - first())); }
    std::int64_t witness_of(std::int64_t v) const { return witness_primes.at(static_cast<std::size_t>(v - first())); }
    bool has_vertex_one() const noexcept { return shift == 0 && length >= 1; }

    std::vector<std::int64_t> class_sizes(int color_count) const;
    std::vector<std::int64_t> class_members(int color) const;

    /// {"shift":m,"length":n,"colors":[...],"witness_primes":[...]}
    std::string to_json() const;
    static ColoringWitness parse_json(std::string_view text);
};

/// Disjoint prime bins, one per color, with per-bin capacities.
struct BinPartition {
    std::vector<std::vector<std::int64_t>> bins;
    std::vector<std::int64_t> capacities;
    std::optional<int> one_color;   ///< color holding vertex 1, if the host has it

    int color_count() const noexcept { return static_cast<int>(bins.size()); }
    /// Index of the bin holding p, or -1.
    int bin_of(std::int64_t p) const;
};

/// Capacities k_i - 1, with k_i - 2 for the color that holds vertex 1.
std::vector<std::int64_t> bin_capacities(const Demands& d, std::optional<int> one_color);

/// Canonical fill of the primes <= n: ascending primes, bin 0 first up to
/// k_1 - 2, then bins 1..c-1 up to k_i - 1. Throws std::domain_error when
/// pi(n) exceeds the total capacity M - 1 (i.e. n >= p_M).
BinPartition canonical_bins(std::int64_t n, const Demands& d);

/// Bins read off a witness: bin i = witness primes of vertices colored i.
BinPartition bins_from_witness(const ColoringWitness& w, const Demands& d);

struct PrimeBinCertificate {
    ColoringWitness witness;
    BinPartition bins;
};

/// Avoiding coloring of [n] for n < p_M: vertex 1 in color 0, every other
/// vertex colored by the bin holding its least prime factor.
PrimeBinCertificate build_prime_bin_coloring(std::int64_t n, const Demands& d);

/// Color assignment helper shared by the constructions: least prime divisor
/// of v lying in bin `color`, or 0 if none.
std::int64_t witness_in_bin(std::int64_t v, const BinPartition& bins, int color);

struct Verdict {
    bool accepted = false;
    std::string reason;       ///< first violated condition, empty on acceptance
    std::int64_t vertex = 0;  ///< offending vertex when the violation is per-vertex

    explicit operator bool() const noexcept { return accepted; }
    static Verdict accept() { return {true, {}, 0}; }
    static Verdict reject(std::string why, std::int64_t v = 0) { return {false, std::move(why), v}; }
};

/// Accepts iff the witness proves there is no monochromatic coprime K_{k_i}:
/// bins disjoint and prime, within capacity; every vertex other than 1 has a
/// witness prime dividing it inside its color's bin; vertex 1 sits in the
/// designated color. No clique search is involved.
Verdict verify_divisor_certificate(const ColoringWitness& w, const BinPartition& bins, const Demands& d);

/// verify_divisor_certificate against the bins read off the witness itself.
Verdict verify_witness(const ColoringWitness& w, const Demands& d);

struct ForcingReport {
    int color = 0;
    std::vector<std::int64_t> clique;   ///< k_color prime-clique vertices sharing that color
};

/// Pigeonhole on the prime clique {1} u {primes <= n}. `colors[v-1]` is the
/// color of v. Returns a monochromatic coprime K_{k_i} found on the clique,
/// which always exists when pi(n) + 1 >= M + 1.
std::optional<ForcingReport> pigeonhole_refute(std::span<const int> colors, const Demands& d);

struct Packing {
    std::int64_t size = 0;
    std::vector<std::int64_t> members;
};

/// Largest pairwise-coprime subset of `values` (exact branch and bound).
Packing max_coprime_packing(std::span<const std::int64_t> values);

/// nu(A): size of the largest pairwise-coprime subset.
std::int64_t nu_packing(std::span<const std::int64_t> values);

} // namespace coprime
