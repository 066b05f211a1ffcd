#pragma once

#include "coprime_ramsey/certificates.hpp"
#include "coprime_ramsey/thresholds.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coprime {

/// Tri-state answer of every exact search. Unknown means a budget ran out and
/// is never evidence either way.
enum class Outcome { Feasible, Infeasible, Unknown };

std::string to_string(Outcome o);   ///< "yes", "no", "unknown"

struct SearchBudget {
    std::optional<std::chrono::milliseconds> time;   ///< wall clock per search
    std::uint64_t max_nodes = 0;                     ///< 0 = unlimited

    static SearchBudget unlimited() { return {}; }
    static SearchBudget millis(std::int64_t ms) { return {std::chrono::milliseconds(ms), 0}; }
};

enum class Balance {
    None,
    Near,    ///< every class size in {floor(n/c), ceil(n/c)}
    Exact,   ///< class i has exactly targets[i] vertices
};

/// Coloring problem on {shift+1..shift+length}: color i must avoid coprime K_{k_i}.
struct SearchProblem {
    std::int64_t shift = 0;
    std::int64_t length = 0;
    Demands demands{2};
    Balance balance = Balance::None;
    std::vector<std::int64_t> targets;

    /// Forbidden cliques, one list per distinct demand value, vertices ascending.
    struct CliqueFamily {
        int size = 0;
        std::vector<std::int64_t> flat;   ///< size * count vertices
        std::size_t count() const noexcept { return size ? flat.size() / static_cast<std::size_t>(size) : 0; }
    };
    std::vector<CliqueFamily> families;

    std::size_t clique_count() const;
};

/// Builds the problem and enumerates its forbidden cliques. Throws
/// std::length_error if more than `max_cliques` cliques would be stored.
SearchProblem make_search_problem(std::int64_t shift, std::int64_t length, const Demands& d,
                                  Balance balance = Balance::None, std::vector<std::int64_t> targets = {},
                                  std::size_t max_cliques = 20'000'000);

struct SearchResult {
    Outcome outcome = Outcome::Unknown;   ///< Feasible = an avoiding coloring exists
    std::optional<std::vector<int>> coloring;   ///< index v - shift - 1
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// Backtracking over vertices with per-clique color counters, forward checking
/// on the last open vertex of each clique, balance pruning, and first-use
/// ordering of interchangeable colors.
SearchResult avoidable(const SearchProblem& p, const SearchBudget& budget = {});

/// Independent re-check of a coloring against the problem's clique lists and balance.
bool coloring_avoids(const SearchProblem& p, const std::vector<int>& coloring);

struct ThresholdScan {
    Outcome outcome = Outcome::Unknown;   ///< Feasible = threshold found
    std::int64_t threshold = 0;           ///< least n with no avoiding coloring
    std::optional<std::vector<int>> last_witness;   ///< avoiding coloring at threshold - 1
    std::vector<std::pair<std::int64_t, Outcome>> scan;
    double seconds = 0.0;
};

/// Least length n (starting from 1) such that no avoiding coloring of
/// {shift+1..shift+n} exists. Stops with Unknown on the first unknown length
/// or once n exceeds n_max.
ThresholdScan threshold(std::int64_t shift, const Demands& d, Balance balance = Balance::None,
                        const SearchBudget& budget = {}, std::int64_t n_max = 200);

struct EndpointDecision {
    int c = 0;
    int k = 0;
    std::int64_t n = 0;
    std::size_t clique_count = 0;
    std::optional<std::uint64_t> balanced_colorings;   ///< multinomial n!/prod t_i!, if it fits
    SearchResult result;
};

/// Near-balanced c-coloring of [p_{c(k-1)} - 1] avoiding monochromatic coprime K_k.
EndpointDecision balanced_endpoint_decide(int c, int k, const SearchBudget& budget = {});

/// Multinomial n! / prod t_i!, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> multinomial(std::int64_t n, const std::vector<std::int64_t>& parts);

struct ShiftedCertCell {
    std::int64_t shift = 0;
    int k = 0;
    std::int64_t lengths_tested = 0;
    std::optional<std::int64_t> max_certified_length;
};

/// Naive interval-adapted prime-bin certificate on {m+1..m+n}: every vertex
/// other than 1 needs a prime divisor inside the interval, and the interval
/// primes must fit in two bins of capacity k-1 (k-2 for the bin holding 1).
bool shifted_prime_bin_certificate_exists(std::int64_t shift, std::int64_t length, int k);

/// Tests lengths k .. shifted_upper_bound(m, k) - 1 for every (m, k).
std::vector<ShiftedCertCell> shifted_lower_cert_scan(std::int64_t shift_min, std::int64_t shift_max, int k_min,
                                                     int k_max, unsigned jobs = 1);

} // namespace coprime
