#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace coprime {

/// Variable x_{v,i} of the direct encoding: (v - 1) * c + i + 1 for the
/// 0-based color i. Throws std::out_of_range for v outside [1, n] or a color
/// outside [0, c); an out-of-range color is never folded onto another variable.
std::int64_t sat_variable(std::int64_t v, int color, std::int64_t n, int c);

struct CnfCounts {
    std::int64_t n = 0;
    int k = 0;
    int c = 0;
    std::uint64_t cliques = 0;
    std::int64_t variables = 0;
    std::uint64_t clauses = 0;   ///< n + n * C(c, 2) + c * cliques
};

/// Clause count of the encoding, without building it.
std::uint64_t cnf_clause_count(std::int64_t n, int c, std::uint64_t cliques);

using ClauseSink = std::function<void(std::span<const std::int64_t>)>;

/// Streams every clause: at-least-one per vertex, pairwise at-most-one, then
/// one all-negative clause per coprime k-clique and color.
CnfCounts encode_cnf(std::int64_t n, int k, int c, const ClauseSink& sink);

struct CnfFormula {
    CnfCounts counts;
    std::vector<std::vector<std::int64_t>> clauses;
};

/// Materialized encoding, for small instances.
CnfFormula encode(std::int64_t n, int k, int c);

/// DIMACS with "p cnf" header; `comment` adds c-lines describing n, k, c and
/// the variable layout. Counts the cliques first, then streams the clauses.
CnfCounts write_dimacs(std::int64_t n, int k, int c, std::ostream& out, bool comment = false);
void write_dimacs(const CnfFormula& f, std::ostream& out, bool comment = false);

/// Parses a DIMACS CNF stream; throws std::invalid_argument on malformed input
/// or when the body disagrees with the header.
CnfFormula parse_dimacs(std::istream& in);

struct SatDiagRow {
    int k = 0;
    std::int64_t r_cop = 0;
    std::int64_t certificate_rank = 0;   ///< 2k - 1
    std::uint64_t all_cliques = 0;       ///< coprime K_k in G_{R_cop}
    std::uint64_t prime_cliques = 0;     ///< C(2k - 1, k)
    std::uint64_t clauses = 0;
};

/// Two-color encoding size at n = r_cop(k, k).
SatDiagRow diagnostics_row(int k);
std::vector<SatDiagRow> diagnostics_table(int k_min, int k_max, unsigned jobs = 1);

/// C(n, r) in 64 bits; throws std::overflow_error.
std::uint64_t binomial(std::int64_t n, std::int64_t r);

} // namespace coprime
