#pragma once

// Table builders behind the CLI subcommands. Each returns the rows exactly as
// they are written to CSV, so golden comparison is a byte comparison.

#include "coprime_ramsey/balanced.hpp"
#include "coprime_ramsey/exact_search.hpp"
#include "coprime_ramsey/thresholds.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coprime::report {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::size_t unknown = 0;   // cells that hold an "unknown" verdict
    bool failed = false;       // a built-in check did not hold

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

/// "2..21", "10,30,60", "2..5,9" -> ascending-as-written integer list.
std::vector<std::int64_t> parse_int_list(std::string_view text);

std::string demand_label(const Demands& d);   // "(3;2)" or "(3,5)"

Table values(const std::vector<std::int64_t>& ks, int colors);
Table mixed(const std::vector<Demands>& demands);   // empty: the standard examples
Table rank_table(const ClassicalTable& table);
Table edge_summary(const ClassicalTable& table);
Table edge_transfer(const ClassicalTable& table);
Table sat_diag(const std::vector<std::int64_t>& ks, unsigned jobs);
Table labels(const std::vector<std::int64_t>& ns, unsigned jobs);
Table imbalance(const std::vector<std::int64_t>& ks);

Table shifted_thresholds(const std::vector<std::int64_t>& shifts, const std::vector<std::int64_t>& ks,
                         const SearchBudget& budget, unsigned jobs, bool timings);
Table shifted_certificates(const std::vector<std::int64_t>& shifts, const std::vector<std::int64_t>& ks, unsigned jobs);
Table shifted_frontier(const std::vector<std::int64_t>& shifts, const std::vector<std::int64_t>& ks,
                       const SearchBudget& budget, unsigned jobs);

Table support_primitive();

Table balanced_thresholds(const std::vector<std::int64_t>& ks, const SearchBudget& budget);
Table skip2_rows(const std::vector<std::int64_t>& ks, unsigned jobs);
Table window(const std::vector<std::int64_t>& ks, unsigned jobs);
Table offdiag(const std::vector<std::pair<int, int>>& pairs);   // empty: the standard rows
Table offdiag_grid(int lo, int hi, unsigned jobs);
Table phase(const std::vector<std::int64_t>& cs, int k_min, int k_max, unsigned jobs, int start, DealRule rule);
Table phase_summary(const std::vector<std::int64_t>& cs, int k_min, int k_max, unsigned jobs, int start,
                    DealRule rule);

struct EndpointCase {
    int c = 0;
    int k = 0;
};
std::vector<EndpointCase> standard_endpoint_cases();
Table endpoint(const std::vector<EndpointCase>& cases, const SearchBudget& budget, bool timings);

Table gap(std::int64_t m_max);
Table oracle(std::int64_t max_rank, const SearchBudget& budget, unsigned jobs);

} // namespace coprime::report
