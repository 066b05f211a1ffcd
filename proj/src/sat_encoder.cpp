#include "coprime_ramsey/sat_encoder.hpp"
#include "coprime_ramsey/coprime_graph.hpp"
#include "coprime_ramsey/parallel.hpp"
#include "coprime_ramsey/thresholds.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace coprime {

__extension__ using u128 = unsigned __int128;

std::int64_t sat_variable(std::int64_t v, int color, std::int64_t n, int c)
{
    if (v < 1 || v > n)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    if (color < 0 || color >= c)
        throw std::out_of_range("color " + std::to_string(color) + " outside [0, " + std::to_string(c) + ")");
    return (v - 1) * c + color + 1;
}

std::uint64_t binomial(std::int64_t n, std::int64_t r)
{
    if (r < 0 || n < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    u128 out = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        out = out * static_cast<u128>(n - r + i) / static_cast<u128>(i);
        if (out > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial overflows 64 bits");
    }
    return static_cast<std::uint64_t>(out);
}

std::uint64_t cnf_clause_count(std::int64_t n, int c, std::uint64_t cliques)
{
    const auto un = static_cast<std::uint64_t>(n);
    const auto uc = static_cast<std::uint64_t>(c);
    return un + un * (uc * (uc - 1) / 2) + uc * cliques;
}

namespace {

void validate(std::int64_t n, int k, int c)
{
    if (n < 1 || k < 1 || c < 1)
        throw std::invalid_argument("encoding needs n, k, c >= 1");
}

} // namespace

CnfCounts encode_cnf(std::int64_t n, int k, int c, const ClauseSink& sink)
{
    validate(n, k, c);
    CnfCounts counts{n, k, c, 0, n * c, 0};
    std::vector<std::int64_t> clause;
    auto emit = [&] {
        sink(clause);
        ++counts.clauses;
    };
    for (std::int64_t v = 1; v <= n; ++v) {
        clause.clear();
        for (int i = 0; i < c; ++i)
            clause.push_back(sat_variable(v, i, n, c));
        emit();
    }
    for (std::int64_t v = 1; v <= n; ++v)
        for (int i = 0; i < c; ++i)
            for (int j = i + 1; j < c; ++j) {
                clause = {-sat_variable(v, i, n, c), -sat_variable(v, j, n, c)};
                emit();
            }
    const IntervalGraph g(0, n);
    counts.cliques = enumerate_coprime_cliques(g, k, [&](std::span<const std::int64_t> clique) {
        for (int i = 0; i < c; ++i) {
            clause.clear();
            for (std::int64_t v : clique)
                clause.push_back(-sat_variable(v, i, n, c));
            emit();
        }
    });
    return counts;
}

CnfFormula encode(std::int64_t n, int k, int c)
{
    CnfFormula f;
    f.counts = encode_cnf(n, k, c, [&](std::span<const std::int64_t> clause) {
        f.clauses.emplace_back(clause.begin(), clause.end());
    });
    return f;
}

namespace {

void write_header(const CnfCounts& counts, std::ostream& out, bool comment)
{
    if (comment) {
        out << "c coprime Ramsey direct encoding n=" << counts.n << " k=" << counts.k << " colors=" << counts.c
            << " cliques=" << counts.cliques << '\n';
        out << "c variable x(v,i) = (v-1)*" << counts.c << " + i for v in 1.." << counts.n << ", colors i in 1.."
            << counts.c << '\n';
    }
    out << "p cnf " << counts.variables << ' ' << counts.clauses << '\n';
}

void write_clause(std::span<const std::int64_t> clause, std::ostream& out)
{
    for (std::int64_t lit : clause)
        out << lit << ' ';
    out << "0\n";
}

} // namespace

CnfCounts write_dimacs(std::int64_t n, int k, int c, std::ostream& out, bool comment)
{
    validate(n, k, c);
    CnfCounts counts{n, k, c, 0, n * c, 0};
    counts.cliques = enumerate_coprime_cliques(IntervalGraph(0, n), k);
    counts.clauses = cnf_clause_count(n, c, counts.cliques);
    write_header(counts, out, comment);
    const auto streamed = encode_cnf(n, k, c, [&](std::span<const std::int64_t> clause) { write_clause(clause, out); });
    if (streamed.clauses != counts.clauses)
        throw std::logic_error("streamed clause count disagrees with the header");
    if (!out)
        throw std::runtime_error("failed writing DIMACS output");
    return counts;
}

void write_dimacs(const CnfFormula& f, std::ostream& out, bool comment)
{
    CnfCounts counts = f.counts;
    counts.clauses = f.clauses.size();
    write_header(counts, out, comment);
    for (const auto& clause : f.clauses)
        write_clause(clause, out);
    if (!out)
        throw std::runtime_error("failed writing DIMACS output");
}

CnfFormula parse_dimacs(std::istream& in)
{
    CnfFormula f;
    std::string line;
    bool header = false;
    std::uint64_t declared = 0;
    std::vector<std::int64_t> clause;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, cnf;
            if (header || !(ls >> p >> cnf >> f.counts.variables >> declared) || cnf != "cnf")
                throw std::invalid_argument("bad DIMACS header: " + line);
            header = true;
            continue;
        }
        if (!header)
            throw std::invalid_argument("clause before DIMACS header");
        std::int64_t lit = 0;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(clause);
                clause.clear();
            } else {
                if (lit > f.counts.variables || -lit > f.counts.variables)
                    throw std::invalid_argument("literal " + std::to_string(lit) + " beyond the declared variables");
                clause.push_back(lit);
            }
        }
        if (!ls.eof())
            throw std::invalid_argument("non-integer token in clause line: " + line);
    }
    if (!header)
        throw std::invalid_argument("missing DIMACS header");
    if (!clause.empty())
        throw std::invalid_argument("unterminated final clause");
    if (f.clauses.size() != declared)
        throw std::invalid_argument("header declares " + std::to_string(declared) + " clauses, body has "
                                    + std::to_string(f.clauses.size()));
    f.counts.clauses = declared;
    return f;
}

SatDiagRow diagnostics_row(int k)
{
    if (k < 2)
        throw std::invalid_argument("diagnostics need k >= 2");
    SatDiagRow row;
    row.k = k;
    row.r_cop = r_cop(Demands::diagonal(k, 2));
    row.certificate_rank = 2 * static_cast<std::int64_t>(k) - 1;
    row.all_cliques = enumerate_coprime_cliques(IntervalGraph(0, row.r_cop), k);
    row.prime_cliques = binomial(row.certificate_rank, k);
    row.clauses = cnf_clause_count(row.r_cop, 2, row.all_cliques);
    return row;
}

std::vector<SatDiagRow> diagnostics_table(int k_min, int k_max, unsigned jobs)
{
    if (k_min < 2 || k_max < k_min)
        throw std::invalid_argument("diagnostics_table needs 2 <= k_min <= k_max");
    return parallel_map(static_cast<std::size_t>(k_max - k_min + 1), jobs,
                        [&](std::size_t i) { return diagnostics_row(k_min + static_cast<int>(i)); });
}

} // namespace coprime
