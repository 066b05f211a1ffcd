#include "doctest.h"
#include "../oracles.hpp"

#include "coprime_ramsey/sat_encoder.hpp"
#include "coprime_ramsey/thresholds.hpp"

#include <sstream>
#include <stdexcept>

using namespace coprime;

TEST_CASE("variable layout")
{
    CHECK(sat_variable(1, 0, 5, 2) == 1);
    CHECK(sat_variable(1, 1, 5, 2) == 2);
    CHECK(sat_variable(5, 1, 5, 2) == 10);
    CHECK(sat_variable(3, 2, 4, 3) == 9);
    // an out-of-range color must not alias the next vertex's variable
    CHECK_THROWS_AS(sat_variable(1, 2, 5, 2), std::out_of_range);
    CHECK_THROWS_AS(sat_variable(1, -1, 5, 2), std::out_of_range);
    CHECK_THROWS_AS(sat_variable(0, 0, 5, 2), std::out_of_range);
    CHECK_THROWS_AS(sat_variable(6, 0, 5, 2), std::out_of_range);
}

TEST_CASE("clause counts")
{
    std::ostringstream out;
    const auto counts = write_dimacs(2, 2, 2, out);
    CHECK(counts.cliques == 1);
    CHECK(out.str().rfind("p cnf 4 6\n", 0) == 0);

    CHECK(encode(7, 3, 2).counts.clauses == 52);
    CHECK(cnf_clause_count(7, 2, 19) == 52);
    CHECK(cnf_clause_count(13, 2, 151) == 328);
    CHECK(cnf_clause_count(12, 3, 79) == 12 + 36 + 237);
    CHECK_THROWS_AS(encode(0, 3, 2), std::invalid_argument);
}

TEST_CASE("dimacs round trip")
{
    const auto f = encode(11, 3, 3);
    std::ostringstream out;
    write_dimacs(f, out, true);
    std::istringstream in(out.str());
    const auto g = parse_dimacs(in);
    CHECK(g.clauses == f.clauses);
    CHECK(g.counts.variables == 33);

    std::ostringstream streamed;
    write_dimacs(11, 3, 3, streamed, true);
    CHECK(streamed.str() == out.str());
}

TEST_CASE("malformed dimacs")
{
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return parse_dimacs(in);
    };
    CHECK_THROWS_AS(parse("1 2 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("p cnf 2 1\n1 3 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("p cnf 2 1\n1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("p cnf 2 2\n1 2 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("p dnf 2 1\n1 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("p cnf 2 1\n1 x 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("c only a comment\n"), std::invalid_argument);
    CHECK(parse("c hi\np cnf 2 2\n1 -2 0 2\n0\n").clauses.size() == 2);
}

TEST_CASE("encoding is satisfiable exactly below the threshold")
{
    for (int k = 2; k <= 4; ++k) {
        const auto r = r_cop(Demands::diagonal(k, 2));
        for (std::int64_t n = std::max<std::int64_t>(1, r - 3); n <= r && n <= 13; ++n) {
            const auto f = encode(n, k, 2);
            CHECK_MESSAGE(oracle::dpll_satisfiable(f.clauses, f.counts.variables) == (n < r), "k=" << k << " n=" << n);
        }
    }
    const auto three = encode(12, 3, 3);
    CHECK(oracle::dpll_satisfiable(three.clauses, three.counts.variables));
}

TEST_CASE("diagnostics rows")
{
    const std::uint64_t cliques[] = {19, 151, 831};
    const std::uint64_t clauses[] = {52, 328, 1700};
    const auto rows = diagnostics_table(3, 5, 2);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].all_cliques == cliques[i]);
        CHECK(rows[i].clauses == clauses[i]);
        CHECK(rows[i].certificate_rank == 2 * rows[i].k - 1);
        CHECK(rows[i].prime_cliques == binomial(2 * rows[i].k - 1, rows[i].k));
    }
    CHECK(rows[0].r_cop == 7);
    CHECK_THROWS_AS(diagnostics_row(1), std::invalid_argument);
}

TEST_CASE("binomial")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ULL);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}
