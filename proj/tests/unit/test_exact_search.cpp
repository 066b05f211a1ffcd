#include "doctest.h"
#include "../oracles.hpp"

#include "coprime_ramsey/exact_search.hpp"
#include "coprime_ramsey/flow.hpp"

#include <stdexcept>

using namespace coprime;

namespace {

std::vector<int> ks_of(const Demands& d)
{
    return {d.ks().begin(), d.ks().end()};
}

} // namespace

TEST_CASE("avoidable on the smallest diagonal case")
{
    const auto six = avoidable(make_search_problem(0, 6, Demands{3, 3}));
    CHECK(six.outcome == Outcome::Feasible);
    REQUIRE(six.coloring.has_value());
    CHECK_FALSE(oracle::has_monochromatic_clique(1, *six.coloring, {3, 3}));
    CHECK(avoidable(make_search_problem(0, 7, Demands{3, 3})).outcome == Outcome::Infeasible);
}

TEST_CASE("search agrees with exhaustive enumeration")
{
    for (const Demands& d : {Demands{3, 3}, Demands{2, 4}, Demands{3, 4}, Demands{2, 2, 3}})
        for (std::int64_t shift : {0, 2, 7})
            for (std::int64_t n = 1; n <= 11; ++n) {
                const auto p = make_search_problem(shift, n, d);
                const auto r = avoidable(p);
                CHECK(r.outcome != Outcome::Unknown);
                CHECK((r.outcome == Outcome::Feasible) == oracle::brute_avoidable(shift + 1, n, ks_of(d)));
                if (r.coloring) {
                    CHECK(coloring_avoids(p, *r.coloring));
                    CHECK_FALSE(oracle::has_monochromatic_clique(shift + 1, *r.coloring, ks_of(d)));
                }
            }
}

TEST_CASE("near-balanced search agrees with exhaustive enumeration")
{
    for (std::int64_t n = 2; n <= 10; ++n) {
        const auto p = make_search_problem(0, n, Demands{3, 3, 3}, Balance::Near);
        const auto r = avoidable(p);
        const bool brute = oracle::brute_avoidable(1, n, {3, 3, 3}, [n](const std::vector<int>& sizes) {
            for (int s : sizes)
                if (s < n / 3 || s > (n + 2) / 3)
                    return false;
            return true;
        });
        CHECK((r.outcome == Outcome::Feasible) == brute);
        if (r.coloring)
            CHECK(coloring_avoids(p, *r.coloring));
    }
}

TEST_CASE("exact targets")
{
    const auto p = make_search_problem(0, 12, Demands{3, 3, 3}, Balance::Exact, {4, 4, 4});
    CHECK(p.clique_count() == 79);
    CHECK(avoidable(p).outcome == Outcome::Infeasible);
    const auto q = make_search_problem(0, 6, Demands{3, 3}, Balance::Exact, {2, 4});
    const auto r = avoidable(q);
    CHECK(r.outcome == Outcome::Feasible);
    CHECK(coloring_avoids(q, *r.coloring));
    CHECK_THROWS_AS(make_search_problem(0, 6, Demands{3, 3}, Balance::Exact, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(make_search_problem(0, 6, Demands{3, 3}, Balance::Exact, {6}), std::invalid_argument);
}

TEST_CASE("thresholds match the formula")
{
    CHECK(threshold(0, Demands{3, 3}).threshold == 7);
    CHECK(threshold(0, Demands{3, 4}).threshold == 11);
    CHECK(threshold(0, Demands{2, 2, 2}).threshold == 5);
    const auto t = threshold(10, Demands{3, 3});
    CHECK(t.outcome == Outcome::Feasible);
    CHECK(t.threshold == 7);
    REQUIRE(t.last_witness.has_value());
    CHECK(t.last_witness->size() == 6);
    CHECK(threshold(2, Demands{4, 4}).threshold == 15);
    CHECK(threshold(20, Demands{3, 3}).threshold == 9);
}

TEST_CASE("balanced endpoint decisions")
{
    const auto d = balanced_endpoint_decide(3, 3);
    CHECK(d.n == 12);
    CHECK(d.clique_count == 79);
    CHECK(d.balanced_colorings == std::optional<std::uint64_t>{34650});
    CHECK(d.result.outcome == Outcome::Infeasible);

    const auto two = balanced_endpoint_decide(2, 3);
    CHECK(two.n == 6);
    CHECK(two.result.outcome == Outcome::Feasible);
}

TEST_CASE("budgets produce unknown, never a verdict")
{
    const auto p = make_search_problem(0, 18, Demands{3, 3, 3, 3}, Balance::Near);
    SearchBudget tiny;
    tiny.max_nodes = 10;
    const auto r = avoidable(p, tiny);
    CHECK(r.outcome == Outcome::Unknown);
    CHECK_FALSE(r.coloring.has_value());
    CHECK(to_string(r.outcome) == "unknown");
    const auto t = threshold(0, Demands{4, 4}, Balance::None, tiny);
    CHECK(t.outcome == Outcome::Unknown);
    CHECK_THROWS_AS(make_search_problem(0, 30, Demands{3, 3}, Balance::None, {}, 10), std::length_error);
}

TEST_CASE("multinomial")
{
    CHECK(multinomial(12, {4, 4, 4}) == std::optional<std::uint64_t>{34650});
    CHECK(multinomial(6, {3, 3}) == std::optional<std::uint64_t>{20});
    CHECK_FALSE(multinomial(200, {100, 100}).has_value());
    CHECK_THROWS(multinomial(5, {1, 1}));
}

TEST_CASE("shifted certificates")
{
    CHECK(shifted_prime_bin_certificate_exists(0, 6, 3));
    CHECK_FALSE(shifted_prime_bin_certificate_exists(0, 7, 3));
    CHECK_FALSE(shifted_prime_bin_certificate_exists(2, 5, 3));
    const auto cells = shifted_lower_cert_scan(2, 30, 3, 5, 2);
    CHECK(cells.size() == 29 * 3);
    for (const auto& c : cells) {
        CHECK_FALSE(c.max_certified_length.has_value());
        CHECK(c.lengths_tested > 0);
    }
}
