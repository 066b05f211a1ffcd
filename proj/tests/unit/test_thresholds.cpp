#include "doctest.h"
#include "../oracles.hpp"

#include "coprime_ramsey/thresholds.hpp"

#include <stdexcept>

using namespace coprime;

TEST_CASE("demand vectors")
{
    const Demands d{3, 5, 4};
    CHECK(d.colors() == 3);
    CHECK(d.rank_sum() == 9);
    CHECK(d.min_demand() == 3);
    CHECK(d.max_demand() == 5);
    CHECK_FALSE(d.is_diagonal());
    CHECK(d.sorted() == std::vector<int>{3, 4, 5});
    CHECK(d.to_string() == "(3,5,4)");
    CHECK(Demands::diagonal(3, 4).is_diagonal());
    CHECK(parse_demands("3,3") == Demands{3, 3});
    CHECK(parse_demands("4 5") == Demands{4, 5});
    CHECK_THROWS_AS((Demands{1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Demands(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(parse_demands("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_demands(""), std::invalid_argument);
}

TEST_CASE("exact values use the prime-index formula")
{
    const std::vector<std::int64_t> table5 = {3, 7, 13, 19, 29, 37, 43, 53, 61, 71,
                                              79, 89, 101, 107, 113, 131, 139, 151, 163, 173};
    for (int k = 2; k <= 21; ++k) {
        CHECK(r_cop(Demands::diagonal(k, 2)) == table5[static_cast<std::size_t>(k - 2)]);
        CHECK(r_cop(Demands::diagonal(k, 2)) == oracle::nth_prime(2 * k - 2));
    }
    CHECK(r_cop({3, 3, 3}) == 13);
    CHECK(r_cop(Demands::diagonal(3, 4)) == 19);
    CHECK(r_cop(Demands::diagonal(3, 5)) == 29);
    CHECK(r_cop(Demands::diagonal(3, 6)) == 37);
    CHECK(r_cop({3, 4}) == 11);
    CHECK(r_cop({3, 5}) == 13);
    CHECK(r_cop({4, 5}) == 17);
    CHECK(r_cop({5, 7}) == 29);
    CHECK(r_cop({2}) == 2);
    CHECK(r_cop_covering({4, 4}) == r_cop({4, 4}));
}

TEST_CASE("classical table lookups and transfers")
{
    const auto t = ClassicalTable::embedded();
    CHECK(t.entries().size() == 34);
    CHECK(r_cop_edge({3, 3}, t).to_string() == "11");
    CHECK(r_cop_edge({5, 5}, t).to_string() == "181--197");
    CHECK(r_cop_edge({7, 10}, t).to_string() == "1901--18493");
    CHECK(r_cop_edge({10, 7}, t).to_string() == "1901--18493");
    CHECK(r_cop_edge({4, 6}, t).to_string() == "149--167");
    CHECK(r_cop_edge({3, 3, 3}, t).to_string() == "53");
    CHECK(gallai_edge({3, 3, 3}, t).to_string() == "29");
    CHECK(gcd_scaled_edge({3, 3}, 4, t).to_string() == "44");
    CHECK_THROWS_AS(r_cop_edge({8, 8}, t), UnknownValueError);
    CHECK_THROWS_AS(gcd_scaled_edge({3, 3}, 0, t), std::invalid_argument);

    const auto rows = transfer_bound_table(t);
    CHECK(rows.front().parameter == "R(3,3)");
    CHECK(rows.front().transferred.to_string() == "11");
    for (const auto& row : rows) {
        CHECK(row.transferred.lower == oracle::nth_prime(row.classical.lower - 1));
        CHECK(row.transferred.upper == oracle::nth_prime(row.classical.upper - 1));
        CHECK(row.transferred.exact() == row.classical.exact());
    }
}

TEST_CASE("rank triggers")
{
    const auto t = ClassicalTable::embedded();
    CHECK(rank_trigger({3, 3}, RankMode::Vertex, t) == 5);
    CHECK(rank_threshold(5) == 7);
    CHECK(rank_trigger({3, 3, 3}, RankMode::Vertex, t) == 7);
    CHECK(rank_threshold(7) == 13);
    CHECK(rank_trigger({3, 3}, RankMode::Edge, t) == 6);
    CHECK(rank_trigger({3, 3, 3}, RankMode::Edge, t) == 17);
    CHECK(rank_threshold(17) == 53);
    CHECK(rank_trigger({4, 4}, RankMode::Edge, t) == 18);
    CHECK(rank_threshold(18) == 59);
    CHECK(rank_trigger({3, 5}, RankMode::Edge, t) == 14);
    CHECK(rank_threshold(14) == 41);
    CHECK_THROWS_AS(rank_trigger({5, 5}, RankMode::Edge, t), UnknownValueError);
}

TEST_CASE("hypergraph analogues")
{
    CHECK(hypergraph_vertex(3, {3, 3}) == 7);
    CHECK_THROWS_AS(hypergraph_vertex(3, {2, 3}), std::invalid_argument);
    auto t = ClassicalTable::embedded();
    CHECK_THROWS_AS(hypergraph_edge(3, {4, 4}, t), UnknownValueError);
    t.insert({{4, 4}, 3, ClassicalTarget::Clique, {13, 13}});
    CHECK(hypergraph_edge(3, {4, 4}, t).to_string() == "37");
    CHECK(t.contains(std::vector<int>{4, 4}, 3));
    CHECK(t.lookup(std::vector<int>{4, 4}, 3).label() == "R^(3)(4,4)");
}

TEST_CASE("classical table JSON")
{
    const auto t = ClassicalTable::parse_json(R"([{"demands":[3,3],"lower":6,"upper":6},
        {"demands":[4,4],"lower":13,"upper":13,"uniformity":3},
        {"demands":[3,3,3],"lower":11,"upper":11,"target":"gallai"}])");
    CHECK(t.entries().size() == 3);
    CHECK(hypergraph_edge(3, {4, 4}, t).to_string() == "37");
    const auto again = ClassicalTable::parse_json(t.to_json());
    CHECK(again.entries().size() == 3);
    CHECK(gallai_edge({3, 3, 3}, again).to_string() == "29");

    CHECK_THROWS_AS(ClassicalTable::parse_json(R"({"demands":[3,3]})"), std::invalid_argument);
    CHECK_THROWS_AS(ClassicalTable::parse_json(R"([{"demands":[3,3],"lower":7,"upper":6}])"), std::invalid_argument);
    CHECK_THROWS_AS(ClassicalTable::parse_json(R"([{"demands":[3,3],"lower":6,"upper":6,"target":"x"}])"),
                    std::invalid_argument);
    CHECK_THROWS(ClassicalTable::parse_json("not json"));
    CHECK_THROWS(ClassicalTable::load("/nonexistent/table.json"));
}

TEST_CASE("shifted prime-clique bound")
{
    CHECK(shifted_upper_bound(0, 3) == 11);
    CHECK(shifted_upper_bound(10, 3) == 13);
    CHECK(shifted_upper_bound(2, 2) == 5);
    for (std::int64_t m : {2, 3, 5, 10, 20, 50})
        for (int k = 3; k <= 5; ++k) {
            const auto u = shifted_upper_bound(m, k);
            CHECK(oracle::pi(m + u) - oracle::pi(m) >= 2 * k - 1);
            CHECK(oracle::pi(m + u - 1) - oracle::pi(m) < 2 * k - 1);
        }
    CHECK_THROWS_AS(shifted_upper_bound(-1, 3), std::invalid_argument);
    CHECK_THROWS_AS(shifted_upper_bound(0, 1), std::invalid_argument);
}

TEST_CASE("prime index transfer rejects tiny inputs")
{
    CHECK(prime_index_transfer(2) == 2);
    CHECK_THROWS_AS(prime_index_transfer(1), std::invalid_argument);
}
