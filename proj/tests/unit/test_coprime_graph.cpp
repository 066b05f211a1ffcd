#include "doctest.h"
#include "../oracles.hpp"

#include "coprime_ramsey/coprime_graph.hpp"

#include <set>
#include <stdexcept>

using namespace coprime;

TEST_CASE("adjacency is gcd = 1")
{
    const IntervalGraph g(0, 40);
    for (std::int64_t a = 1; a <= 40; ++a)
        for (std::int64_t b = a + 1; b <= 40; ++b)
            CHECK(g.adjacent(a, b) == (std::gcd(a, b) == 1));
    CHECK_THROWS_AS(g.adjacent(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.adjacent(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.adjacent(3, 41), std::invalid_argument);

    const IntervalGraph shifted(10, 8);
    CHECK(shifted.first() == 11);
    CHECK(shifted.last() == 18);
    CHECK(shifted.adjacent(11, 12));
    CHECK_FALSE(shifted.adjacent(12, 14));
    CHECK_THROWS_AS(shifted.adjacent(10, 11), std::invalid_argument);
}

TEST_CASE("clique number is pi(n) + 1")
{
    for (std::int64_t n : {1, 2, 7, 30, 100}) {
        const auto w = clique_number(IntervalGraph(0, n));
        CHECK(w.size == oracle::pi(n) + 1);
        CHECK(w.witness.front() == 1);
        CHECK(oracle::pairwise_coprime(w.witness));
    }
    CHECK_THROWS(clique_number(IntervalGraph(5, 10)));
}

TEST_CASE("clique counts agree with subset enumeration")
{
    for (std::int64_t n = 1; n <= 16; ++n)
        for (int k = 1; k <= 5; ++k)
            CHECK(enumerate_coprime_cliques(IntervalGraph(0, n), k) == oracle::count_coprime_subsets(1, n, k));
    for (std::int64_t shift : {3, 10, 29})
        for (int k = 2; k <= 4; ++k)
            CHECK(enumerate_coprime_cliques(IntervalGraph(shift, 14), k)
                  == oracle::count_coprime_subsets(shift + 1, shift + 14, k));
}

TEST_CASE("known clique counts")
{
    CHECK(enumerate_coprime_cliques(IntervalGraph(0, 7), 3) == 19);
    CHECK(enumerate_coprime_cliques(IntervalGraph(0, 13), 4) == 151);
    CHECK(enumerate_coprime_cliques(IntervalGraph(0, 19), 5) == 831);
    CHECK(enumerate_coprime_cliques(IntervalGraph(0, 12), 3) == 79);
    CHECK(enumerate_coprime_cliques(IntervalGraph(0, 2), 2) == 1);
    CHECK_THROWS_AS(enumerate_coprime_cliques(IntervalGraph(0, 5), 0), std::invalid_argument);
}

TEST_CASE("visitor sees each clique once, ascending, lexicographic")
{
    const IntervalGraph g(0, 15);
    std::vector<std::vector<std::int64_t>> seen;
    const auto count = enumerate_coprime_cliques(g, 3, [&](std::span<const std::int64_t> c) {
        seen.emplace_back(c.begin(), c.end());
    });
    CHECK(seen.size() == count);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(std::set(seen.begin(), seen.end()).size() == seen.size());
    for (const auto& c : seen) {
        CHECK(std::is_sorted(c.begin(), c.end()));
        CHECK(oracle::pairwise_coprime(c));
    }
}

TEST_CASE("subset enumeration")
{
    const IntervalGraph g(0, 20);
    const std::vector<std::int64_t> odd{1, 3, 5, 7, 9, 15};
    // {1,3,5,7},{1,5,7,9},{1,7,15} etc.; check against brute force
    std::uint64_t brute = 0;
    for (std::size_t a = 0; a < odd.size(); ++a)
        for (std::size_t b = a + 1; b < odd.size(); ++b)
            for (std::size_t c = b + 1; c < odd.size(); ++c)
                brute += oracle::pairwise_coprime({odd[a], odd[b], odd[c]});
    CHECK(enumerate_coprime_cliques(g, odd, 3) == brute);
    const std::vector<std::int64_t> unsorted{5, 3};
    CHECK_THROWS_AS(enumerate_coprime_cliques(g, unsorted, 2), std::invalid_argument);
    const std::vector<std::int64_t> outside{3, 25};
    CHECK_THROWS_AS(enumerate_coprime_cliques(g, outside, 2), std::invalid_argument);
}

TEST_CASE("label scan on small n")
{
    const auto s10 = label_collision_scan(IntervalGraph(0, 10));
    CHECK(s10.rank == 5);
    CHECK(s10.coprime_edges == 31);
    CHECK(s10.collisions == 0);
    CHECK(s10.pass());
    const auto s30 = label_collision_scan(IntervalGraph(0, 30));
    CHECK(s30.rank == 11);
    CHECK(s30.coprime_edges == 277);

    std::uint64_t edges = 0;
    for (std::int64_t a = 1; a <= 60; ++a)
        for (std::int64_t b = a + 1; b <= 60; ++b)
            edges += std::gcd(a, b) == 1;
    CHECK(label_collision_scan(IntervalGraph(0, 60)).coprime_edges == edges);
}

TEST_CASE("labels")
{
    const IntervalGraph g(0, 30);
    CHECK(g.label(1) == 1);
    CHECK(g.label(2) == 2);
    CHECK(g.label(15) == 3);
    CHECK(g.label(29) == 29);
}
