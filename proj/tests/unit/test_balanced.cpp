#include "doctest.h"
#include "../oracles.hpp"

#include "coprime_ramsey/balanced.hpp"

#include <cmath>
#include <stdexcept>

using namespace coprime;

TEST_CASE("skip-2 split at k = 10")
{
    const auto s = skip2_split(10);
    CHECK(s.spec.n == 60);
    CHECK(s.spec.bin0 == std::vector<std::int64_t>{3, 5, 7, 11, 13, 17, 19, 23});
    CHECK(s.spec.bin1 == std::vector<std::int64_t>{2, 29, 31, 37, 41, 43, 47, 53, 59});
    CHECK(s.forced.forced0.size() == 22);
    CHECK(s.witness.class_sizes(2) == std::vector<std::int64_t>{30, 30});
    CHECK(verify_divisor_certificate(s.witness, s.bins, Demands{10, 10}));
    CHECK(s.forced.forced0.size() + s.forced.forced1.size() + s.forced.flexible.size() == 60);
}

TEST_CASE("skip-2 small cases")
{
    const auto two = skip2_split(2);
    CHECK(two.spec.n == 2);
    CHECK(two.witness.colors == std::vector<int>{0, 1});
    CHECK(verify_witness(two.witness, Demands{2, 2}));

    for (int k = 3; k <= 6; ++k) {
        const auto s = skip2_split(k);
        CHECK(s.spec.bin0.size() == static_cast<std::size_t>(k - 2));
        CHECK(s.spec.bin1.size() == static_cast<std::size_t>(k - 1));
        CHECK(s.spec.n % 2 == 0);
        CHECK_FALSE(oracle::has_monochromatic_clique(1, s.witness.colors, {k, k}));
        for (int c = 0; c < 2; ++c)
            CHECK(nu_packing(s.witness.class_members(c)) <= k - 1);
    }
    CHECK_THROWS_AS(skip2_split(1), std::invalid_argument);
}

TEST_CASE("density window")
{
    const Demands d{4, 4};
    std::vector<std::int64_t> sizes;
    for (std::int64_t r = 4; r <= 8; ++r) {
        const auto w = density_window(4, r);
        CHECK(w.class_sizes(2)[0] == r);
        CHECK(verify_witness(w, d));
        CHECK_FALSE(oracle::has_monochromatic_clique(1, w.colors, {4, 4}));
        sizes.push_back(r);
    }
    CHECK(density_window_size(4) == 5);
    CHECK_THROWS_AS(density_window(4, 3), ConstructionRangeError);
    CHECK_THROWS_AS(density_window(4, 9), ConstructionRangeError);
    CHECK(density_window(3, 3).class_sizes(2) == std::vector<std::int64_t>{3, 3});

    // r = 22 at k = 10 leaves every flexible vertex in color 1
    const auto base = density_window(10, 22);
    const auto split = skip2_split(10);
    for (auto v : split.forced.flexible)
        CHECK(base.color_of(v) == 1);
}

TEST_CASE("density window rows")
{
    const auto r10 = density_window_row(10);
    CHECK(r10.n == 60);
    CHECK(r10.f0_base == 22);
    CHECK(r10.window == 17);
    CHECK(r10.f0_matches);
    CHECK(r10.all_realizable);
    const auto r100 = density_window_row(100);
    CHECK(r100.n == 1212);
    CHECK(r100.f0_base == 508);
}

TEST_CASE("off-diagonal split")
{
    struct Row { int s, t; std::int64_t n, f0, f1, flex; };
    for (const Row r : {Row{3, 4, 10, 4, 4, 2}, Row{3, 10, 30, 5, 14, 11}, Row{10, 30, 162, 15, 73, 74},
                        Row{50, 50, 520, 212, 63, 245}, Row{100, 150, 1570, 108, 687, 775}}) {
        const auto row = offdiag_row(r.s, r.t);
        CHECK(row.n == r.n);
        CHECK(row.f0 == r.f0);
        CHECK(row.f1 == r.f1);
        CHECK(row.flexible == r.flex);
        CHECK(row.balanced);
    }
    const auto two = offdiag_split(2, 2);
    CHECK(two.spec.n == 2);
    CHECK(two.witness.class_sizes(2) == std::vector<std::int64_t>{1, 1});

    // ordered colors: no K_4 in color 0 and no K_3 in color 1 for (4,3)
    const auto s = offdiag_split(4, 3);
    CHECK_FALSE(oracle::has_monochromatic_clique(1, s.witness.colors, {4, 3}));
    const auto t = offdiag_split(3, 4);
    CHECK_FALSE(oracle::has_monochromatic_clique(1, t.witness.colors, {3, 4}));
    CHECK(t.spec.one_color == 1);
    CHECK_THROWS_AS(offdiag_split(1, 3), std::invalid_argument);
}

TEST_CASE("round-robin bins")
{
    const auto b = roundrobin_bins(3, 3);
    CHECK(b.bins[0] == std::vector<std::int64_t>{2});
    CHECK(b.bins[1] == std::vector<std::int64_t>{3, 7});
    CHECK(b.bins[2] == std::vector<std::int64_t>{5, 11});
    CHECK(b.one_color == 0);

    const auto alt = roundrobin_bins(3, 3, 0, DealRule::ShortBinHoldsOne);
    CHECK(alt.bins[0] == std::vector<std::int64_t>{2, 7});
    CHECK(alt.bins[2] == std::vector<std::int64_t>{5});
    CHECK(alt.one_color == 2);

    const auto shifted = roundrobin_bins(4, 5, 2);
    std::size_t total = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(static_cast<std::int64_t>(shifted.bins[i].size()) <= shifted.capacities[i]);
        total += shifted.bins[i].size();
    }
    CHECK(total == 15);
    CHECK(shifted.bins[2].front() == 2);
    CHECK_THROWS_AS(roundrobin_bins(3, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(roundrobin_bins(40, 3), std::invalid_argument);
}

TEST_CASE("multicolor certificates")
{
    const auto fail = multicolor_certificate(3, 3);
    CHECK(fail.n == 12);
    CHECK_FALSE(fail.assignment.feasible);
    CHECK(fail.assignment.blocking_count > fail.assignment.blocking_capacity);

    const auto ok = multicolor_certificate(3, 6);
    REQUIRE(ok.assignment.feasible);
    REQUIRE(ok.witness.has_value());
    CHECK(verify_divisor_certificate(*ok.witness, ok.bins, Demands::diagonal(6, 3)));
    CHECK(is_near_balanced(*ok.witness, 3));
}

TEST_CASE("phase scan onsets for three and four colors")
{
    const auto s3 = phase_scan(3, 3, 40);
    CHECK(s3.last_failure == 5);
    CHECK(s3.all_success_from == 6);
    CHECK(s3.first_failure == 3);
    const auto s4 = phase_scan(4, 3, 30, 2);
    CHECK(s4.all_success_from == 8);
    CHECK(s3.onset_ratio() == doctest::Approx(6.0 / (3 * std::log(3.0))));
}

TEST_CASE("imbalance table")
{
    const auto rows = imbalance_table(2, 13);
    CHECK(rows.size() == 12);
    CHECK(rows[0].majority == 1);
    CHECK(rows[0].imbalance() == 0);
    CHECK(rows[8].k == 10);
    CHECK(rows[8].majority == 51);
    CHECK(rows[8].minority == 9);
    CHECK(rows[8].imbalance() == 42);
    CHECK(rows[11].majority == 76);
    CHECK_THROWS(imbalance_table(1, 3));
}

TEST_CASE("flexible vertices stay inside the interval")
{
    for (int k = 3; k <= 200; ++k) {
        const auto n = oracle::nth_prime(2 * k - 2) - 1;
        CHECK(2 * oracle::nth_prime(k - 1) <= n);
    }
}
