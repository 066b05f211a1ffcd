#include "doctest.h"

#include "coprime_ramsey/flow.hpp"

#include <functional>
#include <random>
#include <stdexcept>

using namespace coprime;

namespace {

/// Exhaustive feasibility for tiny instances.
bool brute_feasible(const FlowInstance& inst)
{
    const std::size_t n = inst.allowed.size();
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(inst.colors), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t v) {
        if (v == n) {
            if (inst.rule == TargetRule::Exact)
                return sizes == inst.targets;
            const auto lo = static_cast<std::int64_t>(n) / inst.colors;
            for (auto s : sizes)
                if (s < lo || s > lo + 1)
                    return false;
            return true;
        }
        for (int c = 0; c < inst.colors; ++c) {
            if (!(inst.allowed[v] & (1u << c)))
                continue;
            ++sizes[static_cast<std::size_t>(c)];
            const bool ok = rec(v + 1);
            --sizes[static_cast<std::size_t>(c)];
            if (ok)
                return true;
        }
        return false;
    };
    return rec(0);
}

void check_assignment(const FlowInstance& inst, const AssignmentResult& r)
{
    REQUIRE(r.colors.size() == inst.allowed.size());
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(inst.colors), 0);
    for (std::size_t v = 0; v < r.colors.size(); ++v) {
        CHECK((inst.allowed[v] & (1u << r.colors[v])) != 0);
        ++sizes[static_cast<std::size_t>(r.colors[v])];
    }
    if (inst.rule == TargetRule::Exact)
        CHECK(sizes == inst.targets);
}

} // namespace

TEST_CASE("max flow on a textbook network")
{
    MaxFlow f(4);
    const auto a = f.add_edge(0, 1, 3);
    f.add_edge(0, 2, 2);
    f.add_edge(1, 2, 1);
    f.add_edge(1, 3, 2);
    f.add_edge(2, 3, 3);
    CHECK(f.run(0, 3) == 5);
    CHECK(f.flow_on(a) == 3);
    const auto reach = f.residual_reachable(0);
    CHECK(reach[0]);
    CHECK_FALSE(reach[3]);
    CHECK_THROWS_AS(f.add_edge(0, 9, 1), std::out_of_range);
    CHECK_THROWS_AS(f.add_edge(0, 1, -1), std::invalid_argument);
}

TEST_CASE("balanced targets")
{
    CHECK(balanced_targets(12, 3) == std::vector<std::int64_t>{4, 4, 4});
    CHECK(balanced_targets(22, 3) == std::vector<std::int64_t>{8, 7, 7});
    CHECK(balanced_targets(2, 3) == std::vector<std::int64_t>{1, 1, 0});
    CHECK_THROWS(balanced_targets(5, 0));
}

TEST_CASE("Hall violation when every vertex is stuck on color 0")
{
    FlowInstance inst;
    inst.colors = 3;
    inst.allowed.assign(6, 1u);
    inst.targets = balanced_targets(6, 3);
    const auto r = flow_assign(inst);
    CHECK_FALSE(r.feasible);
    CHECK(r.blocking_set == std::vector<int>{0});
    CHECK(r.blocking_count == 6);
    CHECK(r.blocking_capacity == 2);
    CHECK(r.underfilled_set == std::vector<int>{1, 2});
}

TEST_CASE("flow agrees with brute force, blocking sets are genuine")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        FlowInstance inst;
        inst.colors = 2 + static_cast<int>(rng() % 3);
        const std::size_t n = 1 + rng() % 8;
        const std::uint32_t full = (1u << inst.colors) - 1;
        for (std::size_t v = 0; v < n; ++v) {
            std::uint32_t m = 0;
            while (!m)
                m = static_cast<std::uint32_t>(rng()) & full;
            inst.allowed.push_back(m);
        }
        inst.rule = trial % 2 ? TargetRule::NearBalanced : TargetRule::Exact;
        if (inst.rule == TargetRule::Exact)
            inst.targets = balanced_targets(static_cast<std::int64_t>(n), inst.colors);
        const auto r = flow_assign(inst);
        CHECK(r.feasible == brute_feasible(inst));
        if (r.feasible) {
            check_assignment(inst, r);
        } else {
            std::uint32_t s = 0;
            for (int c : r.blocking_set)
                s |= 1u << c;
            CHECK(forced_count(inst, s) == r.blocking_count);
            CHECK(r.blocking_count > r.blocking_capacity);
        }
    }
}

TEST_CASE("enlarging allowed sets never breaks feasibility")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        FlowInstance inst;
        inst.colors = 3;
        const std::size_t n = 3 + rng() % 20;
        for (std::size_t v = 0; v < n; ++v)
            inst.allowed.push_back(1u << (rng() % 3) | ((rng() % 4 == 0) ? 1u << (rng() % 3) : 0u));
        inst.targets = balanced_targets(static_cast<std::int64_t>(n), 3);
        const bool before = flow_assign(inst).feasible;
        auto wider = inst;
        wider.allowed[rng() % n] |= 1u << (rng() % 3);
        if (before)
            CHECK(flow_assign(wider).feasible);
    }
}

TEST_CASE("flow_assign input validation")
{
    FlowInstance inst;
    inst.colors = 2;
    inst.allowed = {1u, 2u};
    inst.targets = {1, 2};
    CHECK_THROWS_AS(flow_assign(inst), std::invalid_argument);
    inst.targets = {1};
    CHECK_THROWS_AS(flow_assign(inst), std::invalid_argument);
    inst.targets = {1, 1};
    inst.allowed = {0u, 2u};
    CHECK_THROWS_AS(flow_assign(inst), std::invalid_argument);
    inst.allowed = {4u, 2u};
    CHECK_THROWS_AS(flow_assign(inst), std::invalid_argument);
    inst.colors = 0;
    CHECK_THROWS_AS(flow_assign(inst), std::invalid_argument);
}
