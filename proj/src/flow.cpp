#include "coprime_ramsey/flow.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace coprime {

namespace {
constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;
}

MaxFlow::MaxFlow(std::size_t nodes) : adj_(nodes), level_(nodes), iter_(nodes) {}

std::size_t MaxFlow::add_edge(std::size_t from, std::size_t to, std::int64_t capacity)
{
    if (from >= adj_.size() || to >= adj_.size())
        throw std::out_of_range("MaxFlow: node out of range");
    if (capacity < 0)
        throw std::invalid_argument("MaxFlow: negative capacity");
    const std::size_t id = edges_.size();
    edges_.push_back({to, capacity, capacity});
    adj_[from].push_back(id);
    edges_.push_back({from, 0, 0});
    adj_[to].push_back(id + 1);
    return id;
}

bool MaxFlow::bfs(std::size_t s, std::size_t t)
{
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        for (std::size_t id : adj_[v]) {
            const Edge& e = edges_[id];
            if (e.cap > 0 && level_[e.to] < 0) {
                level_[e.to] = level_[v] + 1;
                q.push(e.to);
            }
        }
    }
    return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(std::size_t v, std::size_t t, std::int64_t pushed)
{
    if (v == t)
        return pushed;
    for (; iter_[v] < adj_[v].size(); ++iter_[v]) {
        const std::size_t id = adj_[v][iter_[v]];
        Edge& e = edges_[id];
        if (e.cap <= 0 || level_[e.to] != level_[v] + 1)
            continue;
        const std::int64_t got = dfs(e.to, t, std::min(pushed, e.cap));
        if (got > 0) {
            e.cap -= got;
            edges_[id ^ 1].cap += got;
            return got;
        }
    }
    return 0;
}

std::int64_t MaxFlow::run(std::size_t source, std::size_t sink)
{
    std::int64_t total = 0;
    while (bfs(source, sink)) {
        std::fill(iter_.begin(), iter_.end(), 0);
        while (const std::int64_t f = dfs(source, sink, kInfinite))
            total += f;
    }
    return total;
}

std::int64_t MaxFlow::flow_on(std::size_t edge) const
{
    const Edge& e = edges_.at(edge);
    return e.original - e.cap;
}

std::vector<bool> MaxFlow::residual_reachable(std::size_t source) const
{
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t id : adj_[v]) {
            const Edge& e = edges_[id];
            if (e.cap > 0 && !seen[e.to]) {
                seen[e.to] = true;
                stack.push_back(e.to);
            }
        }
    }
    return seen;
}

std::vector<std::int64_t> balanced_targets(std::int64_t n, int colors)
{
    if (colors < 1 || n < 0)
        throw std::invalid_argument("balanced_targets needs colors >= 1 and n >= 0");
    std::vector<std::int64_t> t(static_cast<std::size_t>(colors), n / colors);
    for (std::int64_t i = 0; i < n % colors; ++i)
        ++t[static_cast<std::size_t>(i)];
    return t;
}

std::int64_t forced_count(const FlowInstance& instance, std::uint32_t color_mask)
{
    std::int64_t count = 0;
    for (std::uint32_t a : instance.allowed)
        if ((a & ~color_mask) == 0)
            ++count;
    return count;
}

AssignmentResult flow_assign(const FlowInstance& instance)
{
    const int c = instance.colors;
    if (c < 1 || c > 32)
        throw std::invalid_argument("flow_assign supports 1..32 colors");
    const auto n = static_cast<std::int64_t>(instance.allowed.size());
    const std::uint32_t full = c == 32 ? ~0u : ((1u << c) - 1);
    for (std::uint32_t a : instance.allowed)
        if (a == 0 || (a & ~full) != 0)
            throw std::invalid_argument("flow_assign: allowed set empty or outside the colors");

    std::vector<std::int64_t> targets;
    if (instance.rule == TargetRule::Exact) {
        if (static_cast<int>(instance.targets.size()) != c)
            throw std::invalid_argument("flow_assign: one target per color required");
        std::int64_t sum = 0;
        for (auto t : instance.targets) {
            if (t < 0)
                throw std::invalid_argument("flow_assign: negative target");
            sum += t;
        }
        if (sum != n)
            throw std::invalid_argument("flow_assign: targets must sum to the vertex count");
        targets = instance.targets;
    }

    // group vertices by allowed mask
    std::map<std::uint32_t, std::vector<std::size_t>> types;
    for (std::size_t v = 0; v < instance.allowed.size(); ++v)
        types[instance.allowed[v]].push_back(v);

    // node layout: source, types, colors, [extra], sink
    const std::size_t source = 0;
    const std::size_t type_base = 1;
    const std::size_t color_base = type_base + types.size();
    const std::size_t extra = color_base + static_cast<std::size_t>(c);
    const std::size_t sink = extra + 1;
    MaxFlow net(sink + 1);

    std::vector<std::uint32_t> masks;
    std::vector<std::vector<std::pair<int, std::size_t>>> type_edges;
    for (const auto& [mask, members] : types) {
        const std::size_t node = type_base + masks.size();
        net.add_edge(source, node, static_cast<std::int64_t>(members.size()));
        std::vector<std::pair<int, std::size_t>> out;
        for (int i = 0; i < c; ++i)
            if (mask & (1u << i))
                out.emplace_back(i, net.add_edge(node, color_base + static_cast<std::size_t>(i), kInfinite));
        masks.push_back(mask);
        type_edges.push_back(std::move(out));
    }
    const std::int64_t floor_size = n / c;
    const std::int64_t remainder = n % c;
    for (int i = 0; i < c; ++i) {
        const std::size_t node = color_base + static_cast<std::size_t>(i);
        if (instance.rule == TargetRule::Exact) {
            net.add_edge(node, sink, targets[static_cast<std::size_t>(i)]);
        } else {
            net.add_edge(node, sink, floor_size);
            net.add_edge(node, extra, 1);
        }
    }
    if (instance.rule == TargetRule::NearBalanced)
        net.add_edge(extra, sink, remainder);

    AssignmentResult result;
    result.flow = net.run(source, sink);
    result.feasible = result.flow == n;

    if (result.feasible) {
        result.colors.assign(instance.allowed.size(), -1);
        std::size_t t = 0;
        for (const auto& [mask, members] : types) {
            std::size_t next = 0;
            for (const auto& [color, edge] : type_edges[t]) {
                for (std::int64_t f = net.flow_on(edge); f > 0; --f)
                    result.colors[members[next++]] = color;
            }
            ++t;
        }
        return result;
    }

    const auto reach = net.residual_reachable(source);
    std::uint32_t s_mask = 0;
    for (int i = 0; i < c; ++i) {
        if (reach[color_base + static_cast<std::size_t>(i)]) {
            result.blocking_set.push_back(i);
            s_mask |= 1u << i;
        } else {
            result.underfilled_set.push_back(i);
        }
    }
    result.blocking_count = forced_count(instance, s_mask);
    if (instance.rule == TargetRule::Exact) {
        for (int i : result.blocking_set)
            result.blocking_capacity += targets[static_cast<std::size_t>(i)];
    } else {
        const auto size = static_cast<std::int64_t>(result.blocking_set.size());
        result.blocking_capacity = size * floor_size + std::min(size, remainder);
    }
    return result;
}

} // namespace coprime
