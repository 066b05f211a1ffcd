#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace coprime {

/// Dinic max-flow on a small directed network.
class MaxFlow {
public:
    explicit MaxFlow(std::size_t nodes);

    /// Returns an edge handle usable with flow_on().
    std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t capacity);
    std::int64_t run(std::size_t source, std::size_t sink);
    std::int64_t flow_on(std::size_t edge) const;
    /// Nodes reachable from `source` in the residual graph of the last run.
    std::vector<bool> residual_reachable(std::size_t source) const;

private:
    struct Edge {
        std::size_t to;
        std::int64_t cap;
        std::int64_t original;
    };
    bool bfs(std::size_t s, std::size_t t);
    std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t pushed);

    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
};

/// How class sizes are prescribed.
enum class TargetRule {
    Exact,         ///< color i receives exactly targets[i]
    NearBalanced,  ///< every class size in {floor(n/c), ceil(n/c)}; `targets` ignored
};

/// Vertex v may take any color whose bit is set in allowed[v] (c <= 32).
struct FlowInstance {
    int colors = 0;
    std::vector<std::uint32_t> allowed;
    std::vector<std::int64_t> targets;
    TargetRule rule = TargetRule::Exact;
};

/// t_i = ceil(n/c) for the first n mod c colors, floor(n/c) for the rest.
std::vector<std::int64_t> balanced_targets(std::int64_t n, int colors);

struct AssignmentResult {
    bool feasible = false;
    std::vector<int> colors;   ///< per vertex, when feasible
    std::int64_t flow = 0;
    /// On infeasibility: colors S whose forced vertex count N_S (vertices with
    /// A(v) inside S) exceeds the capacity of S.
    std::vector<int> blocking_set;
    std::int64_t blocking_count = 0;
    std::int64_t blocking_capacity = 0;
    /// Complement of blocking_set: colors that cannot all reach their targets.
    std::vector<int> underfilled_set;
};

/// Exact bipartite assignment by max-flow. Vertices with identical allowed
/// sets are merged into one node, so the network has at most min(n, 2^c) + c + 2
/// nodes. Within a type, vertices take colors in ascending vertex order.
AssignmentResult flow_assign(const FlowInstance& instance);

/// N_S for a color mask S: vertices whose allowed set lies inside S.
std::int64_t forced_count(const FlowInstance& instance, std::uint32_t color_mask);

} // namespace coprime
