#include "coprime_ramsey/exact_search.hpp"
#include "coprime_ramsey/coprime_graph.hpp"
#include "coprime_ramsey/flow.hpp"
#include "coprime_ramsey/parallel.hpp"
#include "coprime_ramsey/primes.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace coprime {

__extension__ using u128 = unsigned __int128;

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::Feasible: return "yes";
    case Outcome::Infeasible: return "no";
    case Outcome::Unknown: return "unknown";
    }
    return "unknown";
}

std::size_t SearchProblem::clique_count() const
{
    std::size_t total = 0;
    for (const auto& f : families)
        total += f.count();
    return total;
}

SearchProblem make_search_problem(std::int64_t shift, std::int64_t length, const Demands& d, Balance balance,
                                  std::vector<std::int64_t> targets, std::size_t max_cliques)
{
    if (shift < 0 || length < 1)
        throw std::invalid_argument("search interval needs shift >= 0 and length >= 1");
    if (d.colors() > 32)
        throw std::invalid_argument("search supports at most 32 colors");
    if (balance == Balance::Exact) {
        if (static_cast<int>(targets.size()) != d.colors())
            throw std::invalid_argument("exact balance needs one target per color");
        if (std::accumulate(targets.begin(), targets.end(), std::int64_t{0}) != length)
            throw std::invalid_argument("targets must sum to the interval length");
    }
    SearchProblem p;
    p.shift = shift;
    p.length = length;
    p.demands = d;
    p.balance = balance;
    p.targets = std::move(targets);

    std::vector<int> sizes(d.ks().begin(), d.ks().end());
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    const IntervalGraph g(shift, length);
    std::size_t stored = 0;
    for (int k : sizes) {
        SearchProblem::CliqueFamily fam;
        fam.size = k;
        if (k <= length) {
            enumerate_coprime_cliques(g, k, [&](std::span<const std::int64_t> clique) {
                if (++stored > max_cliques)
                    throw std::length_error("more than " + std::to_string(max_cliques) + " forbidden cliques");
                fam.flat.insert(fam.flat.end(), clique.begin(), clique.end());
            });
        }
        p.families.push_back(std::move(fam));
    }
    return p;
}

namespace {

class Searcher {
public:
    Searcher(const SearchProblem& p, const SearchBudget& budget)
        : p_(p), budget_(budget), n_(static_cast<int>(p.length)), c_(p.demands.colors())
    {
        // flatten cliques
        for (const auto& fam : p.families) {
            std::uint32_t relevant = 0;
            for (int i = 0; i < c_; ++i)
                if (p.demands[static_cast<std::size_t>(i)] == fam.size)
                    relevant |= 1u << i;
            for (std::size_t j = 0; j < fam.count(); ++j) {
                clique_start_.push_back(static_cast<int>(members_.size()));
                clique_size_.push_back(fam.size);
                clique_relevant_.push_back(relevant);
                for (int t = 0; t < fam.size; ++t)
                    members_.push_back(static_cast<int>(fam.flat[j * static_cast<std::size_t>(fam.size) + static_cast<std::size_t>(t)] - p.shift - 1));
            }
        }
        const std::size_t cliques = clique_size_.size();
        clique_start_.push_back(static_cast<int>(members_.size()));
        counts_.assign(cliques * static_cast<std::size_t>(c_), 0);
        colored_.assign(cliques, 0);

        vertex_cliques_.resize(static_cast<std::size_t>(n_));
        for (std::size_t j = 0; j < cliques; ++j)
            for (int t = clique_start_[j]; t < clique_start_[j + 1]; ++t)
                vertex_cliques_[static_cast<std::size_t>(members_[static_cast<std::size_t>(t)])].push_back(static_cast<int>(j));

        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return vertex_cliques_[static_cast<std::size_t>(a)].size() > vertex_cliques_[static_cast<std::size_t>(b)].size();
        });

        const std::uint32_t full = c_ == 32 ? ~0u : ((1u << c_) - 1);
        domain_.assign(static_cast<std::size_t>(n_), full);
        color_.assign(static_cast<std::size_t>(n_), -1);
        size_.assign(static_cast<std::size_t>(c_), 0);
        lower_.assign(static_cast<std::size_t>(c_), 0);
        upper_.assign(static_cast<std::size_t>(c_), n_);
        if (p.balance == Balance::Near) {
            for (int i = 0; i < c_; ++i) {
                lower_[static_cast<std::size_t>(i)] = n_ / c_;
                upper_[static_cast<std::size_t>(i)] = (n_ + c_ - 1) / c_;
            }
        } else if (p.balance == Balance::Exact) {
            for (int i = 0; i < c_; ++i)
                lower_[static_cast<std::size_t>(i)] = upper_[static_cast<std::size_t>(i)] = static_cast<int>(p.targets[static_cast<std::size_t>(i)]);
        }

        // colors are interchangeable when demands (and exact targets) agree
        group_.assign(static_cast<std::size_t>(c_), -1);
        for (int i = 0; i < c_; ++i) {
            for (int j = 0; j < i; ++j) {
                const bool same_demand = p.demands[static_cast<std::size_t>(i)] == p.demands[static_cast<std::size_t>(j)];
                const bool same_target = p.balance != Balance::Exact || p.targets[static_cast<std::size_t>(i)] == p.targets[static_cast<std::size_t>(j)];
                if (same_demand && same_target) {
                    group_[static_cast<std::size_t>(i)] = group_[static_cast<std::size_t>(j)];
                    break;
                }
            }
            if (group_[static_cast<std::size_t>(i)] < 0)
                group_[static_cast<std::size_t>(i)] = i;
        }
        start_ = std::chrono::steady_clock::now();
    }

    SearchResult run()
    {
        SearchResult r;
        bool found = false;
        try {
            found = dfs(0);
        } catch (const OutOfBudget&) {
            r.outcome = Outcome::Unknown;
            r.nodes = nodes_;
            r.seconds = elapsed();
            return r;
        }
        r.outcome = found ? Outcome::Feasible : Outcome::Infeasible;
        if (found)
            r.coloring = color_;
        r.nodes = nodes_;
        r.seconds = elapsed();
        return r;
    }

private:
    struct OutOfBudget {};

    double elapsed() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    void tick()
    {
        ++nodes_;
        if (budget_.max_nodes && nodes_ > budget_.max_nodes)
            throw OutOfBudget{};
        if (budget_.time && (nodes_ & 1023) == 0
            && std::chrono::steady_clock::now() - start_ > *budget_.time)
            throw OutOfBudget{};
    }

    bool balance_ok(int remaining) const
    {
        int deficit = 0;
        for (int i = 0; i < c_; ++i)
            deficit += std::max(0, lower_[static_cast<std::size_t>(i)] - size_[static_cast<std::size_t>(i)]);
        return deficit <= remaining;
    }

    bool symmetric_skip(int color) const
    {
        if (size_[static_cast<std::size_t>(color)] > 0)
            return false;
        for (int j = 0; j < color; ++j)
            if (group_[static_cast<std::size_t>(j)] == group_[static_cast<std::size_t>(color)] && size_[static_cast<std::size_t>(j)] == 0)
                return true;
        return false;
    }

    /// Colors v with `color`; returns false on a wipe-out. Trail entries are
    /// pushed even on failure so unassign() can undo everything.
    bool assign(int v, int color)
    {
        color_[static_cast<std::size_t>(v)] = color;
        ++size_[static_cast<std::size_t>(color)];
        bool ok = true;
        for (int j : vertex_cliques_[static_cast<std::size_t>(v)]) {
            ++colored_[static_cast<std::size_t>(j)];
            if (!(clique_relevant_[static_cast<std::size_t>(j)] & (1u << color)))
                continue;
            const int cnt = ++counts_[static_cast<std::size_t>(j) * static_cast<std::size_t>(c_) + static_cast<std::size_t>(color)];
            const int s = clique_size_[static_cast<std::size_t>(j)];
            if (!ok || cnt != s - 1 || colored_[static_cast<std::size_t>(j)] != s - 1)
                continue;
            // one open vertex left in an otherwise `color`-monochromatic clique
            for (int t = clique_start_[static_cast<std::size_t>(j)]; t < clique_start_[static_cast<std::size_t>(j) + 1]; ++t) {
                const int u = members_[static_cast<std::size_t>(t)];
                if (color_[static_cast<std::size_t>(u)] >= 0)
                    continue;
                auto& dom = domain_[static_cast<std::size_t>(u)];
                if (dom & (1u << color)) {
                    trail_.emplace_back(u, dom);
                    dom &= ~(1u << color);
                    if (dom == 0)
                        ok = false;
                }
                break;
            }
        }
        return ok;
    }

    void unassign(int v, int color, std::size_t trail_mark)
    {
        for (int j : vertex_cliques_[static_cast<std::size_t>(v)]) {
            --colored_[static_cast<std::size_t>(j)];
            if (clique_relevant_[static_cast<std::size_t>(j)] & (1u << color))
                --counts_[static_cast<std::size_t>(j) * static_cast<std::size_t>(c_) + static_cast<std::size_t>(color)];
        }
        while (trail_.size() > trail_mark) {
            domain_[static_cast<std::size_t>(trail_.back().first)] = trail_.back().second;
            trail_.pop_back();
        }
        --size_[static_cast<std::size_t>(color)];
        color_[static_cast<std::size_t>(v)] = -1;
    }

    bool dfs(int depth)
    {
        if (depth == n_)
            return true;
        tick();
        const int v = order_[static_cast<std::size_t>(depth)];
        const std::uint32_t dom = domain_[static_cast<std::size_t>(v)];
        for (int color = 0; color < c_; ++color) {
            if (!(dom & (1u << color)))
                continue;
            if (size_[static_cast<std::size_t>(color)] >= upper_[static_cast<std::size_t>(color)])
                continue;
            if (symmetric_skip(color))
                continue;
            const std::size_t mark = trail_.size();
            const bool ok = assign(v, color) && balance_ok(n_ - depth - 1);
            if (ok && dfs(depth + 1))
                return true;
            unassign(v, color, mark);
        }
        return false;
    }

    const SearchProblem& p_;
    SearchBudget budget_;
    int n_;
    int c_;
    std::vector<int> clique_start_;
    std::vector<int> clique_size_;
    std::vector<std::uint32_t> clique_relevant_;
    std::vector<int> members_;
    std::vector<int> counts_;
    std::vector<int> colored_;
    std::vector<std::vector<int>> vertex_cliques_;
    std::vector<int> order_;
    std::vector<std::uint32_t> domain_;
    std::vector<int> color_;
    std::vector<int> size_;
    std::vector<int> lower_;
    std::vector<int> upper_;
    std::vector<int> group_;
    std::vector<std::pair<int, std::uint32_t>> trail_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

} // namespace

SearchResult avoidable(const SearchProblem& p, const SearchBudget& budget)
{
    return Searcher(p, budget).run();
}

bool coloring_avoids(const SearchProblem& p, const std::vector<int>& coloring)
{
    const int c = p.demands.colors();
    if (static_cast<std::int64_t>(coloring.size()) != p.length)
        return false;
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(c), 0);
    for (int color : coloring) {
        if (color < 0 || color >= c)
            return false;
        ++sizes[static_cast<std::size_t>(color)];
    }
    if (p.balance == Balance::Near) {
        for (auto s : sizes)
            if (s < p.length / c || s > (p.length + c - 1) / c)
                return false;
    } else if (p.balance == Balance::Exact && sizes != p.targets) {
        return false;
    }
    for (const auto& fam : p.families) {
        for (std::size_t j = 0; j < fam.count(); ++j) {
            const auto* clique = fam.flat.data() + j * static_cast<std::size_t>(fam.size);
            const int first = coloring[static_cast<std::size_t>(clique[0] - p.shift - 1)];
            if (p.demands[static_cast<std::size_t>(first)] != fam.size)
                continue;
            bool mono = true;
            for (int t = 1; t < fam.size && mono; ++t)
                mono = coloring[static_cast<std::size_t>(clique[t] - p.shift - 1)] == first;
            if (mono)
                return false;
        }
    }
    return true;
}

ThresholdScan threshold(std::int64_t shift, const Demands& d, Balance balance, const SearchBudget& budget,
                        std::int64_t n_max)
{
    ThresholdScan out;
    const auto start = std::chrono::steady_clock::now();
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const auto problem = make_search_problem(shift, n, d, balance);
        auto r = avoidable(problem, budget);
        out.scan.emplace_back(n, r.outcome);
        if (r.outcome == Outcome::Unknown)
            break;
        if (r.outcome == Outcome::Infeasible) {
            out.outcome = Outcome::Feasible;
            out.threshold = n;
            break;
        }
        out.last_witness = std::move(r.coloring);
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::optional<std::uint64_t> multinomial(std::int64_t n, const std::vector<std::int64_t>& parts)
{
    if (std::accumulate(parts.begin(), parts.end(), std::int64_t{0}) != n)
        throw std::invalid_argument("multinomial parts must sum to n");
    u128 result = 1;
    std::int64_t remaining = n;
    for (auto part : parts) {
        // C(remaining, part), exact at every step
        u128 binom = 1;
        for (std::int64_t i = 1; i <= part; ++i) {
            binom = binom * static_cast<u128>(remaining - part + i) / static_cast<u128>(i);
            if (binom > std::numeric_limits<std::uint64_t>::max())
                return std::nullopt;
        }
        result *= binom;
        if (result > std::numeric_limits<std::uint64_t>::max())
            return std::nullopt;
        remaining -= part;
    }
    return static_cast<std::uint64_t>(result);
}

EndpointDecision balanced_endpoint_decide(int c, int k, const SearchBudget& budget)
{
    if (c < 2 || k < 2)
        throw std::invalid_argument("balanced_endpoint_decide needs c >= 2 and k >= 2");
    EndpointDecision out;
    out.c = c;
    out.k = k;
    out.n = nth_prime(static_cast<std::int64_t>(c) * (k - 1)) - 1;
    const auto problem = make_search_problem(0, out.n, Demands::diagonal(k, c), Balance::Near);
    out.clique_count = problem.clique_count();
    out.balanced_colorings = multinomial(out.n, balanced_targets(out.n, c));
    out.result = avoidable(problem, budget);
    return out;
}

bool shifted_prime_bin_certificate_exists(std::int64_t shift, std::int64_t length, int k)
{
    const std::int64_t last = shift + length;
    const auto table = shared_primes(std::max<std::int64_t>(last, 2));
    const bool has_one = shift == 0;
    const std::int64_t interval_primes = table->pi(last) - table->pi(shift);
    const std::int64_t capacity = 2 * static_cast<std::int64_t>(k - 1) - (has_one ? 1 : 0);
    if (interval_primes > capacity)
        return false;
    for (std::int64_t v = std::max<std::int64_t>(shift + 1, 2); v <= last; ++v) {
        bool witnessed = false;
        for (std::int64_t p : table->prime_support(v))
            if (p > shift) {
                witnessed = true;
                break;
            }
        if (!witnessed)
            return false;
    }
    return true;
}

std::vector<ShiftedCertCell> shifted_lower_cert_scan(std::int64_t shift_min, std::int64_t shift_max, int k_min,
                                                     int k_max, unsigned jobs)
{
    if (shift_min < 0 || shift_max < shift_min || k_min < 2 || k_max < k_min)
        throw std::invalid_argument("shifted_lower_cert_scan needs nonempty ranges");
    const auto shifts = static_cast<std::size_t>(shift_max - shift_min + 1);
    const auto ks = static_cast<std::size_t>(k_max - k_min + 1);
    return parallel_map(shifts * ks, jobs, [&](std::size_t i) {
        ShiftedCertCell cell;
        cell.k = k_min + static_cast<int>(i / shifts);
        cell.shift = shift_min + static_cast<std::int64_t>(i % shifts);
        const std::int64_t upper = shifted_upper_bound(cell.shift, cell.k);
        for (std::int64_t n = cell.k; n < upper; ++n) {
            ++cell.lengths_tested;
            if (shifted_prime_bin_certificate_exists(cell.shift, n, cell.k))
                cell.max_certified_length = n;
        }
        return cell;
    });
}

} // namespace coprime
