#include "coprime_ramsey/coprime_graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace coprime {

IntervalGraph::IntervalGraph(std::int64_t shift, std::int64_t length) : shift_(shift), length_(length)
{
    if (shift < 0 || length < 1)
        throw std::invalid_argument("IntervalGraph needs shift >= 0 and length >= 1");
    build(PrimeTable(std::max<std::int64_t>(2, shift + length)));
}

IntervalGraph::IntervalGraph(std::int64_t shift, std::int64_t length, const PrimeTable& primes)
    : shift_(shift), length_(length)
{
    if (shift < 0 || length < 1)
        throw std::invalid_argument("IntervalGraph needs shift >= 0 and length >= 1");
    if (primes.limit() < shift + length && shift + length > 1)
        throw SieveRangeError("IntervalGraph: prime table does not reach " + std::to_string(shift + length));
    build(primes);
}

void IntervalGraph::build(const PrimeTable& primes)
{
    const std::int64_t top = last();
    for (std::int64_t p : primes.primes()) {
        if (p > top)
            break;
        primes_.push_back(p);
    }
    supports_.reserve(static_cast<std::size_t>(length_));
    lpf_.reserve(static_cast<std::size_t>(length_));
    for (std::int64_t v = first(); v <= top; ++v) {
        AtomSet s(primes_.size());
        if (v > 1) {
            for (std::int64_t p : primes.prime_support(v))
                s.set(static_cast<std::size_t>(primes.index_of(p) - 1));
            lpf_.push_back(primes.lpf(v));
        } else {
            lpf_.push_back(1);
        }
        supports_.push_back(std::move(s));
    }
}

const AtomSet& IntervalGraph::support(std::int64_t v) const
{
    if (!contains(v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " is outside the interval");
    return supports_[static_cast<std::size_t>(v - first())];
}

std::int64_t IntervalGraph::label(std::int64_t v) const
{
    if (!contains(v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " is outside the interval");
    return lpf_[static_cast<std::size_t>(v - first())];
}

bool IntervalGraph::adjacent(std::int64_t a, std::int64_t b) const
{
    if (!contains(a) || !contains(b))
        throw std::invalid_argument("adjacency query outside the interval");
    if (a == b)
        throw std::invalid_argument("adjacency query on a single vertex");
    return std::gcd(a, b) == 1;
}

std::vector<std::int64_t> IntervalGraph::vertices() const
{
    std::vector<std::int64_t> out(static_cast<std::size_t>(length_));
    std::iota(out.begin(), out.end(), first());
    return out;
}

CliqueNumber clique_number(const IntervalGraph& g)
{
    if (g.shift() != 0)
        throw std::invalid_argument("clique_number is defined for the unshifted graph G_n");
    CliqueNumber r;
    r.witness.push_back(1);
    for (std::size_t i = 0; i < g.atom_count(); ++i)
        r.witness.push_back(g.atom_prime(i));
    r.size = static_cast<std::int64_t>(r.witness.size());
    return r;
}

namespace {

class CliqueEnumerator {
public:
    CliqueEnumerator(const IntervalGraph& g, std::vector<std::int64_t> order, int k, const CliqueVisitor& visitor)
        : g_(g), k_(k), visitor_(visitor), levels_(static_cast<std::size_t>(k) + 1),
          used_(static_cast<std::size_t>(k) + 1, AtomSet(g.atom_count())), clique_(static_cast<std::size_t>(k))
    {
        levels_[0] = std::move(order);
    }

    std::uint64_t run()
    {
        extend(0);
        return count_;
    }

private:
    void add(std::uint64_t amount)
    {
        if (count_ > std::numeric_limits<std::uint64_t>::max() - amount)
            throw std::overflow_error("coprime clique count exceeds 64 bits");
        count_ += amount;
    }

    void extend(int depth)
    {
        const auto& cands = levels_[static_cast<std::size_t>(depth)];
        const std::size_t remaining_slots = static_cast<std::size_t>(k_ - depth);
        if (remaining_slots == 1 && !visitor_) {
            add(cands.size());
            return;
        }
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (cands.size() - i < remaining_slots)
                break;
            const std::int64_t v = cands[i];
            clique_[static_cast<std::size_t>(depth)] = v;
            if (remaining_slots == 1) {
                add(1);
                visitor_(std::span<const std::int64_t>(clique_));
                continue;
            }
            AtomSet& grown = used_[static_cast<std::size_t>(depth) + 1];
            grown = used_[static_cast<std::size_t>(depth)];
            grown |= g_.support(v);
            auto& next = levels_[static_cast<std::size_t>(depth) + 1];
            next.clear();
            for (std::size_t j = i + 1; j < cands.size(); ++j)
                if (!g_.support(cands[j]).intersects(grown))
                    next.push_back(cands[j]);
            extend(depth + 1);
        }
    }

    const IntervalGraph& g_;
    int k_;
    const CliqueVisitor& visitor_;
    std::vector<std::vector<std::int64_t>> levels_;
    std::vector<AtomSet> used_;
    std::vector<std::int64_t> clique_;
    std::uint64_t count_ = 0;
};

} // namespace

std::uint64_t enumerate_coprime_cliques(const IntervalGraph& g, std::span<const std::int64_t> vertex_subset, int k,
                                        const CliqueVisitor& visitor)
{
    if (k < 1)
        throw std::invalid_argument("clique size must be positive");
    std::vector<std::int64_t> order(vertex_subset.begin(), vertex_subset.end());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!g.contains(order[i]))
            throw std::invalid_argument("vertex subset leaves the interval");
        if (i > 0 && order[i] <= order[i - 1])
            throw std::invalid_argument("vertex subset must be strictly ascending");
    }
    return CliqueEnumerator(g, std::move(order), k, visitor).run();
}

std::uint64_t enumerate_coprime_cliques(const IntervalGraph& g, int k, const CliqueVisitor& visitor)
{
    const auto all = g.vertices();
    return enumerate_coprime_cliques(g, all, k, visitor);
}

LabelScan label_collision_scan(const IntervalGraph& g)
{
    if (g.shift() != 0)
        throw std::invalid_argument("label_collision_scan is defined for the unshifted graph G_n");
    LabelScan scan;
    scan.n = g.length();
    scan.rank = static_cast<std::int64_t>(g.atom_count()) + 1;
    for (std::int64_t a = 1; a <= scan.n; ++a) {
        const std::int64_t la = g.label(a);
        for (std::int64_t b = a + 1; b <= scan.n; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            ++scan.coprime_edges;
            if (la == g.label(b))
                ++scan.collisions;
        }
    }
    return scan;
}

} // namespace coprime
