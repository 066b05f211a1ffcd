#include "coprime_ramsey/certificates.hpp"
#include "coprime_ramsey/atom_set.hpp"
#include "coprime_ramsey/primes.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace coprime {

std::vector<std::int64_t> ColoringWitness::class_sizes(int color_count) const
{
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(color_count), 0);
    for (int c : colors)
        if (c >= 0 && c < color_count)
            ++sizes[static_cast<std::size_t>(c)];
    return sizes;
}

std::vector<std::int64_t> ColoringWitness::class_members(int color) const
{
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == color)
            out.push_back(first() + static_cast<std::int64_t>(i));
    return out;
}

std::string ColoringWitness::to_json() const
{
    const nlohmann::json j = {
        {"shift", shift}, {"length", length}, {"colors", colors}, {"witness_primes", witness_primes}};
    return j.dump();
}

ColoringWitness ColoringWitness::parse_json(std::string_view text)
{
    const auto j = nlohmann::json::parse(text);
    ColoringWitness w;
    w.shift = j.at("shift").get<std::int64_t>();
    w.length = j.at("length").get<std::int64_t>();
    w.colors = j.at("colors").get<std::vector<int>>();
    w.witness_primes = j.at("witness_primes").get<std::vector<std::int64_t>>();
    if (w.shift < 0 || w.length < 1)
        throw std::invalid_argument("witness needs shift >= 0 and length >= 1");
    if (w.colors.size() != static_cast<std::size_t>(w.length) || w.witness_primes.size() != w.colors.size())
        throw std::invalid_argument("witness arrays must have one entry per vertex");
    return w;
}

int BinPartition::bin_of(std::int64_t p) const
{
    for (std::size_t i = 0; i < bins.size(); ++i)
        if (std::find(bins[i].begin(), bins[i].end(), p) != bins[i].end())
            return static_cast<int>(i);
    return -1;
}

std::vector<std::int64_t> bin_capacities(const Demands& d, std::optional<int> one_color)
{
    std::vector<std::int64_t> caps;
    for (int i = 0; i < d.colors(); ++i)
        caps.push_back(d[static_cast<std::size_t>(i)] - (one_color && *one_color == i ? 2 : 1));
    return caps;
}

BinPartition canonical_bins(std::int64_t n, const Demands& d)
{
    if (n < 1)
        throw std::invalid_argument("canonical_bins needs n >= 1");
    const auto table = shared_primes(std::max<std::int64_t>(n, 2));
    const std::int64_t prime_total = table->pi(n);
    if (prime_total > d.rank_sum() - 1)
        throw std::domain_error("no prime-bin coloring of [" + std::to_string(n) + "] exists for demands "
                                + d.to_string() + ": n >= p_M");

    BinPartition bins;
    bins.one_color = 0;
    bins.capacities = bin_capacities(d, bins.one_color);
    bins.bins.resize(static_cast<std::size_t>(d.colors()));
    std::size_t bin = 0;
    for (std::int64_t idx = 1; idx <= prime_total; ++idx) {
        while (static_cast<std::int64_t>(bins.bins[bin].size()) >= bins.capacities[bin])
            ++bin;
        bins.bins[bin].push_back(table->nth_prime(idx));
    }
    return bins;
}

BinPartition bins_from_witness(const ColoringWitness& w, const Demands& d)
{
    BinPartition bins;
    bins.bins.resize(static_cast<std::size_t>(d.colors()));
    std::vector<std::set<std::int64_t>> sets(static_cast<std::size_t>(d.colors()));
    for (std::int64_t v = w.first(); v <= w.last(); ++v) {
        const int c = w.color_of(v);
        if (c < 0 || c >= d.colors())
            continue;   // reported by the verifier
        if (v == 1) {
            bins.one_color = c;
            continue;
        }
        sets[static_cast<std::size_t>(c)].insert(w.witness_of(v));
    }
    for (std::size_t i = 0; i < sets.size(); ++i)
        bins.bins[i].assign(sets[i].begin(), sets[i].end());
    bins.capacities = bin_capacities(d, bins.one_color);
    return bins;
}

std::int64_t witness_in_bin(std::int64_t v, const BinPartition& bins, int color)
{
    if (v < 2)
        return 0;
    const auto table = shared_primes(v);
    const auto& bin = bins.bins.at(static_cast<std::size_t>(color));
    for (std::int64_t p : table->prime_support(v))
        if (std::find(bin.begin(), bin.end(), p) != bin.end())
            return p;
    return 0;
}

PrimeBinCertificate build_prime_bin_coloring(std::int64_t n, const Demands& d)
{
    PrimeBinCertificate cert;
    cert.bins = canonical_bins(n, d);
    const auto table = shared_primes(std::max<std::int64_t>(n, 2));

    auto& w = cert.witness;
    w.shift = 0;
    w.length = n;
    w.colors.reserve(static_cast<std::size_t>(n));
    w.witness_primes.reserve(static_cast<std::size_t>(n));
    w.colors.push_back(*cert.bins.one_color);
    w.witness_primes.push_back(0);

    std::map<std::int64_t, int> prime_bin;
    for (int c = 0; c < cert.bins.color_count(); ++c)
        for (std::int64_t p : cert.bins.bins[static_cast<std::size_t>(c)])
            prime_bin[p] = c;
    for (std::int64_t v = 2; v <= n; ++v) {
        const std::int64_t q = table->lpf(v);
        w.colors.push_back(prime_bin.at(q));
        w.witness_primes.push_back(q);
    }
    return cert;
}

Verdict verify_divisor_certificate(const ColoringWitness& w, const BinPartition& bins, const Demands& d)
{
    const int c = d.colors();
    if (bins.color_count() != c)
        return Verdict::reject("bin count does not match color count");
    if (w.colors.size() != static_cast<std::size_t>(w.length) || w.witness_primes.size() != w.colors.size())
        return Verdict::reject("witness arrays do not match the interval length");

    const auto table = shared_primes(std::max<std::int64_t>(w.last(), 2));
    std::map<std::int64_t, int> owner;
    for (int i = 0; i < c; ++i) {
        for (std::int64_t p : bins.bins[static_cast<std::size_t>(i)]) {
            if (p < 2 || p > table->limit() || !table->is_prime(p))
                return Verdict::reject("bin entry " + std::to_string(p) + " is not a prime");
            if (!owner.emplace(p, i).second)
                return Verdict::reject("bins overlap at prime " + std::to_string(p));
        }
    }

    std::optional<int> one_color = bins.one_color;
    if (w.has_vertex_one()) {
        const int c1 = w.color_of(1);
        if (one_color && *one_color != c1)
            return Verdict::reject("vertex 1 not in designated color", 1);
        one_color = c1;
    }
    const auto caps = bin_capacities(d, w.has_vertex_one() ? one_color : std::nullopt);
    for (int i = 0; i < c; ++i)
        if (static_cast<std::int64_t>(bins.bins[static_cast<std::size_t>(i)].size()) > caps[static_cast<std::size_t>(i)])
            return Verdict::reject("bin " + std::to_string(i) + " over capacity");

    for (std::int64_t v = w.first(); v <= w.last(); ++v) {
        const int color = w.color_of(v);
        if (color < 0 || color >= c)
            return Verdict::reject("color out of range", v);
        if (v == 1)
            continue;
        const std::int64_t q = w.witness_of(v);
        if (q < 2 || v % q != 0)
            return Verdict::reject("witness prime does not divide vertex", v);
        const auto it = owner.find(q);
        if (it == owner.end() || it->second != color)
            return Verdict::reject("witness prime not in bin", v);
    }
    return Verdict::accept();
}

Verdict verify_witness(const ColoringWitness& w, const Demands& d)
{
    return verify_divisor_certificate(w, bins_from_witness(w, d), d);
}

std::optional<ForcingReport> pigeonhole_refute(std::span<const int> colors, const Demands& d)
{
    const auto n = static_cast<std::int64_t>(colors.size());
    if (n < 1)
        return std::nullopt;
    const auto table = shared_primes(std::max<std::int64_t>(n, 2));
    std::vector<std::vector<std::int64_t>> per_color(static_cast<std::size_t>(d.colors()));
    auto place = [&](std::int64_t v) {
        const int c = colors[static_cast<std::size_t>(v - 1)];
        if (c < 0 || c >= d.colors())
            throw std::invalid_argument("coloring uses color " + std::to_string(c) + " outside the demand vector");
        per_color[static_cast<std::size_t>(c)].push_back(v);
    };
    place(1);
    for (std::int64_t p : table->primes()) {
        if (p > n)
            break;
        place(p);
    }
    for (int i = 0; i < d.colors(); ++i) {
        auto& members = per_color[static_cast<std::size_t>(i)];
        const auto need = static_cast<std::size_t>(d[static_cast<std::size_t>(i)]);
        if (members.size() >= need) {
            members.resize(need);
            return ForcingReport{i, members};
        }
    }
    return std::nullopt;
}

namespace {

class PackingSearch {
public:
    PackingSearch(std::vector<AtomSet> supports, std::vector<std::int64_t> values)
        : supports_(std::move(supports)), values_(std::move(values))
    {
    }

    Packing run()
    {
        std::vector<std::size_t> all(values_.size());
        std::iota(all.begin(), all.end(), 0);
        search(all);
        Packing p;
        p.size = static_cast<std::int64_t>(best_.size());
        for (auto i : best_)
            p.members.push_back(values_[i]);
        std::sort(p.members.begin(), p.members.end());
        return p;
    }

private:
    void search(const std::vector<std::size_t>& cands)
    {
        if (chosen_.size() > best_.size())
            best_ = chosen_;
        if (cands.empty())
            return;

        // suffix[i] = union of supports of cands[i..]
        std::vector<AtomSet> suffix(cands.size() + 1, AtomSet(supports_.front().width()));
        for (std::size_t i = cands.size(); i-- > 0;) {
            suffix[i] = suffix[i + 1];
            suffix[i] |= supports_[cands[i]];
        }

        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const std::size_t bound = std::min(cands.size() - i, suffix[i].count());
            if (chosen_.size() + bound <= best_.size())
                return;
            const auto& s = supports_[cands[i]];
            next.clear();
            for (std::size_t j = i + 1; j < cands.size(); ++j)
                if (!supports_[cands[j]].intersects(s))
                    next.push_back(cands[j]);
            chosen_.push_back(cands[i]);
            search(next);
            chosen_.pop_back();
        }
    }

    std::vector<AtomSet> supports_;
    std::vector<std::int64_t> values_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_;
};

} // namespace

Packing max_coprime_packing(std::span<const std::int64_t> values)
{
    std::set<std::int64_t> distinct;
    for (std::int64_t v : values) {
        if (v < 1)
            throw std::invalid_argument("packing values must be positive");
        distinct.insert(v);
    }
    const bool has_one = distinct.erase(1) > 0;

    Packing result;
    if (!distinct.empty()) {
        const auto table = shared_primes(std::max<std::int64_t>(*distinct.rbegin(), 2));
        std::map<std::int64_t, std::size_t> atom;
        std::vector<std::vector<std::int64_t>> factors;
        for (std::int64_t v : distinct) {
            factors.push_back(table->prime_support(v));
            for (std::int64_t p : factors.back())
                atom.emplace(p, atom.size());
        }
        std::vector<std::size_t> order(distinct.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return factors[a].size() < factors[b].size(); });

        const std::vector<std::int64_t> flat(distinct.begin(), distinct.end());
        std::vector<AtomSet> supports;
        std::vector<std::int64_t> sorted_values;
        for (std::size_t i : order) {
            AtomSet s(atom.size());
            for (std::int64_t p : factors[i])
                s.set(atom.at(p));
            // A value whose support contains a kept support can always be
            // swapped for it, so it never enlarges a packing.
            const bool dominated = std::any_of(supports.begin(), supports.end(),
                                               [&](const AtomSet& kept) { return kept.subset_of(s); });
            if (dominated)
                continue;
            supports.push_back(std::move(s));
            sorted_values.push_back(flat[i]);
        }
        result = PackingSearch(std::move(supports), std::move(sorted_values)).run();
    }
    if (has_one) {
        result.members.insert(result.members.begin(), 1);
        ++result.size;
    }
    return result;
}

std::int64_t nu_packing(std::span<const std::int64_t> values)
{
    return max_coprime_packing(values).size;
}

} // namespace coprime
