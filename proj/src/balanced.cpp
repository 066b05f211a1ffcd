#include "coprime_ramsey/balanced.hpp"
#include "coprime_ramsey/parallel.hpp"
#include "coprime_ramsey/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace coprime {

namespace {

/// Bin index per prime index (1-based), -1 when the prime is in no bin.
std::vector<int> prime_owner(const PrimeTable& table, const BinPartition& bins, std::int64_t n)
{
    std::vector<int> owner(static_cast<std::size_t>(table.pi(n)) + 1, -1);
    for (int i = 0; i < bins.color_count(); ++i)
        for (std::int64_t p : bins.bins[static_cast<std::size_t>(i)])
            if (p <= n)
                owner[static_cast<std::size_t>(table.index_of(p))] = i;
    return owner;
}

std::uint32_t allowed_mask(std::int64_t v, const PrimeTable& table, const std::vector<int>& owner)
{
    std::uint32_t mask = 0;
    for (std::int64_t p : table.prime_support(v)) {
        const int b = owner[static_cast<std::size_t>(table.index_of(p))];
        if (b >= 0)
            mask |= 1u << b;
    }
    return mask;
}

std::vector<std::int64_t> prime_range(std::int64_t from, std::int64_t to)
{
    std::vector<std::int64_t> out;
    for (std::int64_t i = from; i <= to; ++i)
        out.push_back(nth_prime(i));
    return out;
}

/// Two-bin construction shared by the diagonal and off-diagonal splits.
/// `a` is the demand of the vertex-1 color, `b` the other one, a >= b.
BalancedSplit two_bin_split(int a, int b, int one_color)
{
    const std::int64_t m = a + b - 2;
    BalancedSplit out;
    out.spec.n = nth_prime(m) - 1;
    out.spec.one_color = one_color;
    out.spec.s = one_color == 0 ? a : b;
    out.spec.t = one_color == 0 ? b : a;
    out.spec.bin0 = prime_range(2, a - 1);
    out.spec.bin1 = prime_range(a, m - 1);
    out.spec.bin1.insert(out.spec.bin1.begin(), 2);

    const int other = 1 - one_color;
    out.bins.bins.resize(2);
    out.bins.bins[static_cast<std::size_t>(one_color)] = out.spec.bin0;
    out.bins.bins[static_cast<std::size_t>(other)] = out.spec.bin1;
    out.bins.capacities = bin_capacities(Demands{out.spec.s, out.spec.t}, one_color);
    out.bins.one_color = one_color;

    out.forced = classify_vertices(out.spec.n, out.bins);

    const std::int64_t n = out.spec.n;
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    for (std::int64_t v : out.forced.forced0)
        colors[static_cast<std::size_t>(v - 1)] = 0;
    for (std::int64_t v : out.forced.forced1)
        colors[static_cast<std::size_t>(v - 1)] = 1;
    for (std::int64_t v : out.forced.flexible)
        colors[static_cast<std::size_t>(v - 1)] = other;
    // the b - 2 composites 2p_2..2p_{b-1} join the vertex-1 color
    for (int i = 2; i <= b - 1; ++i) {
        const std::int64_t v = 2 * nth_prime(i);
        if (v > n)
            throw std::logic_error("flexible vertex 2p_" + std::to_string(i) + " exceeds n");
        colors[static_cast<std::size_t>(v - 1)] = one_color;
    }
    out.witness = witness_from_colors(n, out.bins, colors);
    return out;
}

} // namespace

ForcedSets classify_vertices(std::int64_t n, const BinPartition& bins)
{
    if (bins.color_count() != 2)
        throw std::invalid_argument("classify_vertices needs exactly two bins");
    const auto table = shared_primes(std::max<std::int64_t>(n, 2));
    const auto owner = prime_owner(*table, bins, n);
    ForcedSets f;
    for (std::int64_t v = 1; v <= n; ++v) {
        if (v == 1) {
            (bins.one_color.value_or(0) == 0 ? f.forced0 : f.forced1).push_back(1);
            continue;
        }
        const std::uint32_t mask = allowed_mask(v, *table, owner);
        if (mask == 1u)
            f.forced0.push_back(v);
        else if (mask == 2u)
            f.forced1.push_back(v);
        else if (mask == 3u)
            f.flexible.push_back(v);
        else
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no prime in either bin");
    }
    return f;
}

ColoringWitness witness_from_colors(std::int64_t n, const BinPartition& bins, const std::vector<int>& colors)
{
    if (static_cast<std::int64_t>(colors.size()) != n)
        throw std::invalid_argument("one color per vertex required");
    ColoringWitness w;
    w.shift = 0;
    w.length = n;
    w.colors = colors;
    w.witness_primes.resize(static_cast<std::size_t>(n));
    for (std::int64_t v = 2; v <= n; ++v)
        w.witness_primes[static_cast<std::size_t>(v - 1)] = witness_in_bin(v, bins, colors[static_cast<std::size_t>(v - 1)]);
    return w;
}

BalancedSplit skip2_split(int k)
{
    if (k < 2)
        throw std::invalid_argument("skip2_split needs k >= 2");
    return two_bin_split(k, k, 0);
}

std::int64_t density_window_size(int k)
{
    return 2 * static_cast<std::int64_t>(k - 2) + 1;
}

ColoringWitness density_window(int k, std::int64_t r)
{
    if (k < 3)
        throw std::invalid_argument("density_window needs k >= 3");
    const std::int64_t n = nth_prime(2 * k - 2) - 1;
    const std::int64_t half = n / 2;
    if (r < half - (k - 2) || r > half + (k - 2))
        throw ConstructionRangeError("color-0 size " + std::to_string(r) + " is outside the window ["
                                     + std::to_string(half - (k - 2)) + ", " + std::to_string(half + (k - 2))
                                     + "] of this construction");
    // r <= n/2: toggle flexible vertices into color 0; r > n/2: build n - r and swap names
    const bool swapped = r > half;
    const std::int64_t target = swapped ? n - r : r;
    const std::int64_t toggles = target - (half - (k - 2));

    BinPartition bins;
    bins.bins = {prime_range(2, k - 1), prime_range(k, 2 * k - 3)};
    bins.bins[1].insert(bins.bins[1].begin(), 2);
    bins.one_color = 0;
    const auto forced = classify_vertices(n, bins);

    std::vector<int> colors(static_cast<std::size_t>(n), 1);
    for (std::int64_t v : forced.forced0)
        colors[static_cast<std::size_t>(v - 1)] = 0;
    for (std::int64_t i = 2; i < 2 + toggles; ++i)
        colors[static_cast<std::size_t>(2 * nth_prime(i) - 1)] = 0;
    if (swapped) {
        for (int& c : colors)
            c = 1 - c;
        std::swap(bins.bins[0], bins.bins[1]);
        bins.one_color = 1;
    }
    bins.capacities = bin_capacities(Demands{k, k}, bins.one_color);
    return witness_from_colors(n, bins, colors);
}

BalancedSplit offdiag_split(int s, int t)
{
    if (s < 2 || t < 2)
        throw std::invalid_argument("offdiag_split needs s, t >= 2");
    // vertex 1 joins the larger demand; ties keep it in color 0
    const int one_color = s >= t ? 0 : 1;
    return two_bin_split(std::max(s, t), std::min(s, t), one_color);
}

BinPartition roundrobin_bins(int c, int k, int start, DealRule rule)
{
    if (c < 2 || c > 32)
        throw std::invalid_argument("roundrobin_bins supports 2..32 colors");
    if (k < 2)
        throw std::invalid_argument("roundrobin_bins needs k >= 2");
    if (start < 0 || start >= c)
        throw std::invalid_argument("roundrobin start must lie in [0, c)");

    const std::int64_t primes = static_cast<std::int64_t>(c) * (k - 1) - 1;
    BinPartition out;
    out.bins.resize(static_cast<std::size_t>(c));
    // the deal leaves the bin just before `start` one prime short
    const int short_bin = (start + c - 1) % c;
    const int one_color = rule == DealRule::NextNonFull ? 0 : short_bin;
    out.one_color = one_color;
    out.capacities.assign(static_cast<std::size_t>(c), k - 1);
    out.capacities[static_cast<std::size_t>(one_color)] = k - 2;

    int cursor = start;
    for (std::int64_t j = 1; j <= primes; ++j) {
        int bin = cursor;
        while (static_cast<std::int64_t>(out.bins[static_cast<std::size_t>(bin)].size())
               >= out.capacities[static_cast<std::size_t>(bin)])
            bin = (bin + 1) % c;
        out.bins[static_cast<std::size_t>(bin)].push_back(nth_prime(j));
        cursor = (bin + 1) % c;
    }
    return out;
}

FlowInstance bins_flow_instance(std::int64_t n, const BinPartition& bins, TargetRule rule)
{
    const int c = bins.color_count();
    const auto table = shared_primes(std::max<std::int64_t>(n, 2));
    const auto owner = prime_owner(*table, bins, n);
    FlowInstance inst;
    inst.colors = c;
    inst.rule = rule;
    inst.allowed.reserve(static_cast<std::size_t>(n));
    for (std::int64_t v = 1; v <= n; ++v) {
        if (v == 1) {
            inst.allowed.push_back(1u << bins.one_color.value_or(0));
            continue;
        }
        const std::uint32_t mask = allowed_mask(v, *table, owner);
        if (mask == 0)
            throw std::invalid_argument("vertex " + std::to_string(v) + " meets no bin");
        inst.allowed.push_back(mask);
    }
    if (rule == TargetRule::Exact)
        inst.targets = balanced_targets(n, c);
    return inst;
}

MulticolorAttempt multicolor_certificate(int c, int k, int start, DealRule rule, TargetRule targets)
{
    MulticolorAttempt out;
    out.c = c;
    out.k = k;
    out.n = nth_prime(static_cast<std::int64_t>(c) * (k - 1)) - 1;
    out.bins = roundrobin_bins(c, k, start, rule);
    const auto inst = bins_flow_instance(out.n, out.bins, targets);
    out.assignment = flow_assign(inst);
    if (out.assignment.feasible)
        out.witness = witness_from_colors(out.n, out.bins, out.assignment.colors);
    return out;
}

double PhaseScan::onset_ratio() const
{
    return static_cast<double>(all_success_from) / (c * std::log(static_cast<double>(c)));
}

PhaseScan phase_scan(int c, int k_min, int k_max, unsigned jobs, int start, DealRule rule, TargetRule targets)
{
    if (k_min < 2 || k_max < k_min)
        throw std::invalid_argument("phase_scan needs 2 <= k_min <= k_max");
    PhaseScan scan;
    scan.c = c;
    scan.k_min = k_min;
    scan.k_max = k_max;
    nth_prime(static_cast<std::int64_t>(c) * (k_max - 1));   // warm the shared table once
    scan.rows = parallel_map(static_cast<std::size_t>(k_max - k_min + 1), jobs, [&](std::size_t i) {
        const int k = k_min + static_cast<int>(i);
        const auto attempt = multicolor_certificate(c, k, start, rule, targets);
        return PhaseRow{k, attempt.n, attempt.assignment.feasible};
    });
    scan.all_success_from = k_min;
    for (const auto& row : scan.rows) {
        if (row.feasible) {
            ++scan.successes;
            continue;
        }
        if (!scan.first_failure)
            scan.first_failure = row.k;
        scan.last_failure = row.k;
        scan.all_success_from = row.k + 1;
    }
    return scan;
}

std::vector<ImbalanceRow> imbalance_table(int k_min, int k_max)
{
    if (k_min < 2 || k_max < k_min)
        throw std::invalid_argument("imbalance_table needs 2 <= k_min <= k_max");
    std::vector<ImbalanceRow> rows;
    for (int k = k_min; k <= k_max; ++k) {
        const Demands d = Demands::diagonal(k, 2);
        const std::int64_t n = r_cop(d) - 1;
        const auto cert = build_prime_bin_coloring(n, d);
        const auto sizes = cert.witness.class_sizes(2);
        rows.push_back({k, n, std::max(sizes[0], sizes[1]), std::min(sizes[0], sizes[1])});
    }
    return rows;
}

bool is_near_balanced(const ColoringWitness& w, int colors)
{
    const auto sizes = w.class_sizes(colors);
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    return *hi - *lo <= 1;
}

DensityRow density_window_row(int k)
{
    DensityRow row;
    row.k = k;
    const auto split = skip2_split(k);
    row.n = split.spec.n;
    row.f0_base = static_cast<std::int64_t>(split.forced.forced0.size());
    row.f0_theorem = row.n / 2 - (k - 2);
    row.f0_matches = row.f0_base == row.f0_theorem;
    row.window = density_window_size(k);
    const Demands d{k, k};
    row.all_realizable = true;
    for (std::int64_t r = row.n / 2 - (k - 2); r <= row.n / 2 + (k - 2); ++r) {
        const auto w = density_window(k, r);
        if (w.class_sizes(2)[0] != r || !verify_witness(w, d)) {
            row.all_realizable = false;
            break;
        }
    }
    return row;
}

OffdiagRow offdiag_row(int s, int t)
{
    const auto split = offdiag_split(s, t);
    OffdiagRow row;
    row.s = s;
    row.t = t;
    row.n = split.spec.n;
    row.f0 = static_cast<std::int64_t>(split.forced.forced0.size());
    row.f1 = static_cast<std::int64_t>(split.forced.forced1.size());
    row.flexible = static_cast<std::int64_t>(split.forced.flexible.size());
    row.balanced = is_near_balanced(split.witness, 2)
                   && verify_divisor_certificate(split.witness, split.bins, Demands{s, t}).accepted;
    return row;
}

} // namespace coprime
