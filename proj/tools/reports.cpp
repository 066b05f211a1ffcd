#include "reports.hpp"

#include "coprime_ramsey/certificates.hpp"
#include "coprime_ramsey/coprime_graph.hpp"
#include "coprime_ramsey/csv.hpp"
#include "coprime_ramsey/parallel.hpp"
#include "coprime_ramsey/primes.hpp"
#include "coprime_ramsey/sat_encoder.hpp"
#include "coprime_ramsey/support_certificate.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace coprime::report {

namespace {

using nlohmann::json;

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(std::uint64_t v) { return std::to_string(v); }
std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_ints(std::span<const int> values, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? sep : "") + std::to_string(values[i]);
    return out;
}

// JSON cells keep integers and decimals numeric, everything else as text.
json cell_json(const std::string& cell)
{
    if (cell.empty())
        return cell;
    std::int64_t iv = 0;
    auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), iv);
    if (ec == std::errc() && p == cell.data() + cell.size())
        return iv;
    const bool decimal = cell.find_first_not_of("-0123456789.") == std::string::npos
                         && std::count(cell.begin(), cell.end(), '.') == 1 && cell.front() != '.' && cell.back() != '.';
    if (decimal)
        return std::stod(cell);
    return cell;
}

std::string verdict_cell(Outcome o, std::size_t& unknown)
{
    if (o == Outcome::Unknown)
        ++unknown;
    return to_string(o);
}

std::string seconds_cell(double s) { return fixed(s, 3); }

} // namespace

std::string to_csv(const Table& t)
{
    std::ostringstream out;
    CsvWriter w(out);
    w.row(t.header);
    for (const auto& row : t.rows)
        w.row(row);
    return out.str();
}

std::string to_json(const Table& t)
{
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < t.header.size() && i < row.size(); ++i)
            obj[t.header[i]] = cell_json(row[i]);
        rows.push_back(std::move(obj));
    }
    // nlohmann sorts object keys; keep the column order alongside.
    json doc = {{"columns", t.header}, {"rows", rows}};
    return doc.dump(2) + "\n";
}

std::vector<std::int64_t> parse_int_list(std::string_view text)
{
    std::vector<std::int64_t> out;
    auto parse_one = [&](std::string_view s) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || p != s.data() + s.size())
            throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
        return v;
    };
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const auto item = text.substr(pos, comma - pos);
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(parse_one(item));
        } else {
            const auto lo = parse_one(item.substr(0, dots));
            const auto hi = parse_one(item.substr(dots + 2));
            if (hi < lo)
                throw std::invalid_argument("empty range '" + std::string(item) + "'");
            for (auto v = lo; v <= hi; ++v)
                out.push_back(v);
        }
        pos = comma + 1;
    }
    if (out.empty())
        throw std::invalid_argument("empty integer list");
    return out;
}

std::string demand_label(const Demands& d)
{
    if (d.is_diagonal() && d.colors() > 1)
        return "(" + std::to_string(d[0]) + ";" + std::to_string(d.colors()) + ")";
    return "(" + join_ints(d.ks(), ",") + ")";
}

Table values(const std::vector<std::int64_t>& ks, int colors)
{
    Table t;
    t.header = {"k", "prime index", "R_cop(k;" + std::to_string(colors) + ")", "R/(k log k)"};
    for (auto k : ks) {
        const auto d = Demands::diagonal(static_cast<int>(k), colors);
        const auto r = r_cop(d);
        const double kd = static_cast<double>(k);
        t.add({str(k), str(d.rank_sum()), str(r), fixed(static_cast<double>(r) / (kd * std::log(kd)), 3)});
    }
    return t;
}

Table mixed(const std::vector<Demands>& demands)
{
    static const std::vector<Demands> standard = {
        Demands{3, 3, 3}, Demands{3, 3, 3, 3}, Demands{3, 3, 3, 3, 3}, Demands{3, 3, 3, 3, 3, 3},
        Demands{3, 4},    Demands{3, 5},       Demands{4, 5},          Demands{5, 7},
    };
    Table t;
    t.header = {"Demand type", "Parameters", "Exact value"};
    for (const auto& d : demands.empty() ? standard : demands) {
        std::string type;
        if (d.is_diagonal())
            type = "Diagonal, " + std::to_string(d.colors()) + " colors";
        else
            type = d.colors() == 2 ? "Off diagonal" : "Mixed, " + std::to_string(d.colors()) + " colors";
        t.add({type, "R_cop" + demand_label(d) + "=p_" + str(d.rank_sum()), str(r_cop(d))});
    }
    return t;
}

Table rank_table(const ClassicalTable& table)
{
    Table t;
    t.header = {"Formulation", "base threshold on K_r", "rank trigger", "coprime threshold"};
    const std::vector<Demands> vertex = {Demands{3, 3}, Demands{4, 4}, Demands{3, 3, 3}, Demands{3, 5}};
    const std::vector<Demands> edge = {Demands{3, 3}, Demands{3, 3, 3}, Demands{4, 4}, Demands{3, 4}, Demands{3, 5}};
    for (const auto& d : vertex) {
        const auto r = rank_trigger(d, RankMode::Vertex, table);
        std::string parts;
        for (std::size_t i = 0; i < d.ks().size(); ++i)
            parts += (i ? " + " : "") + std::to_string(d[i] - 1);
        t.add({"R_cop" + demand_label(d), "1+(" + parts + ")=" + str(r), str(r),
               "p_" + str(r - 1) + "=" + str(rank_threshold(r))});
    }
    for (const auto& d : edge) {
        const auto r = rank_trigger(d, RankMode::Edge, table);
        t.add({"R_cop^edge" + demand_label(d), "R=" + str(r), str(r), "p_" + str(r - 1) + "=" + str(rank_threshold(r))});
    }
    return t;
}

Table edge_summary(const ClassicalTable& table)
{
    Table t;
    t.header = {"Classical value", "classical R", "edge-coprime value", "status"};
    for (const auto& d : {Demands{3, 3}, Demands{4, 4}, Demands{5, 5}, Demands{3, 4}, Demands{3, 5}}) {
        const auto& e = table.lookup(d.ks());
        const auto edge = r_cop_edge(d, table);
        t.add({e.label(), e.window.to_string(), edge.to_string(), e.window.exact() ? "exact" : "best-known bounds"});
    }
    return t;
}

Table edge_transfer(const ClassicalTable& table)
{
    Table t;
    t.header = {"Classical parameter", "R(k,l)", "translated R_cop^edge(k,l)"};
    for (const auto& e : table.entries()) {
        if (e.uniformity != 2 || e.target != ClassicalTarget::Clique || e.demands.size() != 2 || e.demands[0] < 3)
            continue;
        t.add({e.label(), e.window.to_string(), prime_index_transfer(e.window).to_string()});
    }
    return t;
}

Table sat_diag(const std::vector<std::int64_t>& ks, unsigned jobs)
{
    Table t;
    t.header = {"k", "R_cop(k;2)", "cert. rank", "all K_k", "prime-clique K_k", "SAT clauses"};
    const auto rows = parallel_map(ks.size(), jobs, [&](std::size_t i) { return diagnostics_row(static_cast<int>(ks[i])); });
    for (const auto& r : rows)
        t.add({str(static_cast<std::int64_t>(r.k)), str(r.r_cop), str(r.certificate_rank), str(r.all_cliques),
               str(r.prime_cliques), str(r.clauses)});
    return t;
}

Table labels(const std::vector<std::int64_t>& ns, unsigned jobs)
{
    Table t;
    t.header = {"n", "rank r=pi(n)+1", "coprime edges checked", "edge label collisions", "result"};
    const auto rows = parallel_map(ns.size(), jobs, [&](std::size_t i) { return label_collision_scan(IntervalGraph(0, ns[i])); });
    for (const auto& r : rows) {
        t.add({str(r.n), str(r.rank), str(r.coprime_edges), str(r.collisions), r.pass() ? "pass" : "fail"});
        t.failed = t.failed || !r.pass();
    }
    return t;
}

Table imbalance(const std::vector<std::int64_t>& ks)
{
    Table t;
    t.header = {"k", "extremal n", "color sizes", "imbalance", "minority fraction"};
    for (auto k : ks) {
        const auto r = imbalance_table(static_cast<int>(k), static_cast<int>(k)).front();
        t.add({str(k), str(r.n), str(r.majority) + ":" + str(r.minority), str(r.imbalance()),
               fixed(r.minority_fraction(), 3)});
    }
    return t;
}

Table shifted_thresholds(const std::vector<std::int64_t>& shifts, const std::vector<std::int64_t>& ks,
                         const SearchBudget& budget, unsigned jobs, bool timings)
{
    Table t;
    t.header = {"shift m"};
    for (auto k : ks)
        t.header.push_back("k=" + str(k));
    if (timings)
        t.header.push_back("seconds");
    const std::size_t cols = ks.size();
    const auto cells = parallel_map(shifts.size() * cols, jobs, [&](std::size_t i) {
        const auto m = shifts[i / cols];
        const int k = static_cast<int>(ks[i % cols]);
        return threshold(m, Demands::diagonal(k, 2), Balance::None, budget, shifted_upper_bound(m, k));
    });
    for (std::size_t r = 0; r < shifts.size(); ++r) {
        std::vector<std::string> row = {str(shifts[r])};
        double seconds = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& scan = cells[r * cols + c];
            seconds += scan.seconds;
            if (scan.outcome == Outcome::Feasible) {
                row.push_back(str(scan.threshold));
            } else {
                ++t.unknown;
                row.push_back("unknown");
            }
        }
        if (timings)
            row.push_back(seconds_cell(seconds));
        t.add(std::move(row));
    }
    return t;
}

Table shifted_certificates(const std::vector<std::int64_t>& shifts, const std::vector<std::int64_t>& ks, unsigned jobs)
{
    Table t;
    t.header = {"k", "shifts tested", "shifts with certificate", "max certified length"};
    const auto [smin, smax] = std::minmax_element(shifts.begin(), shifts.end());
    const auto [kmin, kmax] = std::minmax_element(ks.begin(), ks.end());
    const auto cells = shifted_lower_cert_scan(*smin, *smax, static_cast<int>(*kmin), static_cast<int>(*kmax), jobs);
    for (auto k : ks) {
        std::int64_t tested = 0;
        std::int64_t certified = 0;
        std::optional<std::int64_t> longest;
        for (const auto& c : cells) {
            if (c.k != k || std::find(shifts.begin(), shifts.end(), c.shift) == shifts.end())
                continue;
            ++tested;
            if (c.max_certified_length) {
                ++certified;
                longest = std::max(longest.value_or(0), *c.max_certified_length);
            }
        }
        t.add({str(k), str(tested), str(certified), longest ? str(*longest) : "--"});
    }
    return t;
}

Table shifted_frontier(const std::vector<std::int64_t>& shifts, const std::vector<std::int64_t>& ks,
                       const SearchBudget& budget, unsigned jobs)
{
    Table t;
    t.header = {"k", "shift range", "exact", "unknown", "not found"};
    const auto [smin, smax] = std::minmax_element(shifts.begin(), shifts.end());
    const std::size_t cols = shifts.size();
    const auto cells = parallel_map(ks.size() * cols, jobs, [&](std::size_t i) {
        const int k = static_cast<int>(ks[i / cols]);
        const auto m = shifts[i % cols];
        return threshold(m, Demands::diagonal(k, 2), Balance::None, budget, shifted_upper_bound(m, k));
    });
    for (std::size_t r = 0; r < ks.size(); ++r) {
        std::int64_t exact = 0, unknown = 0, missing = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& scan = cells[r * cols + c];
            if (scan.outcome == Outcome::Feasible)
                ++exact;
            else if (!scan.scan.empty() && scan.scan.back().second == Outcome::Unknown)
                ++unknown;
            else
                ++missing;   // every length up to the upper bound avoided: contradicts the bound
        }
        t.unknown += static_cast<std::size_t>(unknown);
        t.failed = t.failed || missing > 0;
        t.add({str(ks[r]), str(*smin) + "--" + str(*smax), str(exact), str(unknown), str(missing)});
    }
    return t;
}

Table support_primitive()
{
    Table t;
    t.header = {"Instance", "Primitive result", "Explanation"};
    const auto g30 = coprime_support_graph(0, 30);
    const std::vector<std::pair<std::string, SupportGraph>> instances = {
        {"G_30", g30},
        {"[11,17]", coprime_support_graph(10, 7)},
        {"G_30 plus edge 6--10", g30.with_edge(6, 10)},
    };
    for (const auto& [name, g] : instances) {
        const auto check = check_support_model(g);
        std::string why;
        switch (check.failure) {
        case ModelFailure::None:
            why = check.support_case == SupportCase::OneUniversal
                      ? "passes: one universal vertex and all prime singletons occur"
                      : "passes: no universal vertex and all prime singletons occur";
            break;
        case ModelFailure::SingletonCoverage: {
            why = "fails singleton coverage for atoms ";
            for (std::size_t i = 0; i < check.missing_atoms.size(); ++i)
                why += (i ? "," : "") + g.atom_label(check.missing_atoms[i]);
            break;
        }
        case ModelFailure::EmptySupportCount:
            why = "fails: more than one empty-support vertex";
            break;
        case ModelFailure::AdjacencyMismatch:
            why = "fails adjacency iff support-disjointness";
            break;
        }
        t.add({name, check.passed ? "pass" : "fail", why});
    }
    return t;
}

Table balanced_thresholds(const std::vector<std::int64_t>& ks, const SearchBudget& budget)
{
    Table t;
    t.header = {"k", "balanced threshold", "unrestricted", "gap", "last feasible"};
    for (auto k64 : ks) {
        const int k = static_cast<int>(k64);
        const Demands d = Demands::diagonal(k, 2);
        const auto unrestricted = r_cop(d);
        // Past the unrestricted value no coloring avoids, balanced or not.
        std::optional<std::int64_t> first_bad;
        std::int64_t last_feasible = 0;
        bool unknown = false;
        for (std::int64_t n = 1; n < unrestricted && !first_bad; ++n) {
            const auto r = avoidable(make_search_problem(0, n, d, Balance::Near), budget);
            if (r.outcome == Outcome::Feasible)
                last_feasible = n;
            else if (r.outcome == Outcome::Infeasible)
                first_bad = n;
            else
                unknown = true;
        }
        const auto balanced = first_bad.value_or(unrestricted);
        if (unknown) {
            ++t.unknown;
            t.add({str(k64), "unknown", str(unrestricted), "unknown", str(last_feasible)});
        } else {
            t.add({str(k64), str(balanced), str(unrestricted), str(unrestricted - balanced), str(last_feasible)});
        }
    }
    return t;
}

Table skip2_rows(const std::vector<std::int64_t>& ks, unsigned jobs)
{
    Table t;
    t.header = {"k", "n", "F_0", "n/2-(k-2)", "color sizes", "balanced?", "certified?"};
    const auto rows = parallel_map(ks.size(), jobs, [&](std::size_t i) {
        const int k = static_cast<int>(ks[i]);
        const auto s = skip2_split(k);
        const auto sizes = s.witness.class_sizes(2);
        const bool certified = verify_divisor_certificate(s.witness, s.bins, Demands::diagonal(k, 2)).accepted;
        return std::vector<std::string>{str(static_cast<std::int64_t>(k)), str(s.spec.n),
                                        str(static_cast<std::int64_t>(s.forced.forced0.size())),
                                        str(s.spec.n / 2 - (k - 2)), str(sizes[0]) + ":" + str(sizes[1]),
                                        yes_no(sizes[0] == sizes[1]), yes_no(certified)};
    });
    for (const auto& r : rows) {
        t.failed = t.failed || r[5] != "yes" || r[6] != "yes" || r[2] != r[3];
        t.add(r);
    }
    return t;
}

Table window(const std::vector<std::int64_t>& ks, unsigned jobs)
{
    Table t;
    t.header = {"k", "n", "F_0 (base)", "F_0 (theorem)", "window size", "F_0 matches?", "all realizable?"};
    const auto rows = parallel_map(ks.size(), jobs, [&](std::size_t i) { return density_window_row(static_cast<int>(ks[i])); });
    for (const auto& r : rows) {
        t.failed = t.failed || !r.f0_matches || !r.all_realizable;
        t.add({str(static_cast<std::int64_t>(r.k)), str(r.n), str(r.f0_base), str(r.f0_theorem), str(r.window),
               yes_no(r.f0_matches), yes_no(r.all_realizable)});
    }
    return t;
}

Table offdiag(const std::vector<std::pair<int, int>>& pairs)
{
    static const std::vector<std::pair<int, int>> standard = {{3, 4},    {3, 10},    {10, 30},
                                                              {50, 50},  {100, 150}, {1000, 1000}};
    Table t;
    t.header = {"s", "t", "n", "F_0", "F_1", "flexible", "balanced?"};
    for (const auto& [s, u] : pairs.empty() ? standard : pairs) {
        const auto r = offdiag_row(s, u);
        t.failed = t.failed || !r.balanced;
        t.add({str(static_cast<std::int64_t>(r.s)), str(static_cast<std::int64_t>(r.t)), str(r.n), str(r.f0), str(r.f1),
               str(r.flexible), yes_no(r.balanced)});
    }
    return t;
}

Table offdiag_grid(int lo, int hi, unsigned jobs)
{
    if (lo < 2 || hi < lo)
        throw std::invalid_argument("grid needs 2 <= lo <= hi");
    Table t;
    t.header = {"s,t range", "pairs checked", "max prime index", "all verified"};
    const auto side = static_cast<std::size_t>(hi - lo + 1);
    const auto ok = parallel_map(side, jobs, [&](std::size_t i) {
        const int s = lo + static_cast<int>(i);
        int good = 0;
        for (int u = lo; u <= hi; ++u)
            good += offdiag_row(s, u).balanced;
        return good;
    });
    std::int64_t verified = 0;
    for (int g : ok)
        verified += g;
    const auto pairs = static_cast<std::int64_t>(side * side);
    t.failed = verified != pairs;
    t.add({str(static_cast<std::int64_t>(lo)) + "--" + str(static_cast<std::int64_t>(hi)), str(pairs),
           str(static_cast<std::int64_t>(2 * hi - 2)), yes_no(verified == pairs)});
    return t;
}

namespace {

std::vector<PhaseScan> run_phase(const std::vector<std::int64_t>& cs, int k_min, int k_max, unsigned jobs, int start,
                                 DealRule rule)
{
    std::vector<PhaseScan> scans;
    for (auto c : cs)
        scans.push_back(phase_scan(static_cast<int>(c), k_min, k_max, jobs, start, rule));
    return scans;
}

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "--"; }

} // namespace

Table phase(const std::vector<std::int64_t>& cs, int k_min, int k_max, unsigned jobs, int start, DealRule rule)
{
    Table t;
    t.header = {"colors c", "last failure", "all-success from", "tested through", "k_on/(c log c)"};
    for (const auto& s : run_phase(cs, k_min, k_max, jobs, start, rule))
        t.add({std::to_string(s.c), opt(s.last_failure), std::to_string(s.all_success_from), std::to_string(s.k_max),
               fixed(s.onset_ratio(), 2)});
    return t;
}

Table phase_summary(const std::vector<std::int64_t>& cs, int k_min, int k_max, unsigned jobs, int start, DealRule rule)
{
    Table t;
    t.header = {"c", "strategy", "successes", "tested", "first failure", "all-success from"};
    const std::string strategy = "round-robin start " + std::to_string(start);
    for (const auto& s : run_phase(cs, k_min, k_max, jobs, start, rule))
        t.add({std::to_string(s.c), strategy, str(s.successes), str(static_cast<std::int64_t>(s.rows.size())),
               opt(s.first_failure), std::to_string(s.all_success_from)});
    return t;
}

std::vector<EndpointCase> standard_endpoint_cases()
{
    return {{3, 3}, {4, 3}, {5, 3}, {3, 4}, {3, 5}, {4, 4}, {6, 3}, {7, 3}, {4, 5}};
}

Table endpoint(const std::vector<EndpointCase>& cases, const SearchBudget& budget, bool timings)
{
    Table t;
    t.header = {"c", "k", "endpoint n", "coprime K_k count", "balanced feasible?"};
    if (timings)
        t.header.push_back("seconds");
    for (const auto& [c, k] : cases) {
        const auto d = balanced_endpoint_decide(c, k, budget);
        std::vector<std::string> row = {std::to_string(c), std::to_string(k), str(d.n),
                                        str(static_cast<std::uint64_t>(d.clique_count)),
                                        verdict_cell(d.result.outcome, t.unknown)};
        if (timings)
            row.push_back(seconds_cell(d.result.seconds));
        t.add(std::move(row));
    }
    return t;
}

Table gap(std::int64_t m_max)
{
    if (m_max < 2)
        throw std::invalid_argument("gap scan needs m_max >= 2");
    const auto table = PrimeTable::covering_index(2 * m_max);
    const auto r = gap_scan(table, m_max);
    Table t;
    t.header = {"finite check", "value", "attained at"};
    t.add({"range checked", "2<=m<=" + str(m_max), "--"});
    t.add({"p_{2m}-2p_m minimum", str(r.min_lower_gap), "m=" + str(r.argmin_lower)});
    t.add({"3p_m-p_{2m} minimum", str(r.min_upper_gap), "m=" + str(r.argmin_upper)});
    t.failed = !r.strict();
    return t;
}

Table oracle(std::int64_t max_rank, const SearchBudget& budget, unsigned jobs)
{
    // Every nondecreasing demand vector with k_i >= 2 and sum (k_i - 1) <= max_rank.
    std::vector<Demands> all;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int min_part, std::int64_t left) -> void {
        if (!cur.empty())
            all.emplace_back(cur);
        for (int part = min_part; part <= left; ++part) {
            cur.push_back(part + 1);
            self(self, part, left - part);
            cur.pop_back();
        }
    };
    rec(rec, 1, max_rank);
    std::stable_sort(all.begin(), all.end(), [](const Demands& a, const Demands& b) { return a.rank_sum() < b.rank_sum(); });

    Table t;
    t.header = {"demands", "M", "formula", "search", "match"};
    const auto scans = parallel_map(all.size(), jobs, [&](std::size_t i) {
        return threshold(0, all[i], Balance::None, budget, r_cop(all[i]) + 1);
    });
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto formula = r_cop(all[i]);
        std::string found = "unknown";
        if (scans[i].outcome == Outcome::Feasible)
            found = str(scans[i].threshold);
        else if (scans[i].scan.empty() || scans[i].scan.back().second != Outcome::Unknown)
            found = "none";
        else
            ++t.unknown;
        const bool match = found == str(formula);
        t.failed = t.failed || (!match && found != "unknown");
        t.add({demand_label(all[i]), str(all[i].rank_sum()), str(formula), found, yes_no(match)});
    }
    return t;
}

} // namespace coprime::report
