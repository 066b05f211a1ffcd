// coprime-ramsey: regenerate the tables, run the verifiers, emit certificates.
//
// Exit status: 0 all checks held (and matched the golden file, if given),
// 1 mismatch or failed check, 2 unknown verdicts present, 3 usage error.

#include "reports.hpp"

#include "coprime_ramsey/balanced.hpp"
#include "coprime_ramsey/certificates.hpp"
#include "coprime_ramsey/sat_encoder.hpp"
#include "coprime_ramsey/support_certificate.hpp"
#include "coprime_ramsey/thresholds.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace coprime;
using report::Table;

namespace {

enum Exit { Ok = 0, Mismatch = 1, Unknown = 2, Usage = 3 };

struct Common {
    std::string format = "csv";
    std::string out;
    std::string golden;
    bool write_golden = false;
    unsigned jobs = 0;
    std::int64_t budget_ms = 0;
    bool timings = false;

    unsigned workers() const { return jobs ? jobs : std::max(1u, std::thread::hardware_concurrency()); }

    // --budget-ms, else RAMSEY_BUDGET_MS, else `fallback` (0 = unlimited).
    SearchBudget budget(std::int64_t fallback = 0) const
    {
        std::int64_t ms = budget_ms;
        if (ms == 0)
            if (const char* env = std::getenv("RAMSEY_BUDGET_MS"))
                ms = std::stoll(env);
        if (ms == 0)
            ms = fallback;
        if (ms < 0)
            throw std::invalid_argument("budget must be positive");
        return ms ? SearchBudget::millis(ms) : SearchBudget::unlimited();
    }
};

void add_common(CLI::App* sub, Common& c, bool search = false)
{
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--out", c.out, "write output here instead of stdout");
    sub->add_option("--golden", c.golden, "compare the CSV against this file");
    sub->add_flag("--write-golden", c.write_golden, "overwrite the --golden file with this run's CSV");
    sub->add_option("-j,--jobs", c.jobs, "worker threads (default: all cores)");
    if (search) {
        sub->add_option("--budget-ms", c.budget_ms, "per-cell wall-clock budget (default $RAMSEY_BUDGET_MS)");
        sub->add_flag("--timings", c.timings, "append a wall-time column (not deterministic)");
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw std::runtime_error("cannot write " + path);
}

void emit_text(const Common& c, const std::string& text)
{
    if (c.out.empty())
        std::cout << text << std::flush;
    else
        write_file(c.out, text);
}

// Report the first differing line so a golden failure is readable in ctest output.
void explain_mismatch(const std::string& want, const std::string& got)
{
    std::istringstream a(want), b(got);
    std::string la, lb;
    for (int line = 1;; ++line) {
        const bool ha = static_cast<bool>(std::getline(a, la));
        const bool hb = static_cast<bool>(std::getline(b, lb));
        if (!ha && !hb)
            return;
        if (la != lb || ha != hb) {
            std::cerr << "golden mismatch at line " << line << "\n  golden: " << (ha ? la : "<eof>")
                      << "\n  actual: " << (hb ? lb : "<eof>") << '\n';
            return;
        }
    }
}

int finish(const Common& c, const Table& t)
{
    const auto csv = report::to_csv(t);
    emit_text(c, c.format == "json" ? report::to_json(t) : csv);
    if (!c.golden.empty()) {
        if (c.write_golden) {
            write_file(c.golden, csv);
        } else {
            const auto want = read_file(c.golden);
            if (want != csv) {
                explain_mismatch(want, csv);
                return Mismatch;
            }
        }
    }
    if (t.failed) {
        std::cerr << "a built-in check failed\n";
        return Mismatch;
    }
    if (t.unknown) {
        std::cerr << t.unknown << " unknown verdict(s)\n";
        return Unknown;
    }
    return Ok;
}

std::vector<Demands> parse_demand_list(const std::vector<std::string>& items)
{
    std::vector<Demands> out;
    for (const auto& s : items)
        out.push_back(parse_demands(s));
    return out;
}

DealRule parse_rule(const std::string& s)
{
    if (s == "next-non-full")
        return DealRule::NextNonFull;
    if (s == "short-bin")
        return DealRule::ShortBinHoldsOne;
    throw std::invalid_argument("unknown deal rule " + s);
}

std::string outcome_word(Outcome o)
{
    switch (o) {
    case Outcome::Feasible:
        return "feasible";
    case Outcome::Infeasible:
        return "infeasible";
    default:
        return "unknown";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coprime Ramsey numbers: exact values, certificates and table regeneration"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "coprime-ramsey 1.0");

    Common common;
    std::function<int()> action;

    // values
    std::string ks_text = "2..21";
    int colors = 2;
    auto* values = app.add_subcommand("values", "diagonal values R_cop(k;c) = p_{c(k-1)}");
    values->add_option("--k", ks_text, "k list or range, e.g. 2..21");
    values->add_option("--colors", colors, "number of colors")->check(CLI::Range(1, 64));
    add_common(values, common);
    values->callback([&] { action = [&] { return finish(common, report::values(report::parse_int_list(ks_text), colors)); }; });

    // mixed
    std::vector<std::string> demand_items;
    auto* mixed = app.add_subcommand("mixed", "mixed values from the exact formula");
    mixed->add_option("--demands", demand_items, "demand vectors like 3,4 or \"3 3 3\" (repeatable)");
    add_common(mixed, common);
    mixed->callback([&] { action = [&] { return finish(common, report::mixed(parse_demand_list(demand_items))); }; });

    // rank-table / edge-table
    std::string classical_json;
    auto load_classical = [&] {
        return classical_json.empty() ? ClassicalTable::embedded() : ClassicalTable::load(classical_json);
    };
    auto* rank = app.add_subcommand("rank-table", "vertex and edge rank triggers of the clique-label certificate");
    rank->add_option("--classical", classical_json, "classical Ramsey table JSON (default: embedded)");
    add_common(rank, common);
    rank->callback([&] { action = [&] { return finish(common, report::rank_table(load_classical())); }; });

    std::string edge_layout = "transfer";
    auto* edge = app.add_subcommand("edge-table", "edge-coprime values as prime-index images of classical windows");
    edge->add_option("--classical", classical_json, "classical Ramsey table JSON (default: embedded)");
    edge->add_option("--layout", edge_layout, "transfer (all two-color windows) or summary")
        ->check(CLI::IsMember({"transfer", "summary"}));
    add_common(edge, common);
    edge->callback([&] {
        action = [&] {
            const auto t = load_classical();
            return finish(common, edge_layout == "summary" ? report::edge_summary(t) : report::edge_transfer(t));
        };
    });

    // sat-diag
    std::string sat_ks = "3..8";
    bool extended = false;
    auto* sat = app.add_subcommand("sat-diag", "direct SAT encoding size at the exact threshold");
    sat->add_option("--k", sat_ks, "k list or range");
    sat->add_flag("--extended", extended, "allow k > 8 (k = 9, 10 enumerate millions of cliques)");
    add_common(sat, common);
    sat->callback([&] {
        action = [&] {
            const auto ks = report::parse_int_list(sat_ks);
            for (auto k : ks)
                if (k > 8 && !extended)
                    throw CLI::ValidationError("--k", "k > 8 needs --extended");
            return finish(common, report::sat_diag(ks, common.workers()));
        };
    });

    // labels
    std::string label_ns = "10,30,60,100,250,500,1000,2000,5000";
    auto* labels = app.add_subcommand("labels", "edge label collision scan on G_n");
    labels->add_option("--n", label_ns, "n list");
    add_common(labels, common);
    labels->callback([&] { action = [&] { return finish(common, report::labels(report::parse_int_list(label_ns), common.workers())); }; });

    // imbalance
    std::string imb_ks = "2..13";
    std::string witness_path;
    auto* imb = app.add_subcommand("imbalance", "class sizes of the canonical prime-bin coloring");
    imb->add_option("--k", imb_ks, "k list or range");
    imb->add_option("--witness", witness_path, "also write the coloring JSON for the largest k");
    add_common(imb, common);
    imb->callback([&] {
        action = [&] {
            const auto ks = report::parse_int_list(imb_ks);
            if (!witness_path.empty()) {
                const int k = static_cast<int>(*std::max_element(ks.begin(), ks.end()));
                const auto d = Demands::diagonal(k, 2);
                write_file(witness_path, build_prime_bin_coloring(r_cop(d) - 1, d).witness.to_json() + "\n");
            }
            return finish(common, report::imbalance(ks));
        };
    });

    // shifted
    std::string shift_mode = "thresholds";
    std::string shifts_text;
    std::string shift_ks;
    auto* shifted = app.add_subcommand("shifted", "shifted-interval thresholds and certificate scans");
    shifted->add_option("--mode", shift_mode, "thresholds, cert-scan or frontier")
        ->check(CLI::IsMember({"thresholds", "cert-scan", "frontier"}));
    shifted->add_option("--shifts", shifts_text, "shift list or range");
    shifted->add_option("--k", shift_ks, "k list or range");
    add_common(shifted, common, true);
    shifted->callback([&] {
        action = [&] {
            if (shift_mode == "thresholds") {
                const auto shifts = report::parse_int_list(shifts_text.empty() ? "2,3,5,10,20,30,40,50" : shifts_text);
                const auto ks = report::parse_int_list(shift_ks.empty() ? "3..5" : shift_ks);
                return finish(common, report::shifted_thresholds(shifts, ks, common.budget(60000), common.workers(),
                                                                 common.timings));
            }
            if (shift_mode == "cert-scan") {
                const auto shifts = report::parse_int_list(shifts_text.empty() ? "2..500" : shifts_text);
                const auto ks = report::parse_int_list(shift_ks.empty() ? "3..7" : shift_ks);
                return finish(common, report::shifted_certificates(shifts, ks, common.workers()));
            }
            const auto shifts = report::parse_int_list(shifts_text.empty() ? "2..100" : shifts_text);
            const auto ks = report::parse_int_list(shift_ks.empty() ? "3..6" : shift_ks);
            return finish(common, report::shifted_frontier(shifts, ks, common.budget(60000), common.workers()));
        };
    });

    // support-check
    std::string graph_path;
    std::string emit_path;
    std::vector<std::int64_t> interval;
    std::string support_demands = "10,10";
    bool support_table = false;
    auto* support = app.add_subcommand("support-check", "support-disjointness model check and forcing decision");
    support->add_option("graph", graph_path, "support graph JSON");
    support->add_option("--interval", interval, "build the coprime graph on {m+1..m+n} instead: m n")->expected(2);
    support->add_option("--demands", support_demands, "demand vector for the forcing decision");
    support->add_option("--emit", emit_path, "write the support graph JSON here");
    support->add_flag("--table", support_table, "emit the standard instance table as CSV");
    add_common(support, common);
    support->callback([&] {
        action = [&]() -> int {
            if (support_table)
                return finish(common, report::support_primitive());
            if (graph_path.empty() == interval.empty())
                throw CLI::ValidationError("support-check", "give a graph file or --interval, not both");
            const SupportGraph g = interval.empty() ? SupportGraph::parse_json(read_file(graph_path))
                                                    : coprime_support_graph(interval[0], interval[1]);
            if (!emit_path.empty())
                write_file(emit_path, g.to_json() + "\n");
            const auto d = parse_demands(support_demands);
            const auto check = check_support_model(g);
            nlohmann::json doc = {{"passed", check.passed}, {"atoms", g.atom_count()}, {"vertices", g.vertex_count()}};
            std::string line;
            bool certificate_ok = true;
            if (!check.passed) {
                line = check.describe(g);
            } else {
                const auto v = decide(g, d);
                line = v.describe(g, d);
                doc["rank"] = v.rank;
                doc["required_rank"] = v.required_rank;
                doc["forcing"] = v.forcing;
                if (v.forcing) {
                    certificate_ok = verify_clique(g, v.forcing_clique, v.required_rank).accepted;
                    doc["forcing_clique"] = v.forcing_clique;
                } else if (v.avoiding) {
                    const auto verdict = verify_atom_coloring(g, *v.avoiding, d);
                    certificate_ok = verdict.accepted;
                    if (!certificate_ok)
                        std::cerr << "avoiding coloring rejected: " << verdict.reason << '\n';
                    doc["colors"] = v.avoiding->colors;
                }
                doc["certificate_verified"] = certificate_ok;
            }
            doc["verdict"] = line;
            emit_text(common, common.format == "json" ? doc.dump(2) + "\n" : line + "\n");
            return certificate_ok ? Ok : Mismatch;
        };
    });

    // balanced-split / window / offdiag / phase
    std::string split_layout = "thresholds";
    std::string split_ks;
    auto* split = app.add_subcommand("balanced-split", "near-balanced thresholds and the skip-2 split");
    split->add_option("--layout", split_layout, "thresholds (exact search) or skip2 (construction)")
        ->check(CLI::IsMember({"thresholds", "skip2"}));
    split->add_option("--k", split_ks, "k list or range");
    split->add_option("--witness", witness_path, "write the skip-2 witness JSON for the largest k");
    add_common(split, common, true);
    split->callback([&] {
        action = [&] {
            const auto ks = report::parse_int_list(split_ks.empty() ? (split_layout == "skip2" ? "3..500" : "3..9") : split_ks);
            if (!witness_path.empty())
                write_file(witness_path,
                           skip2_split(static_cast<int>(*std::max_element(ks.begin(), ks.end()))).witness.to_json() + "\n");
            if (split_layout == "skip2")
                return finish(common, report::skip2_rows(ks, common.workers()));
            return finish(common, report::balanced_thresholds(ks, common.budget(60000)));
        };
    });

    std::string window_ks = "3..20";
    auto* win = app.add_subcommand("window", "density window around the balanced endpoint");
    win->add_option("--k", window_ks, "k list or range");
    add_common(win, common);
    win->callback([&] { action = [&] { return finish(common, report::window(report::parse_int_list(window_ks), common.workers())); }; });

    std::vector<std::string> pair_items;
    std::vector<int> grid;
    auto* off = app.add_subcommand("offdiag", "off-diagonal balanced endpoints");
    off->add_option("--pair", pair_items, "s,t (repeatable)");
    off->add_option("--grid", grid, "verify every pair in lo..hi: lo hi")->expected(2);
    off->add_option("--witness", witness_path, "write the witness JSON for the single --pair");
    add_common(off, common);
    off->callback([&] {
        action = [&] {
            if (!grid.empty())
                return finish(common, report::offdiag_grid(grid[0], grid[1], common.workers()));
            std::vector<std::pair<int, int>> pairs;
            for (const auto& p : pair_items) {
                const auto v = report::parse_int_list(p);
                if (v.size() != 2)
                    throw CLI::ValidationError("--pair", "expected s,t");
                pairs.emplace_back(static_cast<int>(v[0]), static_cast<int>(v[1]));
            }
            if (!witness_path.empty()) {
                if (pairs.size() != 1)
                    throw CLI::ValidationError("--witness", "needs exactly one --pair");
                write_file(witness_path, offdiag_split(pairs[0].first, pairs[0].second).witness.to_json() + "\n");
            }
            return finish(common, report::offdiag(pairs));
        };
    });

    std::string phase_cs = "3..10";
    int phase_kmin = 3;
    int phase_kmax = 100;
    int phase_start = 0;
    std::string phase_rule = "next-non-full";
    std::string phase_layout = "phase";
    auto* ph = app.add_subcommand("phase", "round-robin multicolor certificates decided by max-flow");
    ph->add_option("--c", phase_cs, "color counts");
    ph->add_option("--k-min", phase_kmin);
    ph->add_option("--k-max", phase_kmax);
    ph->add_option("--start", phase_start, "round-robin start bin");
    ph->add_option("--rule", phase_rule, "next-non-full or short-bin")->check(CLI::IsMember({"next-non-full", "short-bin"}));
    ph->add_option("--layout", phase_layout, "phase or summary")->check(CLI::IsMember({"phase", "summary"}));
    add_common(ph, common);
    ph->callback([&] {
        action = [&] {
            const auto cs = report::parse_int_list(phase_cs);
            const auto rule = parse_rule(phase_rule);
            if (phase_layout == "summary")
                return finish(common, report::phase_summary(cs, phase_kmin, phase_kmax, common.workers(), phase_start, rule));
            return finish(common, report::phase(cs, phase_kmin, phase_kmax, common.workers(), phase_start, rule));
        };
    });

    // endpoint-decide
    std::string end_cs;
    std::string end_ks;
    auto* end = app.add_subcommand("endpoint-decide", "exact near-balanced decision at n = p_{c(k-1)} - 1");
    end->add_option("--c", end_cs, "color counts");
    end->add_option("--k", end_ks, "clique sizes");
    add_common(end, common, true);
    end->callback([&] {
        action = [&] {
            std::vector<report::EndpointCase> cases;
            if (end_cs.empty() && end_ks.empty()) {
                cases = report::standard_endpoint_cases();
            } else {
                for (auto c : report::parse_int_list(end_cs.empty() ? "3" : end_cs))
                    for (auto k : report::parse_int_list(end_ks.empty() ? "3" : end_ks))
                        cases.push_back({static_cast<int>(c), static_cast<int>(k)});
            }
            const auto t = report::endpoint(cases, common.budget(60000), common.timings);
            if (cases.size() == 1 && common.golden.empty() && common.format == "csv")
                std::cerr << outcome_word(t.rows[0][4] == "yes" ? Outcome::Feasible
                                          : t.rows[0][4] == "no" ? Outcome::Infeasible
                                                                  : Outcome::Unknown)
                          << ", " << t.rows[0][3] << " cliques\n";
            return finish(common, t);
        };
    });

    // gap-scan
    std::int64_t m_max = 1000000;
    auto* gap = app.add_subcommand("gap-scan", "minima of p_{2m} - 2p_m and 3p_m - p_{2m}");
    gap->add_option("--m-max", m_max);
    add_common(gap, common);
    gap->callback([&] { action = [&] { return finish(common, report::gap(m_max)); }; });

    // oracle
    std::int64_t max_rank = 6;
    auto* orc = app.add_subcommand("oracle", "exact search thresholds against the formula");
    orc->add_option("--max-rank", max_rank, "all demand vectors with sum (k_i - 1) <= this");
    add_common(orc, common, true);
    orc->callback([&] { action = [&] { return finish(common, report::oracle(max_rank, common.budget(), common.workers())); }; });

    // encode-cnf
    std::int64_t cnf_n = 0;
    int cnf_k = 0;
    int cnf_c = 2;
    bool cnf_comment = false;
    auto* cnf = app.add_subcommand("encode-cnf", "DIMACS encoding of the c-coloring problem on G_n");
    cnf->add_option("--n", cnf_n)->required();
    cnf->add_option("--k", cnf_k)->required();
    cnf->add_option("--c", cnf_c);
    cnf->add_flag("--comment", cnf_comment, "add c-lines describing the instance");
    cnf->add_option("-o,--out", common.out, "output file (default stdout)");
    cnf->callback([&] {
        action = [&] {
            CnfCounts counts;
            if (common.out.empty()) {
                counts = write_dimacs(cnf_n, cnf_k, cnf_c, std::cout, cnf_comment);
            } else {
                std::ofstream out(common.out, std::ios::binary);
                if (!out)
                    throw std::runtime_error("cannot write " + common.out);
                counts = write_dimacs(cnf_n, cnf_k, cnf_c, out, cnf_comment);
            }
            std::cerr << counts.variables << " variables, " << counts.clauses << " clauses, " << counts.cliques
                      << " cliques\n";
            return static_cast<int>(Ok);
        };
    });

    // verify
    std::string verify_path;
    std::string verify_demands;
    auto* ver = app.add_subcommand("verify", "check a coloring witness JSON against its divisor certificate");
    ver->add_option("witness", verify_path, "witness JSON")->required();
    ver->add_option("--demands", verify_demands, "demand vector, e.g. 10,10")->required();
    ver->add_option("--format", common.format, "csv (plain text) or json")->check(CLI::IsMember({"csv", "json"}));
    ver->callback([&] {
        action = [&] {
            const auto w = ColoringWitness::parse_json(read_file(verify_path));
            const auto d = parse_demands(verify_demands);
            const auto v = verify_witness(w, d);
            if (common.format == "json") {
                nlohmann::json doc = {{"accepted", v.accepted}, {"reason", v.reason}, {"vertex", v.vertex}};
                std::cout << doc.dump(2) << '\n';
            } else if (v.accepted) {
                std::cout << "accepted\n";
            } else {
                std::cout << "rejected: " << v.reason << (v.vertex ? " (vertex " + std::to_string(v.vertex) + ")" : "")
                          << '\n';
            }
            return static_cast<int>(v.accepted ? Ok : Mismatch);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }
    try {
        return action();
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    }
}
