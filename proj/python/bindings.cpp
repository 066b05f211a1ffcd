#include "reports.hpp"

#include "coprime_ramsey/balanced.hpp"
#include "coprime_ramsey/certificates.hpp"
#include "coprime_ramsey/exact_search.hpp"
#include "coprime_ramsey/primes.hpp"
#include "coprime_ramsey/thresholds.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace coprime;

namespace {

using Ints = std::vector<std::int64_t>;

struct TableArgs {
    std::optional<Ints> ks;
    unsigned jobs = 1;
};

using Builder = std::function<report::Table(const TableArgs&)>;

Ints or_default(const std::optional<Ints>& ks, const char* fallback) {
    return ks ? *ks : report::parse_int_list(fallback);
}

// Tables that need no search budget; each mirrors the CLI subcommand defaults.
const std::map<std::string, Builder>& builders() {
    static const std::map<std::string, Builder> table = {
        {"values", [](const TableArgs& a) { return report::values(or_default(a.ks, "2..21"), 2); }},
        {"mixed", [](const TableArgs&) { return report::mixed({}); }},
        {"rank-table", [](const TableArgs&) { return report::rank_table(ClassicalTable::embedded()); }},
        {"edge-summary", [](const TableArgs&) { return report::edge_summary(ClassicalTable::embedded()); }},
        {"edge-transfer", [](const TableArgs&) { return report::edge_transfer(ClassicalTable::embedded()); }},
        {"labels", [](const TableArgs& a) { return report::labels(or_default(a.ks, "10,30,60,100,250,500,1000,2000,5000"), a.jobs); }},
        {"imbalance", [](const TableArgs& a) { return report::imbalance(or_default(a.ks, "2..13")); }},
        {"support-primitive", [](const TableArgs&) { return report::support_primitive(); }},
        {"skip2", [](const TableArgs& a) { return report::skip2_rows(or_default(a.ks, "3..60"), a.jobs); }},
        {"window", [](const TableArgs& a) { return report::window(or_default(a.ks, "3..20"), a.jobs); }},
        {"offdiag", [](const TableArgs&) { return report::offdiag({}); }},
        {"phase-summary", [](const TableArgs& a) {
             return report::phase_summary(or_default(a.ks, "3..10"), 3, 100, a.jobs, 0, DealRule::NextNonFull);
         }},
    };
    return table;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact coprime Ramsey numbers, certificates and table builders";

    m.def("nth_prime", &nth_prime, py::arg("m"), "m-th prime, 1-based (nth_prime(1) == 2)");
    m.def("r_cop", [](const std::vector<int>& ks) { return r_cop(Demands(ks)); }, py::arg("demands"),
          "R_cop(k_1..k_c) = p_M with M = sum(k_i - 1)");
    m.def("r_cop_covering", [](const std::vector<int>& ks) { return r_cop_covering(Demands(ks)); }, py::arg("demands"));

    py::class_<ColoringWitness>(m, "Witness")
        .def_readonly("shift", &ColoringWitness::shift)
        .def_readonly("length", &ColoringWitness::length)
        .def_readonly("colors", &ColoringWitness::colors)
        .def_readonly("witness_primes", &ColoringWitness::witness_primes)
        .def("class_sizes", &ColoringWitness::class_sizes, py::arg("color_count"))
        .def("to_json", &ColoringWitness::to_json)
        .def_static("from_json", [](const std::string& text) { return ColoringWitness::parse_json(text); });

    m.def("skip2_witness", [](int k) { return skip2_split(k).witness; }, py::arg("k"),
          "exactly balanced avoiding two-coloring of [p_{2k-2} - 1]");

    m.def(
        "verify",
        [](const ColoringWitness& w, const std::vector<int>& ks) {
            const auto v = verify_witness(w, Demands(ks));
            return py::make_tuple(v.accepted, v.reason);
        },
        py::arg("witness"), py::arg("demands"), "(accepted, reason) for a witness against its divisor certificate");

    m.def(
        "balanced_endpoint_decide",
        [](int c, int k, std::int64_t budget_ms) {
            EndpointDecision d;
            {
                py::gil_scoped_release release;
                d = balanced_endpoint_decide(c, k, SearchBudget::millis(budget_ms));
            }
            return py::make_tuple(to_string(d.result.outcome), d.n, d.clique_count);
        },
        py::arg("c"), py::arg("k"), py::arg("budget_ms") = 60000,
        "(outcome, n, clique count) with outcome in {'yes', 'no', 'unknown'}");

    m.def("tables", [] {
        std::vector<std::string> names;
        for (const auto& [name, _] : builders()) names.push_back(name);
        return names;
    });

    m.def(
        "table",
        [](const std::string& name, std::optional<Ints> ks, unsigned jobs, const std::string& format) {
            const auto it = builders().find(name);
            if (it == builders().end()) throw py::key_error("unknown table: " + name);
            if (format != "csv" && format != "json") throw py::value_error("format must be csv or json");
            report::Table t;
            {
                py::gil_scoped_release release;
                t = it->second(TableArgs{std::move(ks), jobs == 0 ? 1u : jobs});
            }
            return format == "csv" ? report::to_csv(t) : report::to_json(t);
        },
        py::arg("name"), py::arg("ks") = py::none(), py::arg("jobs") = 1, py::arg("format") = "csv",
        "table text identical to the matching CLI output");
}
