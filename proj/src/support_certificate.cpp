#include "coprime_ramsey/support_certificate.hpp"
#include "coprime_ramsey/primes.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace coprime {

SupportGraph::SupportGraph(std::size_t atom_count, const std::vector<SupportVertex>& vertices,
                           const std::vector<std::pair<std::int64_t, std::int64_t>>& edges)
    : atom_count_(atom_count)
{
    for (const auto& v : vertices) {
        if (std::find(ids_.begin(), ids_.end(), v.id) != ids_.end())
            throw std::invalid_argument("duplicate vertex id " + std::to_string(v.id));
        AtomSet s(atom_count);
        for (std::size_t a : v.support) {
            if (a >= atom_count)
                throw std::invalid_argument("vertex " + std::to_string(v.id) + " uses atom " + std::to_string(a)
                                            + " outside [0, " + std::to_string(atom_count) + ")");
            s.set(a);
        }
        ids_.push_back(v.id);
        supports_.push_back(std::move(s));
    }
    adjacency_.assign(ids_.size(), AtomSet(ids_.size()));
    for (const auto& [u, v] : edges) {
        const std::size_t a = index_of(u);
        const std::size_t b = index_of(v);
        if (a == b)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (!adjacency_[a].test(b))
            ++edge_count_;
        adjacency_[a].set(b);
        adjacency_[b].set(a);
    }
    atom_labels_.resize(atom_count);
    for (std::size_t a = 0; a < atom_count; ++a)
        atom_labels_[a] = std::to_string(a);
}

std::size_t SupportGraph::index_of(std::int64_t id) const
{
    const auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end())
        throw std::invalid_argument("unknown vertex id " + std::to_string(id));
    return static_cast<std::size_t>(it - ids_.begin());
}

void SupportGraph::set_atom_labels(std::vector<std::string> labels)
{
    if (labels.size() != atom_count_)
        throw std::invalid_argument("need one label per atom");
    atom_labels_ = std::move(labels);
}

SupportGraph SupportGraph::with_edge(std::int64_t u, std::int64_t v) const
{
    SupportGraph copy = *this;
    const std::size_t a = copy.index_of(u);
    const std::size_t b = copy.index_of(v);
    if (a == b)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (!copy.adjacency_[a].test(b))
        ++copy.edge_count_;
    copy.adjacency_[a].set(b);
    copy.adjacency_[b].set(a);
    return copy;
}

std::string SupportGraph::to_json() const
{
    nlohmann::json j;
    j["atoms"] = atom_count_;
    j["atom_labels"] = atom_labels_;
    auto verts = nlohmann::json::array();
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        const auto idx = supports_[i].indices();
        verts.push_back({{"id", ids_[i]}, {"support", idx}});
    }
    j["vertices"] = std::move(verts);
    auto edges = nlohmann::json::array();
    for (std::size_t a = 0; a < ids_.size(); ++a)
        for (std::size_t b = a + 1; b < ids_.size(); ++b)
            if (adjacency_[a].test(b))
                edges.push_back({ids_[a], ids_[b]});
    j["edges"] = std::move(edges);
    return j.dump();
}

SupportGraph SupportGraph::parse_json(std::string_view text)
{
    const auto j = nlohmann::json::parse(text);
    const auto atoms = j.at("atoms").get<std::size_t>();
    std::vector<SupportVertex> verts;
    for (const auto& item : j.at("vertices"))
        verts.push_back({item.at("id").get<std::int64_t>(), item.at("support").get<std::vector<std::size_t>>()});
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edges must be [u, v] pairs");
        edges.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
    }
    SupportGraph g(atoms, verts, edges);
    if (j.contains("atom_labels")) {
        std::vector<std::string> labels;
        for (const auto& l : j.at("atom_labels"))
            labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
        g.set_atom_labels(std::move(labels));
    }
    return g;
}

namespace {

std::vector<std::string> prime_labels(const std::vector<std::int64_t>& primes)
{
    std::vector<std::string> out;
    for (auto p : primes)
        out.push_back(std::to_string(p));
    return out;
}

/// Integers with prime supports over a fixed atom list; `related(a, b)` decides edges.
template <typename Related>
SupportGraph integer_support_graph(const std::vector<std::int64_t>& values, const std::vector<std::int64_t>& atoms,
                                   Related related)
{
    const std::int64_t top = std::max<std::int64_t>(2, values.empty() ? 2 : *std::max_element(values.begin(), values.end()));
    const auto table = shared_primes(top);
    std::map<std::int64_t, std::size_t> atom_index;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        atom_index[atoms[i]] = i;

    std::vector<SupportVertex> verts;
    for (std::int64_t v : values) {
        SupportVertex sv{v, {}};
        for (std::int64_t p : table->prime_support(v)) {
            const auto it = atom_index.find(p);
            if (it == atom_index.end())
                throw std::invalid_argument("prime " + std::to_string(p) + " of " + std::to_string(v)
                                            + " is not an atom");
            sv.support.push_back(it->second);
        }
        verts.push_back(std::move(sv));
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (related(values[i], values[j]))
                edges.emplace_back(values[i], values[j]);
    SupportGraph g(atoms.size(), verts, edges);
    g.set_atom_labels(prime_labels(atoms));
    return g;
}

std::int64_t radical(std::int64_t v, const PrimeTable& table)
{
    std::int64_t r = 1;
    for (auto p : table.prime_support(v))
        r *= p;
    return r;
}

} // namespace

SupportGraph coprime_support_graph(std::int64_t shift, std::int64_t length)
{
    if (shift < 0 || length < 1)
        throw std::invalid_argument("coprime_support_graph needs shift >= 0 and length >= 1");
    const std::int64_t top = shift + length;
    const auto table = shared_primes(std::max<std::int64_t>(top, 2));
    std::vector<std::int64_t> atoms;
    for (auto p : table->primes()) {
        if (p > top)
            break;
        atoms.push_back(p);
    }
    std::vector<std::int64_t> values(static_cast<std::size_t>(length));
    std::iota(values.begin(), values.end(), shift + 1);
    return integer_support_graph(values, atoms, [](std::int64_t a, std::int64_t b) { return std::gcd(a, b) == 1; });
}

SupportGraph squarefree_kernel_graph(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("squarefree_kernel_graph needs n >= 1");
    const auto table = shared_primes(std::max<std::int64_t>(n, 2));
    std::vector<std::int64_t> atoms;
    for (auto p : table->primes()) {
        if (p > n)
            break;
        atoms.push_back(p);
    }
    std::vector<std::int64_t> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    return integer_support_graph(values, atoms, [&](std::int64_t a, std::int64_t b) {
        return std::gcd(radical(a, *table), radical(b, *table)) == 1;
    });
}

SupportGraph divisor_graph(std::int64_t N)
{
    if (N < 4)
        throw std::invalid_argument("divisor_graph needs a composite N");
    const auto table = shared_primes(std::max<std::int64_t>(N, 2));
    if (table->is_prime(N))
        throw std::invalid_argument("divisor_graph needs a composite N");
    std::vector<std::int64_t> values;
    for (std::int64_t d = 2; d < N; ++d)
        if (N % d == 0)
            values.push_back(d);
    return integer_support_graph(values, table->prime_support(N),
                                 [](std::int64_t a, std::int64_t b) { return std::gcd(a, b) == 1; });
}

std::string ModelCheck::describe(const SupportGraph& g) const
{
    std::ostringstream out;
    switch (failure) {
    case ModelFailure::None:
        out << "pass, " << (support_case == SupportCase::OneUniversal ? "one-universal" : "no-universal");
        break;
    case ModelFailure::SingletonCoverage: {
        out << "fail, singleton coverage for atoms ";
        for (std::size_t i = 0; i < missing_atoms.size(); ++i)
            out << (i ? "," : "") << g.atom_label(missing_atoms[i]);
        break;
    }
    case ModelFailure::EmptySupportCount:
        out << "fail, " << empty_support_vertices.size() << " empty-support vertices";
        break;
    case ModelFailure::AdjacencyMismatch:
        out << "fail, adjacency iff support-disjointness at (" << mismatch->first << "," << mismatch->second << ")"
            << (mismatch_is_edge ? ": edge between intersecting supports" : ": missing edge between disjoint supports");
        break;
    }
    return out.str();
}

ModelCheck check_support_model(const SupportGraph& g)
{
    ModelCheck check;
    const std::size_t r = g.atom_count();
    std::vector<bool> singleton(r, false);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const auto& s = g.support(i);
        const std::size_t size = s.count();
        if (size == 0)
            check.empty_support_vertices.push_back(g.id(i));
        else if (size == 1)
            singleton[s.first()] = true;
    }
    for (std::size_t a = 0; a < r; ++a)
        if (!singleton[a])
            check.missing_atoms.push_back(a);
    check.support_case = check.empty_support_vertices.size() == 1 ? SupportCase::OneUniversal : SupportCase::NoUniversal;

    if (!check.missing_atoms.empty()) {
        check.failure = ModelFailure::SingletonCoverage;
        return check;
    }
    if (check.empty_support_vertices.size() > 1) {
        check.failure = ModelFailure::EmptySupportCount;
        return check;
    }
    for (std::size_t a = 0; a < g.vertex_count(); ++a) {
        for (std::size_t b = a + 1; b < g.vertex_count(); ++b) {
            const bool disjoint = !g.support(a).intersects(g.support(b));
            const bool edge = g.adjacent(a, b);
            if (disjoint != edge) {
                check.failure = ModelFailure::AdjacencyMismatch;
                check.mismatch = std::pair{g.id(a), g.id(b)};
                check.mismatch_is_edge = edge;
                return check;
            }
        }
    }
    check.passed = true;
    return check;
}

PrimitiveVerdict decide(const SupportGraph& g, const Demands& d)
{
    PrimitiveVerdict verdict;
    verdict.model = check_support_model(g);
    if (!verdict.model.passed)
        throw ModelCheckError("support model check failed: " + verdict.model.describe(g), verdict.model);

    const bool one_universal = verdict.model.support_case == SupportCase::OneUniversal;
    verdict.rank = static_cast<std::int64_t>(g.atom_count());
    verdict.required_rank = d.rank_sum() + (one_universal ? 0 : 1);
    verdict.forcing = verdict.rank >= verdict.required_rank;

    if (verdict.forcing) {
        std::vector<bool> taken(g.atom_count(), false);
        if (one_universal)
            verdict.forcing_clique.push_back(verdict.model.empty_support_vertices.front());
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            const auto& s = g.support(i);
            if (s.count() == 1 && !taken[s.first()]) {
                taken[s.first()] = true;
                verdict.forcing_clique.push_back(g.id(i));
            }
        }
        return verdict;
    }

    AtomColoring coloring;
    coloring.capacities = bin_capacities(d, one_universal ? std::optional<int>(0) : std::nullopt);
    coloring.bins.resize(static_cast<std::size_t>(d.colors()));
    std::vector<int> atom_bin(g.atom_count(), -1);
    std::size_t bin = 0;
    for (std::size_t a = 0; a < g.atom_count(); ++a) {
        while (static_cast<std::int64_t>(coloring.bins[bin].size()) >= coloring.capacities[bin])
            ++bin;
        coloring.bins[bin].push_back(a);
        atom_bin[a] = static_cast<int>(bin);
    }
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const auto& s = g.support(i);
        if (s.none()) {
            coloring.colors.push_back(0);
            coloring.witness_atoms.push_back(g.atom_count());
            continue;
        }
        // lowest-index bin meeting the support, lowest atom inside it
        int best_bin = d.colors();
        std::size_t best_atom = g.atom_count();
        for (std::size_t a : s.indices()) {
            if (atom_bin[a] < best_bin) {
                best_bin = atom_bin[a];
                best_atom = a;
            }
        }
        coloring.colors.push_back(best_bin);
        coloring.witness_atoms.push_back(best_atom);
    }
    verdict.avoiding = std::move(coloring);
    return verdict;
}

std::string PrimitiveVerdict::describe(const SupportGraph& g, const Demands& d) const
{
    std::ostringstream out;
    out << model.describe(g) << ", forcing at " << d.to_string() << "? " << (forcing ? "yes" : "no") << " (rank "
        << rank << (forcing ? " >= " : " < ") << required_rank << ")";
    return out.str();
}

Verdict verify_atom_coloring(const SupportGraph& g, const AtomColoring& coloring, const Demands& d)
{
    const int c = d.colors();
    if (coloring.colors.size() != g.vertex_count() || coloring.witness_atoms.size() != g.vertex_count())
        return Verdict::reject("coloring does not cover every vertex");
    if (static_cast<int>(coloring.bins.size()) != c)
        return Verdict::reject("bin count does not match color count");

    std::vector<int> owner(g.atom_count(), -1);
    for (int i = 0; i < c; ++i) {
        for (std::size_t a : coloring.bins[static_cast<std::size_t>(i)]) {
            if (a >= g.atom_count())
                return Verdict::reject("bin holds an unknown atom");
            if (owner[a] != -1)
                return Verdict::reject("bins overlap at atom " + g.atom_label(a));
            owner[a] = i;
        }
    }

    std::optional<int> one_color;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.support(v).none()) {
            if (one_color)
                return Verdict::reject("more than one empty-support vertex", g.id(v));
            one_color = coloring.colors[v];
        }
    }
    const auto caps = bin_capacities(d, one_color);
    for (int i = 0; i < c; ++i)
        if (static_cast<std::int64_t>(coloring.bins[static_cast<std::size_t>(i)].size()) > caps[static_cast<std::size_t>(i)])
            return Verdict::reject("bin " + std::to_string(i) + " over capacity");

    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const int color = coloring.colors[v];
        if (color < 0 || color >= c)
            return Verdict::reject("color out of range", g.id(v));
        if (g.support(v).none())
            continue;
        const std::size_t a = coloring.witness_atoms[v];
        if (a >= g.atom_count() || !g.support(v).test(a))
            return Verdict::reject("witness atom not in support", g.id(v));
        if (owner[a] != color)
            return Verdict::reject("witness atom not in bin", g.id(v));
    }
    return Verdict::accept();
}

Verdict verify_clique(const SupportGraph& g, const std::vector<std::int64_t>& clique, std::int64_t min_size)
{
    if (static_cast<std::int64_t>(clique.size()) < min_size)
        return Verdict::reject("clique has " + std::to_string(clique.size()) + " vertices, need "
                               + std::to_string(min_size));
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.adjacent(g.index_of(clique[i]), g.index_of(clique[j])))
                return Verdict::reject("vertices " + std::to_string(clique[i]) + " and " + std::to_string(clique[j])
                                           + " are not adjacent",
                                       clique[i]);
    return Verdict::accept();
}

std::optional<ForcingReport> refute_on_clique(const SupportGraph& g, const std::vector<std::int64_t>& clique,
                                              const std::vector<int>& colors, const Demands& d)
{
    std::vector<std::vector<std::int64_t>> per_color(static_cast<std::size_t>(d.colors()));
    for (std::int64_t id : clique) {
        const int c = colors.at(g.index_of(id));
        if (c < 0 || c >= d.colors())
            throw std::invalid_argument("color outside the demand vector");
        per_color[static_cast<std::size_t>(c)].push_back(id);
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

} // namespace coprime
