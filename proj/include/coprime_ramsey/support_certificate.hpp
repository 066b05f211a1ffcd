#pragma once

#include "coprime_ramsey/atom_set.hpp"
#include "coprime_ramsey/certificates.hpp"
#include "coprime_ramsey/thresholds.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coprime {

struct SupportVertex {
    std::int64_t id = 0;
    std::vector<std::size_t> support;   ///< atom indices in [0, atom_count)
};

/// Graph whose vertices carry atom supports. Adjacency is stored explicitly and
/// independently of the supports, so the model check can genuinely fail.
class SupportGraph {
public:
    SupportGraph(std::size_t atom_count, const std::vector<SupportVertex>& vertices,
                 const std::vector<std::pair<std::int64_t, std::int64_t>>& edges);

    std::size_t atom_count() const noexcept { return atom_count_; }
    std::size_t vertex_count() const noexcept { return ids_.size(); }
    std::int64_t id(std::size_t index) const { return ids_.at(index); }
    std::size_t index_of(std::int64_t id) const;
    const AtomSet& support(std::size_t index) const { return supports_.at(index); }
    bool adjacent(std::size_t a, std::size_t b) const { return adjacency_.at(a).test(b); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Optional display names for atoms (e.g. the primes); defaults to indices.
    void set_atom_labels(std::vector<std::string> labels);
    const std::string& atom_label(std::size_t atom) const { return atom_labels_.at(atom); }

    /// Copy with one extra undirected edge.
    SupportGraph with_edge(std::int64_t u, std::int64_t v) const;

    /// {"atoms":r,"vertices":[{"id":..,"support":[..]}...],"edges":[[u,v]...]}
    /// plus an optional "atom_labels" array of strings.
    std::string to_json() const;
    static SupportGraph parse_json(std::string_view text);

private:
    std::size_t atom_count_;
    std::vector<std::int64_t> ids_;
    std::vector<AtomSet> supports_;
    std::vector<AtomSet> adjacency_;
    std::vector<std::string> atom_labels_;
    std::size_t edge_count_ = 0;
};

/// Interval {shift+1..shift+length}; atoms are the primes <= shift+length,
/// edges generated by gcd = 1.
SupportGraph coprime_support_graph(std::int64_t shift, std::int64_t length);

/// [n] with a~b iff gcd(rad a, rad b) = 1.
SupportGraph squarefree_kernel_graph(std::int64_t n);

/// Proper divisors 1 < d < N, atoms the prime divisors of N, edges gcd = 1.
SupportGraph divisor_graph(std::int64_t N);

enum class SupportCase { OneUniversal, NoUniversal };
enum class ModelFailure { None, SingletonCoverage, EmptySupportCount, AdjacencyMismatch };

struct ModelCheck {
    bool passed = false;
    ModelFailure failure = ModelFailure::None;
    SupportCase support_case = SupportCase::NoUniversal;
    std::vector<std::size_t> missing_atoms;           ///< singleton coverage failures
    std::vector<std::int64_t> empty_support_vertices;
    std::optional<std::pair<std::int64_t, std::int64_t>> mismatch;   ///< first offending pair
    bool mismatch_is_edge = false;                    ///< true: edge present but supports meet

    std::string describe(const SupportGraph& g) const;
};

struct AtomColoring {
    std::vector<int> colors;                  ///< per vertex index
    std::vector<std::size_t> witness_atoms;   ///< per vertex index; atom_count() for empty supports
    std::vector<std::vector<std::size_t>> bins;
    std::vector<std::int64_t> capacities;
};

struct PrimitiveVerdict {
    ModelCheck model;
    std::int64_t rank = 0;            ///< number of atoms r
    std::int64_t required_rank = 0;   ///< M (one-universal) or M + 1 (no-universal)
    bool forcing = false;
    std::vector<std::int64_t> forcing_clique;   ///< vertex ids
    std::optional<AtomColoring> avoiding;

    std::string describe(const SupportGraph& g, const Demands& d) const;
};

/// Thrown by decide() when the support model does not hold.
class ModelCheckError : public std::invalid_argument {
public:
    ModelCheckError(std::string what, ModelCheck check)
        : std::invalid_argument(std::move(what)), check_(std::move(check)) {}
    const ModelCheck& check() const noexcept { return check_; }

private:
    ModelCheck check_;
};

/// The three model conditions: singleton coverage, at most one empty support,
/// adjacency iff disjoint supports. O(|V|^2 r / 64) word operations.
ModelCheck check_support_model(const SupportGraph& g);

/// Full primitive: forcing clique when r reaches the forcing rank, otherwise
/// the atom-bin avoiding coloring. Throws ModelCheckError if the model fails.
PrimitiveVerdict decide(const SupportGraph& g, const Demands& d);

/// Atom-level divisor certificate: witness atoms lie in the support and in the
/// bin of the vertex's color, bins are disjoint and within capacity.
Verdict verify_atom_coloring(const SupportGraph& g, const AtomColoring& coloring, const Demands& d);

/// Checks that `clique` (vertex ids) is a clique of g with at least `min_size` vertices.
Verdict verify_clique(const SupportGraph& g, const std::vector<std::int64_t>& clique, std::int64_t min_size);

/// Pigeonhole over a clique: given colors for every vertex index, returns a
/// color i holding >= k_i clique vertices, if any.
std::optional<ForcingReport> refute_on_clique(const SupportGraph& g, const std::vector<std::int64_t>& clique,
                                              const std::vector<int>& colors, const Demands& d);

} // namespace coprime
