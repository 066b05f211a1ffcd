#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coprime {

/// Raised when a classical Ramsey value needed by a transfer is not tabulated.
class UnknownValueError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mixed demand vector (k_1, ..., k_c) with every k_i >= 2.
class Demands {
public:
    Demands(std::initializer_list<int> ks);
    explicit Demands(std::vector<int> ks);

    static Demands diagonal(int k, int colors);

    std::span<const int> ks() const noexcept { return ks_; }
    int colors() const noexcept { return static_cast<int>(ks_.size()); }
    int operator[](std::size_t i) const { return ks_.at(i); }

    /// M = sum (k_i - 1).
    std::int64_t rank_sum() const noexcept;
    int min_demand() const noexcept;
    int max_demand() const noexcept;
    bool is_diagonal() const noexcept;

    /// Sorted copy, used as a lookup key for symmetric quantities.
    std::vector<int> sorted() const;
    std::string to_string() const;

    bool operator==(const Demands&) const = default;

private:
    std::vector<int> ks_;
};

/// Parses "3,3" or "3 3" into demands.
Demands parse_demands(const std::string& text);

struct RamseyBound {
    std::int64_t lower = 0;
    std::int64_t upper = 0;

    bool exact() const noexcept { return lower == upper; }
    std::string to_string() const;   ///< "11" or "181--197"
};

enum class ClassicalTarget { Clique, GallaiTriangle };

struct ClassicalEntry {
    std::vector<int> demands;        ///< sorted
    int uniformity = 2;              ///< t for t-uniform hypergraph Ramsey numbers
    ClassicalTarget target = ClassicalTarget::Clique;
    RamseyBound window;

    std::string label() const;       ///< "R(3,3)", "R^(3)(4,4)", "gr_3(K_3)"
};

/// Classical Ramsey values and windows used as inputs to the prime-index transfer.
///
/// The embedded table holds the two-color windows R(3,3) .. R(7,10), R(3,3,3),
/// gr_3(K_3), R(2,3) and R(2,4). No t >= 3 entries are embedded; add them
/// with insert() or from JSON. Lookups on unknown keys throw UnknownValueError.
class ClassicalTable {
public:
    static ClassicalTable embedded();
    static ClassicalTable empty() { return {}; }

    /// Array of {"demands":[..],"lower":L,"upper":U} with optional
    /// "uniformity" (default 2) and "target" ("clique" | "gallai").
    static ClassicalTable parse_json(std::string_view text);
    static ClassicalTable load(const std::filesystem::path& path);
    std::string to_json() const;

    /// Inserts or replaces the entry with the same key.
    void insert(ClassicalEntry entry);

    const ClassicalEntry& lookup(std::span<const int> demands, int uniformity = 2,
                                 ClassicalTarget target = ClassicalTarget::Clique) const;
    bool contains(std::span<const int> demands, int uniformity = 2,
                  ClassicalTarget target = ClassicalTarget::Clique) const;

    std::span<const ClassicalEntry> entries() const noexcept { return entries_; }

private:
    std::vector<ClassicalEntry> entries_;
};

/// R_cop(k_1..k_c) = p_M.
std::int64_t r_cop(const Demands& d);

/// Covering number C_cop; equal to r_cop.
std::int64_t r_cop_covering(const Demands& d);

/// Prime-index image N -> p_{N-1} (N >= 2).
std::int64_t prime_index_transfer(std::int64_t classical);
RamseyBound prime_index_transfer(const RamseyBound& classical);

/// Edge-coprime Ramsey window: p_{R_cl - 1} on both endpoints.
RamseyBound r_cop_edge(const Demands& d, const ClassicalTable& table);

/// Gallai (monochromatic-or-rainbow triangle) edge variant.
RamseyBound gallai_edge(const Demands& d, const ClassicalTable& table);

struct TransferRow {
    std::string parameter;
    RamseyBound classical;
    RamseyBound transferred;
};

/// One row per table entry, in table order.
std::vector<TransferRow> transfer_bound_table(const ClassicalTable& table);

/// gcd = divisor edge-clique variant: divisor * p_{R_cl - 1}.
RamseyBound gcd_scaled_edge(const Demands& d, std::int64_t divisor, const ClassicalTable& table);

/// t-uniform hypergraph vertex analogue; requires every k_i >= t.
std::int64_t hypergraph_vertex(int t, const Demands& d);

/// t-uniform hypergraph edge analogue from a t-uniform classical entry.
RamseyBound hypergraph_edge(int t, const Demands& d, const ClassicalTable& table);

enum class RankMode { Vertex, Edge };

/// Clique-label rank needed to force: 1 + M (vertex) or R_cl (edge; the classical
/// value must be exact, a window throws UnknownValueError).
std::int64_t rank_trigger(const Demands& d, RankMode mode, const ClassicalTable& table);

/// Least n with pi(n) + 1 >= r, i.e. p_{r-1}.
std::int64_t rank_threshold(std::int64_t trigger);

/// min { n : pi(m+n) - pi(m) >= 2k-1 }, the prime-clique bound on shifted intervals.
std::int64_t shifted_upper_bound(std::int64_t shift, int k);

} // namespace coprime
