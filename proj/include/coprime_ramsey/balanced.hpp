#pragma once

#include "coprime_ramsey/certificates.hpp"
#include "coprime_ramsey/flow.hpp"
#include "coprime_ramsey/thresholds.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace coprime {

/// Raised when a requested size lies outside what a construction realizes.
/// This says nothing about whether such a coloring exists at all.
class ConstructionRangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two-bin split at n = p_{M} - 1. bin0 holds vertex 1.
struct SplitSpec {
    int s = 0;                       ///< demand of color 0
    int t = 0;                       ///< demand of color 1
    std::int64_t n = 0;
    std::vector<std::int64_t> bin0;  ///< bin of the color holding vertex 1
    std::vector<std::int64_t> bin1;
    int one_color = 0;               ///< color holding vertex 1 and bin0
};

struct ForcedSets {
    std::vector<std::int64_t> forced0;   ///< support inside color 0's bin (plus vertex 1 if it is there)
    std::vector<std::int64_t> forced1;
    std::vector<std::int64_t> flexible;  ///< support meets both bins
};

struct BalancedSplit {
    SplitSpec spec;
    ForcedSets forced;
    BinPartition bins;
    ColoringWitness witness;
};

/// Exactly balanced two-coloring of [p_{2k-2} - 1] without monochromatic
/// coprime K_k: bins {p_2..p_{k-1}} (with vertex 1) and {p_1, p_k..p_{2k-3}},
/// the flexible vertices 2p_2..2p_{k-1} moved to color 0.
BalancedSplit skip2_split(int k);

/// Width of the realizable color-0 window around n/2: 2(k-2) + 1.
std::int64_t density_window_size(int k);

/// Skip-2 witness with exactly r vertices in color 0, |r - n/2| <= k - 2.
/// Throws ConstructionRangeError outside that window.
ColoringWitness density_window(int k, std::int64_t r);

/// Balanced two-coloring of [p_{s+t-2} - 1] with no coprime K_s in color 0
/// and no coprime K_t in color 1. Vertex 1 goes to the larger-demand color.
BalancedSplit offdiag_split(int s, int t);

/// Forced/flexible classification of [n] with respect to two disjoint bins.
ForcedSets classify_vertices(std::int64_t n, const BinPartition& bins);

/// How the last, colliding primes of a round-robin deal are placed.
enum class DealRule {
    /// Vertex 1 sits in bin 0; a prime dealt to a full bin moves to the next non-full bin.
    NextNonFull,
    /// Vertex 1 sits in the bin the deal leaves one prime short.
    ShortBinHoldsOne,
};

/// p_1..p_{c(k-1)-1} dealt cyclically into c bins from `start`, one bin of
/// capacity k-2 (vertex 1), the others k-1.
BinPartition roundrobin_bins(int c, int k, int start = 0, DealRule rule = DealRule::NextNonFull);

/// Allowed-color instance on [n] for the given bins: A(1) = {one_color},
/// A(v) = bins meeting the support of v.
FlowInstance bins_flow_instance(std::int64_t n, const BinPartition& bins, TargetRule rule);

struct MulticolorAttempt {
    int c = 0;
    int k = 0;
    std::int64_t n = 0;
    BinPartition bins;
    AssignmentResult assignment;
    std::optional<ColoringWitness> witness;   ///< divisor-certified, when feasible
};

/// Round-robin bins plus exact flow assignment at n = p_{c(k-1)} - 1.
MulticolorAttempt multicolor_certificate(int c, int k, int start = 0, DealRule rule = DealRule::NextNonFull,
                                         TargetRule targets = TargetRule::NearBalanced);

/// ColoringWitness for an assignment on [n] with the given bins.
ColoringWitness witness_from_colors(std::int64_t n, const BinPartition& bins, const std::vector<int>& colors);

struct PhaseRow {
    int k = 0;
    std::int64_t n = 0;
    bool feasible = false;
};

struct PhaseScan {
    int c = 0;
    int k_min = 0;
    int k_max = 0;
    std::vector<PhaseRow> rows;
    std::int64_t successes = 0;
    std::optional<int> first_failure;
    std::optional<int> last_failure;
    int all_success_from = 0;   ///< first k after the last failure

    /// k_on / (c log c).
    double onset_ratio() const;
};

PhaseScan phase_scan(int c, int k_min, int k_max, unsigned jobs = 1, int start = 0,
                     DealRule rule = DealRule::NextNonFull, TargetRule targets = TargetRule::NearBalanced);

struct ImbalanceRow {
    int k = 0;
    std::int64_t n = 0;
    std::int64_t majority = 0;
    std::int64_t minority = 0;

    std::int64_t imbalance() const noexcept { return majority - minority; }
    double minority_fraction() const noexcept { return static_cast<double>(minority) / static_cast<double>(n); }
};

/// Class sizes of the canonical prime-bin coloring at n = r_cop(k,k) - 1.
std::vector<ImbalanceRow> imbalance_table(int k_min, int k_max);

struct DensityRow {
    int k = 0;
    std::int64_t n = 0;
    std::int64_t f0_base = 0;
    std::int64_t f0_theorem = 0;
    std::int64_t window = 0;
    bool f0_matches = false;
    bool all_realizable = false;   ///< every r in the window built and certified
};

DensityRow density_window_row(int k);

struct OffdiagRow {
    int s = 0;
    int t = 0;
    std::int64_t n = 0;
    std::int64_t f0 = 0;
    std::int64_t f1 = 0;
    std::int64_t flexible = 0;
    bool balanced = false;   ///< class sizes differ by at most one and the certificate verifies
};

OffdiagRow offdiag_row(int s, int t);

/// True iff the two class sizes of w differ by at most one.
bool is_near_balanced(const ColoringWitness& w, int colors);

} // namespace coprime
