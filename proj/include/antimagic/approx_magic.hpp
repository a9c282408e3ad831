#pragma once

#include <span>
#include <string>
#include <vector>

#include "antimagic/decomposition.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic {

/// Labels 1..m around an m-cycle so that every two consecutive labels sum to
/// m, m+1 or m+2. Entry p is the label of cyclic position p.
///
/// Label 1 sits at position 0. The arc then grows by one edge at each end per
/// step, alternating a high pair (x, x-1) taken from the top and a low pair
/// (y, y+1) taken from 2 upward; the first element of a pair goes clockwise
/// (position +j), the second counter-clockwise (position -j). For even m the
/// single label left over fills position m/2. Throws Error{InfeasibleParameters}
/// for m < 3.
std::vector<Label> cycle_position_labels(std::size_t m);

/// cycle_position_labels(m) as a Labeling of cycle_graph(m), whose edge p is position p.
Labeling label_cycle(std::size_t m);

/// Alternating labels along a concatenated trail sequence of length m: odd
/// positions (1-based) get 1, 2, ..., even positions get m, m-1, ...
Labeling label_trail_sequence(std::span<const EdgeId> concat, std::size_t m);

/// Connected odd-degree regular graphs; delta <= nk/2 - 1.
/// Throws Error{NotRegular | EvenDegree | Disconnected | SizeMismatch}.
Labeling label_regular_odd(const Graph& g, const TrailDecomposition& td);
Labeling label_regular_odd(const Graph& g);

/// Listing trails of every component, in host edge ids, merged and re-sorted
/// by nonincreasing length (ties by first edge id).
TrailDecomposition listing_trails_all_components(const Graph& g);

/// Odd-degree regular graphs, connected or not; delta <= nk/2 - 1.
Labeling label_regular_odd_general(const Graph& g);

/// Connected even-degree regular graphs via an Euler circuit; delta <= k.
/// Throws Error{NotRegular | OddDegree | Disconnected}.
Labeling label_regular_even_connected(const Graph& g);

// The A, B, C sequences for a total of n = 3t + eps labels. Indices are 1-based.
struct ThreeSequences {
    Label t = 0;
    Label eps = 0;

    static ThreeSequences for_total(std::size_t n) {
        return {static_cast<Label>(n / 3), static_cast<Label>(n % 3)};
    }

    [[nodiscard]] Label a(Label i) const { return i; }                    // 1..t ascending
    [[nodiscard]] Label b(Label i) const { return 2 * t + eps + 1 - i; }  // 2t+eps..t+1, i in 1..t+eps
    [[nodiscard]] Label c(Label i) const { return 2 * t + eps + i; }      // 2t+eps+1..3t+eps
    [[nodiscard]] Label b_count() const { return t + eps; }

    // Vertex-sum window of a labeling built from these sequences.
    [[nodiscard]] Label min_sum() const { return 2 * t + eps + 1; }
    [[nodiscard]] Label max_sum() const { return 4 * t + 2 * eps + 1; }

    /// The pairwise identities the odd-cycle labeling relies on, checked exhaustively.
    [[nodiscard]] bool identities_hold() const;
};

/// Labels placed on one cycle: labels[i] goes to edges[i], and edges is the
/// cycle traversed from its lowest-id edge toward the smaller-id neighbour.
struct LabeledArc {
    std::vector<EdgeId> edges;
    std::vector<Label> labels;
};

/// Vertex-disjoint odd cycles with n edges in total receive offset+1..offset+n.
/// With offset 0 every vertex sum lies in [2t+eps+1, 4t+2eps+1] where
/// n = 3t+eps, so delta <= ceil(2n/3). A single cycle is handed to the cycle
/// labeler. Cycles are processed in nonincreasing size order.
/// Throws Error{InvalidCycleSet} on even, non-simple or overlapping cycles.
std::vector<LabeledArc> label_disjoint_odd_cycles(std::span<const Trail> cycles, Label offset = 0);

/// Convenience for a graph that is itself a disjoint union of odd cycles.
Labeling label_disjoint_odd_cycles(const Graph& g);

/// Even-degree regular graphs, connected or not; 3*delta <= 2n + 3(k-1).
/// Throws Error{NotRegular | OddDegree}.
Labeling label_regular_even_general(const Graph& g);

// delta * denominator <= numerator
struct DeltaBound {
    Label numerator = 0;
    Label denominator = 1;

    [[nodiscard]] bool admits(Label delta) const { return delta * denominator <= numerator; }
    [[nodiscard]] std::string to_string() const;
};

struct ApproxMagicResult {
    Labeling labeling;
    std::string method;
    DeltaBound bound;
};

/// Picks the labeler matching the degree parity and connectivity of a regular graph.
ApproxMagicResult label_approx_magic(const Graph& g);

}  // namespace antimagic
