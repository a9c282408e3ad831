#pragma once

#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

/// A walk without repeated edges: vertex_seq[i] and vertex_seq[i+1] are the
/// endpoints of edge_seq[i].
struct Trail {
    std::vector<EdgeId> edge_seq;
    std::vector<VertexId> vertex_seq;

    [[nodiscard]] std::size_t length() const { return edge_seq.size(); }
    [[nodiscard]] bool is_closed() const { return !edge_seq.empty() && vertex_seq.front() == vertex_seq.back(); }

    friend bool operator==(const Trail&, const Trail&) = default;
};

struct TrailDecomposition {
    std::vector<Trail> trails;         // nonincreasing length, ties by first edge id
    std::vector<EdgeId> concat;        // T = t_1 t_2 ...
    std::vector<std::size_t> offsets;  // trail i occupies concat[offsets[i], offsets[i+1])

    friend bool operator==(const TrailDecomposition&, const TrailDecomposition&) = default;
};

struct CircuitDecomposition {
    std::vector<Trail> even_circuits;  // closed, even length
    std::vector<Trail> odd_cycles;     // simple, odd length, pairwise vertex-disjoint, nonincreasing size
    std::size_t m_star = 0;            // sum of even circuit half-lengths
    std::size_t n_star = 0;            // sum of odd cycle lengths
};

/// Hierholzer splice that always follows the lowest-numbered unused edge at
/// the current vertex. Returns a closed trail from `start` covering every edge.
/// Throws Error{OddDegreeVertex | Disconnected}.
Trail euler_circuit(const Graph& g, VertexId start);

/// Same, starting at the lowest-id vertex of nonzero degree.
Trail euler_circuit(const Graph& g);

/// h trails covering every edge once, where 2h is the number of odd-degree
/// vertices. Odd vertices are paired in ascending id order by virtual edges,
/// an Euler circuit of the augmented multigraph is cut at the virtual edges.
/// Throws Error{Disconnected | NoOddVertices}.
TrailDecomposition listing_trails(const Graph& g);

/// Edge-disjoint simple cycles covering an even graph. Each cycle is found by
/// walking from the lowest-numbered free edge, always taking the lowest free
/// incident edge, until a vertex on the current walk repeats.
/// Throws Error{OddDegreeVertex}.
std::vector<Trail> cycle_decompose_even(const Graph& g);

/// Splices odd closed trails that share a vertex into even circuits until the
/// remaining odd ones are pairwise vertex-disjoint.
CircuitDecomposition merge_odd_cycles(std::vector<Trail> cycles);

inline CircuitDecomposition circuit_decomposition(const Graph& g) { return merge_odd_cycles(cycle_decompose_even(g)); }

}  // namespace antimagic
