#pragma once

#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

enum class CopyKind : std::uint8_t { G1, G2 };

/// Where a product edge comes from. A G1-copy is indexed by the G2 vertex it
/// sits over; a G2-copy by the G1 vertex.
struct EdgeOrigin {
    CopyKind kind;
    std::size_t copy;
    EdgeId source;

    friend bool operator==(const EdgeOrigin&, const EdgeOrigin&) = default;
};

/// The part of a product that survives in files: grid shape plus the origin
/// of each edge. Enough to recover the copy ordering of a product labeling.
struct ProductLayout {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::vector<EdgeOrigin> provenance;
};

/// G1 x G2 together with the grid coordinates of every vertex and the origin
/// of every edge.
///
/// Vertex (u_j, v_i) has id j*n2 + i. Edge ids list all G1-copies first
/// (copy i holds ids i*m1 .. i*m1+m1-1 in G1 edge order), then all G2-copies
/// (copy j holds n2*m1 + j*m2 + e).
struct ProductStructure {
    Graph g1;
    Graph g2;
    Graph product;
    std::vector<EdgeOrigin> provenance;

    [[nodiscard]] std::size_t n1() const { return g1.vertex_count(); }
    [[nodiscard]] std::size_t n2() const { return g2.vertex_count(); }

    [[nodiscard]] VertexId vertex_index(VertexId g1_vertex, VertexId g2_vertex) const {
        return g1_vertex * n2() + g2_vertex;
    }
    [[nodiscard]] VertexId g1_coordinate(VertexId p) const { return p / n2(); }
    [[nodiscard]] VertexId g2_coordinate(VertexId p) const { return p % n2(); }

    [[nodiscard]] EdgeId edge_id(const EdgeOrigin& origin) const;
    [[nodiscard]] ProductLayout layout() const { return {n1(), n2(), provenance}; }
};

/// Throws Error{InfeasibleParameters} if either factor has no vertices.
ProductStructure cartesian_product(const Graph& g1, const Graph& g2);

}  // namespace antimagic
