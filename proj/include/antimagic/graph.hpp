#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "antimagic/error.hpp"

namespace antimagic {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
    VertexId u;
    VertexId v;

    // The endpoint that is not `x`. Precondition: x is an endpoint.
    [[nodiscard]] VertexId other(VertexId x) const { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    VertexId neighbor;
    EdgeId edge;
};

/// Undirected simple graph with dense vertex ids 0..n-1 and dense edge ids
/// 0..m-1 in insertion order. Immutable once built; share freely.
///
/// Each adjacency list is ordered by ascending edge id, which is what the
/// decomposition routines rely on for their "lowest-numbered edge" rules.
class Graph {
  public:
    Graph() = default;

    [[nodiscard]] std::size_t vertex_count() const { return adjacency_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }

    [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_[e]; }
    [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
    [[nodiscard]] std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }
    [[nodiscard]] std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

    [[nodiscard]] std::size_t min_degree() const;
    [[nodiscard]] std::size_t max_degree() const;

    /// The common degree if every vertex has the same degree. An empty graph
    /// (no vertices) is not considered regular.
    [[nodiscard]] std::optional<std::size_t> regular_degree() const;

    [[nodiscard]] bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

  private:
    friend Graph make_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_pairs);

    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// Builds a simple graph; edge ids follow input order.
/// Throws Error{SelfLoop | DuplicateEdge | VertexOutOfRange}.
Graph make_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_pairs);

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edge_pairs) {
    return make_graph(n, std::span<const std::pair<VertexId, VertexId>>(edge_pairs.begin(), edge_pairs.size()));
}

struct Component {
    std::vector<VertexId> vertices;  // ascending; local vertex i is vertices[i]
    Graph graph;                     // induced subgraph on local ids
    std::vector<EdgeId> edge_map;    // local edge id -> host edge id (ascending)
};

/// Components ordered by their lowest vertex id.
std::vector<Component> connected_components(const Graph& g);

/// Per-vertex component index, numbered in the same order as connected_components.
std::vector<std::size_t> component_index(const Graph& g);

}  // namespace antimagic
