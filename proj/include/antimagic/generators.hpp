#pragma once

#include <cstdint>
#include <span>

#include "antimagic/graph.hpp"

namespace antimagic {

// Deterministic graph families for the test corpus and the CLI. All of them
// throw Error{InfeasibleParameters} on parameters that cannot produce a
// simple graph.

Graph cycle_graph(std::size_t n);     // n >= 3
Graph complete_graph(std::size_t n);  // n >= 2
Graph path_graph(std::size_t n);      // n >= 2 vertices
Graph petersen_graph();

/// Vertex i is joined to i +- s (mod n) for every offset s. An offset equal
/// to n/2 contributes a single edge per vertex pair. Offsets that are 0 mod n
/// or that repeat another offset up to sign are rejected.
Graph circulant_graph(std::size_t n, std::span<const std::size_t> offsets);

/// Vertex-disjoint union; vertices and edges of parts[i] follow those of parts[i-1].
Graph disjoint_union(std::span<const Graph> parts);
Graph copies(const Graph& g, std::size_t count);

/// Simple k-regular graph on n vertices from the pairing (configuration)
/// model: shuffle the nk stubs, pair them up, reject the whole sample on a
/// loop or multi-edge. Same (n, k, seed) always yields the same graph.
/// Throws Error{RetryBudgetExhausted} if no simple sample appears in time.
Graph random_regular_graph(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t max_attempts = 100000);

}  // namespace antimagic
