#pragma once

#include <iosfwd>
#include <optional>

#include "antimagic/labeling.hpp"
#include "antimagic/product.hpp"

namespace antimagic {

// Edge list: `p <n> <m>` followed by m lines `e <u> <v>`, 0-based, edge ids in
// line order. Lines starting with '#' and blank lines are ignored.
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);

// Labeling: one `<u> <v> <label>` line per edge, in edge-id order.
void write_labeling(std::ostream& os, const Graph& g, const Labeling& lab);
Labeling read_labeling(std::istream& is, const Graph& g);

// Product provenance sidecar: `s <n1> <n2>`, then one `g1|g2 <copy> <source-edge>`
// line per product edge.
void write_provenance(std::ostream& os, const ProductLayout& layout);
ProductLayout read_provenance(std::istream& is);

/// Graphviz text. With a labeling, edges carry their labels and vertices
/// their sums.
void write_dot(std::ostream& os, const Graph& g, const std::optional<Labeling>& lab = std::nullopt);

}  // namespace antimagic
