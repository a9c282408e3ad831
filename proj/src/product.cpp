#include "antimagic/product.hpp"

namespace antimagic {

EdgeId ProductStructure::edge_id(const EdgeOrigin& origin) const {
    const std::size_t m1 = g1.edge_count();
    const std::size_t m2 = g2.edge_count();
    if (origin.kind == CopyKind::G1) return origin.copy * m1 + origin.source;
    return n2() * m1 + origin.copy * m2 + origin.source;
}

ProductStructure cartesian_product(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() == 0 || g2.vertex_count() == 0) {
        throw Error(ErrorCode::InfeasibleParameters, "cartesian product of an empty graph");
    }
    ProductStructure ps{g1, g2, {}, {}};
    const std::size_t n1 = g1.vertex_count();
    const std::size_t n2 = g2.vertex_count();

    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(n2 * g1.edge_count() + n1 * g2.edge_count());
    ps.provenance.reserve(pairs.capacity());

    for (VertexId i = 0; i < n2; ++i) {
        for (EdgeId e = 0; e < g1.edge_count(); ++e) {
            const auto& [a, b] = g1.edge(e);
            pairs.emplace_back(a * n2 + i, b * n2 + i);
            ps.provenance.push_back({CopyKind::G1, i, e});
        }
    }
    for (VertexId j = 0; j < n1; ++j) {
        for (EdgeId e = 0; e < g2.edge_count(); ++e) {
            const auto& [a, b] = g2.edge(e);
            pairs.emplace_back(j * n2 + a, j * n2 + b);
            ps.provenance.push_back({CopyKind::G2, j, e});
        }
    }
    ps.product = make_graph(n1 * n2, pairs);
    return ps;
}

}  // namespace antimagic
