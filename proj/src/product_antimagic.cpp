#include "antimagic/product_antimagic.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "antimagic/approx_magic.hpp"
#include "antimagic/verification.hpp"

namespace antimagic {

namespace {

std::vector<VertexId> order_by_sum(const std::vector<Label>& sums) {
    std::vector<VertexId> order(sums.size());
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return sums[a] < sums[b]; });
    return order;
}

std::vector<std::size_t> ranks_of(const std::vector<VertexId>& order) {
    std::vector<std::size_t> rank(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
    return rank;
}

std::size_t require_regular(const Graph& g, const char* which) {
    const auto k = g.regular_degree();
    if (!k) throw Error(ErrorCode::NotRegular, std::string(which) + " is not regular");
    if (*k == 0) throw Error(ErrorCode::ConditionViolated, std::string(which) + " has degree 0");
    return *k;
}

Labeling approx_magic_for_product(const Graph& g1, std::size_t k1) {
    if (k1 % 2 == 1) return label_regular_odd_general(g1);
    return g1.is_connected() ? label_regular_even_connected(g1) : label_regular_even_general(g1);
}

// Labeling of cartesian_product(g1, g2) for connected regular factors.
std::pair<Labeling, std::string> dispatch_connected(const Graph& g1, const Graph& g2, std::size_t budget) {
    const std::size_t k1 = require_regular(g1, "first factor");
    const std::size_t k2 = require_regular(g2, "second factor");

    if (k1 < k2) {
        // Label G2 x G1 and carry the labels across the coordinate swap.
        const ProductStructure swapped = cartesian_product(g2, g1);
        const ProductStructure direct = cartesian_product(g1, g2);
        auto [sub, route] = dispatch_connected(g2, g1, budget);
        Labeling lab{std::vector<Label>(direct.product.edge_count(), 0)};
        for (EdgeId e = 0; e < swapped.product.edge_count(); ++e) {
            const auto& o = swapped.provenance[e];
            const EdgeOrigin mirrored{o.kind == CopyKind::G1 ? CopyKind::G2 : CopyKind::G1, o.copy, o.source};
            lab.label_of[direct.edge_id(mirrored)] = sub[e];
        }
        return {std::move(lab), route + " (factors swapped)"};
    }

    const ProductStructure ps = cartesian_product(g1, g2);
    if (k1 >= 3 || (k1 == 2 && k2 == 1)) {
        return {label_product(ps, k1, k2).labeling, "two-step product labeling"};
    }

    // k1 = k2 = 2 (toroidal grid) or k1 = k2 = 1 (K2 x K2).
    if (ps.product.edge_count() > budget) {
        throw Error(ErrorCode::UnsupportedConstructiveCase,
                    k1 == 2 ? "product of two cycles (toroidal grid) with " + std::to_string(ps.product.edge_count()) +
                                  " edges: no constructive labeling is implemented for this case and it exceeds "
                                  "the exhaustive-search budget of " +
                                  std::to_string(budget) + " edges"
                            : "product of two 1-regular components exceeds the exhaustive-search budget");
    }
    auto found = brute_force_antimagic(ps.product, budget);
    if (found.status != SearchStatus::Found) {
        throw Error(ErrorCode::UnsupportedConstructiveCase, "exhaustive search found no antimagic labeling");
    }
    return {std::move(*found.labeling), "exhaustive search"};
}

}  // namespace

bool product_condition_holds(std::size_t k1, std::size_t k2, bool g1_connected) {
    if (k1 % 2 == 1) return (k1 * k1 - k1) / 2 >= k2;
    if (!g1_connected) return k1 * k1 / 2 > k2;
    return k1 * k1 / 2 >= k2 && !(k1 == 2 && k2 == 2);
}

ProductLabeling label_product(const ProductStructure& ps, std::size_t k1, std::size_t k2) {
    const Graph& g1 = ps.g1;
    const Graph& g2 = ps.g2;
    if (g1.regular_degree() != k1 || k1 == 0) {
        throw Error(ErrorCode::G1NotRegular, "first factor is not " + std::to_string(k1) + "-regular");
    }
    if (g2.min_degree() == 0) throw Error(ErrorCode::G2HasIsolatedVertex, "second factor has an isolated vertex");
    if (g2.max_degree() > k2) {
        throw Error(ErrorCode::ConditionViolated, "second factor has a vertex of degree above " + std::to_string(k2));
    }
    const bool connected = g1.is_connected();
    if (!product_condition_holds(k1, k2, connected)) {
        throw Error(ErrorCode::ConditionViolated, "degree condition fails for k1=" + std::to_string(k1) +
                                                      ", k2=" + std::to_string(k2) +
                                                      (connected ? " (connected G1)" : " (disconnected G1)"));
    }

    const std::size_t n1 = ps.n1();
    const auto m1 = static_cast<Label>(g1.edge_count());
    const auto m2 = static_cast<Label>(g2.edge_count());

    // Step 1: factor labelings and the vertex renaming.
    ProductLabelingContext ctx;
    ctx.l1 = approx_magic_for_product(g1, k1);
    ctx.l2.label_of.resize(g2.edge_count());
    for (EdgeId e = 0; e < g2.edge_count(); ++e) ctx.l2.label_of[e] = static_cast<Label>(e * n1) + 1;
    ctx.order1 = order_by_sum(vertex_sums(g1, ctx.l1));
    ctx.order2 = order_by_sum(vertex_sums(g2, ctx.l2));
    const auto rank1 = ranks_of(ctx.order1);
    const auto rank2 = ranks_of(ctx.order2);

    // Step 2: shifted copies.
    Labeling lab{std::vector<Label>(ps.product.edge_count(), 0)};
    for (EdgeId e = 0; e < ps.product.edge_count(); ++e) {
        const auto& o = ps.provenance[e];
        if (o.kind == CopyKind::G1) {
            lab.label_of[e] = ctx.l1[o.source] + m2 * static_cast<Label>(n1) + static_cast<Label>(rank2[o.copy]) * m1;
        } else {
            lab.label_of[e] = ctx.l2[o.source] + static_cast<Label>(rank1[o.copy]);
        }
    }

    ctx.w1.assign(ps.product.vertex_count(), 0);
    ctx.w2.assign(ps.product.vertex_count(), 0);
    for (EdgeId e = 0; e < ps.product.edge_count(); ++e) {
        auto& w = ps.provenance[e].kind == CopyKind::G1 ? ctx.w1 : ctx.w2;
        w[ps.product.edge(e).u] += lab[e];
        w[ps.product.edge(e).v] += lab[e];
    }

    if (!verify_chain(ctx, ps, lab)) {
        throw std::logic_error("two-step product labeling broke the monotone chain");
    }
    return {std::move(lab), std::move(ctx)};
}

Labeling label_disconnected_regular_product(const ProductStructure& ps, std::size_t k1, std::size_t k2,
                                            std::size_t brute_force_edges) {
    if (require_regular(ps.g1, "first factor") != k1 || require_regular(ps.g2, "second factor") != k2) {
        throw Error(ErrorCode::NotRegular, "factor degrees do not match k1, k2");
    }
    const auto comps1 = connected_components(ps.g1);
    const auto comps2 = connected_components(ps.g2);

    Labeling lab{std::vector<Label>(ps.product.edge_count(), 0)};
    Label offset = 0;
    Label previous_max = 0;
    for (const auto& a : comps1) {
        for (const auto& b : comps2) {
            const ProductStructure block = cartesian_product(a.graph, b.graph);
            const Labeling sub = dispatch_connected(a.graph, b.graph, brute_force_edges).first;
            Label block_min = std::numeric_limits<Label>::max();
            Label block_max = 0;
            for (const Label s : vertex_sums(block.product, sub)) {
                block_min = std::min(block_min, s + static_cast<Label>(k1 + k2) * offset);
                block_max = std::max(block_max, s + static_cast<Label>(k1 + k2) * offset);
            }
            if (offset > 0 && block_min <= previous_max) {
                throw std::logic_error("component blocks do not dominate each other");
            }
            previous_max = block_max;

            for (EdgeId e = 0; e < block.product.edge_count(); ++e) {
                const auto& o = block.provenance[e];
                const EdgeOrigin global = o.kind == CopyKind::G1
                                              ? EdgeOrigin{CopyKind::G1, b.vertices[o.copy], a.edge_map[o.source]}
                                              : EdgeOrigin{CopyKind::G2, a.vertices[o.copy], b.edge_map[o.source]};
                lab.label_of[ps.edge_id(global)] = sub[e] + offset;
            }
            offset += static_cast<Label>(block.product.edge_count());
        }
    }
    return lab;
}

ProductResult dispatch_regular_product(const Graph& g1, const Graph& g2, std::size_t brute_force_edges) {
    const std::size_t k1 = require_regular(g1, "first factor");
    const std::size_t k2 = require_regular(g2, "second factor");
    ProductStructure ps = cartesian_product(g1, g2);
    if (g1.is_connected() && g2.is_connected()) {
        auto [lab, route] = dispatch_connected(g1, g2, brute_force_edges);
        return {std::move(ps), std::move(lab), std::move(route)};
    }
    Labeling lab = label_disconnected_regular_product(ps, k1, k2, brute_force_edges);
    return {std::move(ps), std::move(lab), "component blocks"};
}

ProductResult iterated_product(std::span<const Graph> factors, std::size_t brute_force_edges) {
    if (factors.size() < 2) throw Error(ErrorCode::InfeasibleParameters, "iterated product needs at least two factors");
    Graph partial = factors.front();
    for (std::size_t j = 1; j + 1 < factors.size(); ++j) {
        partial = cartesian_product(partial, factors[j]).product;
        if (!partial.regular_degree()) throw Error(ErrorCode::NotRegular, "intermediate product is not regular");
    }
    return dispatch_regular_product(partial, factors.back(), brute_force_edges);
}

}  // namespace antimagic
