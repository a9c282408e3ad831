#pragma once

#include <span>
#include <string>
#include <vector>

#include "antimagic/labeling.hpp"
#include "antimagic/product.hpp"
#include "antimagic/search.hpp"

namespace antimagic {

/// Everything the two-step product labeling decides before it writes labels.
struct ProductLabelingContext {
    Labeling l1;                  // approximately magic labeling of G1, labels 1..m1
    Labeling l2;                  // G2 labeling with labels 1, n1+1, ..., (m2-1)n1+1
    std::vector<VertexId> order1; // u_1..u_n1: G1 vertices by (L1 sum, id)
    std::vector<VertexId> order2; // v_1..v_n2: G2 vertices by (L2 sum, id)
    std::vector<Label> w1;        // per product vertex, sum over its G1-copy edges
    std::vector<Label> w2;        // per product vertex, sum over its G2-copy edges
};

struct ProductLabeling {
    Labeling labeling;
    ProductLabelingContext context;
};

/// Whether the degree inequality for the two-step labeling holds.
/// Connected G1: k1 odd and (k1^2-k1)/2 >= k2, or k1 even, k1^2/2 >= k2 and
/// not k1 = k2 = 2. Disconnected G1 needs the strict k1^2/2 > k2 when k1 is even.
bool product_condition_holds(std::size_t k1, std::size_t k2, bool g1_connected);

/// Two-step antimagic labeling of G1 x G2 for a k1-regular G1 and a G2 with
/// degrees in [1, k2].
///
/// G1-copy number i in the order2 ranking gets L1 shifted by m2*n1 + (i-1)*m1;
/// G2-copy number j in the order1 ranking gets L2 shifted by j-1. The result
/// sums strictly increase along (u_1,v_1), (u_2,v_1), ..., (u_n1,v_n2); that
/// chain is checked before returning.
///
/// Throws Error{G1NotRegular | G2HasIsolatedVertex | ConditionViolated}.
ProductLabeling label_product(const ProductStructure& ps, std::size_t k1, std::size_t k2);

/// Labels each connected component of a regular x regular product with its
/// own consecutive block of labels, components ordered by lowest vertex id.
/// Each block is antimagic and every sum in a later block exceeds every sum
/// in an earlier one.
Labeling label_disconnected_regular_product(const ProductStructure& ps, std::size_t k1, std::size_t k2,
                                            std::size_t brute_force_edges = kDefaultAntimagicSearchEdges);

struct ProductResult {
    ProductStructure structure;
    Labeling labeling;
    std::string route;
};

/// Antimagic labeling of g1 x g2 for regular factors of degree >= 1, in the
/// edge ids of cartesian_product(g1, g2). Both-2-regular and both-1-regular
/// components fall back to exhaustive search within the edge budget.
/// Throws Error{NotRegular | ConditionViolated | UnsupportedConstructiveCase}.
ProductResult dispatch_regular_product(const Graph& g1, const Graph& g2,
                                       std::size_t brute_force_edges = kDefaultAntimagicSearchEdges);

/// Folds ((f0 x f1) x f2) x ... and labels the final two-factor product.
ProductResult iterated_product(std::span<const Graph> factors,
                               std::size_t brute_force_edges = kDefaultAntimagicSearchEdges);

}  // namespace antimagic
