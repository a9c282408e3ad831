#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/labeling.hpp"
#include "antimagic/product.hpp"
#include "antimagic/product_antimagic.hpp"

namespace antimagic {

struct VerificationReport {
    bool is_bijection = false;
    SumProfile sums;
    Label delta = 0;
    bool is_antimagic = false;
    std::optional<bool> chain_ok;
    std::vector<std::pair<VertexId, VertexId>> duplicate_sum_pairs;  // (u, v), u < v, consecutive within a group
    std::vector<std::string> violations;
};

/// Recomputes every vertex sum from the labeling alone.
/// Throws Error{SizeMismatch}.
VerificationReport verify(const Graph& g, const Labeling& lab);

/// True iff sums strictly increase along the chain (u_1,v_1), ..., (u_n1,v_1),
/// (u_1,v_2), ..., (u_n1,v_n2) given by the context's vertex orders.
bool verify_chain(const ProductLabelingContext& ctx, const ProductStructure& ps, const Labeling& lab);

/// Chain check without the context: the G2 vertex order is recovered from the
/// smallest label of each G1-copy and the G1 order from the smallest label of
/// each G2-copy, which is how the two-step labeling assigns its shifts. If the
/// largest label sits in a G2-copy the labeling came from the swapped product
/// and the roles of the two copy kinds are exchanged.
bool verify_chain(const Graph& product, const ProductLayout& layout, const Labeling& lab);

std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

}  // namespace antimagic
