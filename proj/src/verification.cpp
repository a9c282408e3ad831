#include "antimagic/verification.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace antimagic {

namespace {

bool chain_increasing(const std::vector<Label>& sums, std::span<const VertexId> order1,
                      std::span<const VertexId> order2, std::size_t n2) {
    bool first = true;
    Label prev = 0;
    for (const VertexId v : order2) {
        for (const VertexId u : order1) {
            const Label s = sums[u * n2 + v];
            if (!first && s <= prev) return false;
            prev = s;
            first = false;
        }
    }
    return true;
}

std::vector<VertexId> order_by_key(const std::vector<Label>& key) {
    std::vector<VertexId> order(key.size());
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return key[a] < key[b]; });
    return order;
}

}  // namespace

VerificationReport verify(const Graph& g, const Labeling& lab) {
    VerificationReport r;
    r.sums = sum_profile(g, lab);
    r.delta = r.sums.delta();
    r.is_bijection = lab.is_bijection();
    if (!r.is_bijection) r.violations.emplace_back("labels are not a bijection onto 1..m");

    std::vector<VertexId> by_sum(g.vertex_count());
    std::iota(by_sum.begin(), by_sum.end(), VertexId{0});
    std::stable_sort(by_sum.begin(), by_sum.end(),
                     [&](VertexId a, VertexId b) { return r.sums.sum_of[a] < r.sums.sum_of[b]; });
    for (std::size_t i = 1; i < by_sum.size(); ++i) {
        if (r.sums.sum_of[by_sum[i - 1]] == r.sums.sum_of[by_sum[i]]) {
            r.duplicate_sum_pairs.emplace_back(by_sum[i - 1], by_sum[i]);
        }
    }
    r.is_antimagic = r.duplicate_sum_pairs.empty();
    if (!r.is_antimagic) {
        r.violations.push_back(std::to_string(r.duplicate_sum_pairs.size()) + " repeated vertex sum(s)");
    }
    return r;
}

bool verify_chain(const ProductLabelingContext& ctx, const ProductStructure& ps, const Labeling& lab) {
    const auto sums = vertex_sums_serial(ps.product, lab);
    return chain_increasing(sums, ctx.order1, ctx.order2, ps.n2());
}

bool verify_chain(const Graph& product, const ProductLayout& layout, const Labeling& lab) {
    if (layout.provenance.size() != product.edge_count() || layout.n1 * layout.n2 != product.vertex_count()) {
        throw Error(ErrorCode::SizeMismatch, "provenance does not match the product graph");
    }
    if (product.edge_count() == 0) return true;
    constexpr Label none = std::numeric_limits<Label>::max();
    std::vector<Label> g1_copy_min(layout.n2, none);  // indexed by G2 vertex
    std::vector<Label> g2_copy_min(layout.n1, none);  // indexed by G1 vertex
    EdgeId top = 0;
    for (EdgeId e = 0; e < product.edge_count(); ++e) {
        const auto& o = layout.provenance[e];
        auto& slot = o.kind == CopyKind::G1 ? g1_copy_min[o.copy] : g2_copy_min[o.copy];
        slot = std::min(slot, lab[e]);
        if (lab[e] > lab[top]) top = e;
    }
    const auto sums = vertex_sums_serial(product, lab);
    if (layout.provenance[top].kind == CopyKind::G1) {
        return chain_increasing(sums, order_by_key(g2_copy_min), order_by_key(g1_copy_min), layout.n2);
    }
    // The labeling was built on the swapped product: the G2-copies carry the
    // large shifted labels, so they play the outer role of the chain.
    std::vector<Label> transposed(sums.size());
    for (VertexId u = 0; u < layout.n1; ++u) {
        for (VertexId v = 0; v < layout.n2; ++v) transposed[v * layout.n1 + u] = sums[u * layout.n2 + v];
    }
    return chain_increasing(transposed, order_by_key(g1_copy_min), order_by_key(g2_copy_min), layout.n1);
}

std::string report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["bijection"] = r.is_bijection;
    j["antimagic"] = r.is_antimagic;
    j["delta"] = r.delta;
    j["min_sum"] = r.sums.min;
    j["max_sum"] = r.sums.max;
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& [u, v] : r.duplicate_sum_pairs) pairs.push_back({u, v});
    j["duplicate_sum_pairs"] = pairs;
    if (r.chain_ok) j["chain_ok"] = *r.chain_ok;
    j["violations"] = r.violations;
    return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "bijection: " << (r.is_bijection ? "yes" : "no") << '\n'
       << "antimagic: " << (r.is_antimagic ? "yes" : "no") << '\n'
       << "delta: " << r.delta << '\n'
       << "min_sum: " << r.sums.min << '\n'
       << "max_sum: " << r.sums.max << '\n';
    if (r.chain_ok) os << "chain_ok: " << (*r.chain_ok ? "yes" : "no") << '\n';
    for (const auto& [u, v] : r.duplicate_sum_pairs) os << "duplicate_sum: " << u << ' ' << v << '\n';
    for (const auto& msg : r.violations) os << "violation: " << msg << '\n';
    return os.str();
}

}  // namespace antimagic
