#include "antimagic/labeling.hpp"

#include <algorithm>
#include <string>

namespace antimagic {

namespace {

void check_size(const Graph& g, const Labeling& lab) {
    if (lab.size() != g.edge_count()) {
        throw Error(ErrorCode::SizeMismatch, "labeling has " + std::to_string(lab.size()) + " entries, graph has " +
                                                 std::to_string(g.edge_count()) + " edges");
    }
}

}  // namespace

bool Labeling::is_bijection() const {
    const auto m = static_cast<Label>(label_of.size());
    std::vector<bool> hit(label_of.size() + 1, false);
    for (const Label x : label_of) {
        if (x < 1 || x > m || hit[static_cast<std::size_t>(x)]) return false;
        hit[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

std::vector<Label> vertex_sums(const Graph& g, const Labeling& lab) {
    check_size(g, lab);
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    std::vector<Label> sums(g.vertex_count(), 0);

#pragma omp parallel for schedule(static) if (n > 4096)
    for (std::int64_t v = 0; v < n; ++v) {
        Label s = 0;
        for (const auto& inc : g.incident(static_cast<VertexId>(v))) s += lab[inc.edge];
        sums[static_cast<std::size_t>(v)] = s;
    }
    return sums;
}

std::vector<Label> vertex_sums_serial(const Graph& g, const Labeling& lab) {
    check_size(g, lab);
    std::vector<Label> sums(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        sums[g.edge(e).u] += lab[e];
        sums[g.edge(e).v] += lab[e];
    }
    return sums;
}

SumProfile sum_profile(const Graph& g, const Labeling& lab) {
    SumProfile p;
    p.sum_of = vertex_sums(g, lab);
    if (!p.sum_of.empty()) {
        const auto [lo, hi] = std::minmax_element(p.sum_of.begin(), p.sum_of.end());
        p.min = *lo;
        p.max = *hi;
    }
    return p;
}

}  // namespace antimagic
