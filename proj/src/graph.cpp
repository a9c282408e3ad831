#include "antimagic/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace antimagic {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
        case ErrorCode::RetryBudgetExhausted: return "RetryBudgetExhausted";
        case ErrorCode::OddDegreeVertex: return "OddDegreeVertex";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::NoOddVertices: return "NoOddVertices";
        case ErrorCode::NotRegular: return "NotRegular";
        case ErrorCode::EvenDegree: return "EvenDegree";
        case ErrorCode::OddDegree: return "OddDegree";
        case ErrorCode::InvalidCycleSet: return "InvalidCycleSet";
        case ErrorCode::ConditionViolated: return "ConditionViolated";
        case ErrorCode::G2HasIsolatedVertex: return "G2HasIsolatedVertex";
        case ErrorCode::G1NotRegular: return "G1NotRegular";
        case ErrorCode::UnsupportedConstructiveCase: return "UnsupportedConstructiveCase";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Graph make_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_pairs) {
    Graph g;
    g.adjacency_.resize(n);
    g.edges_.reserve(edge_pairs.size());

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edge_pairs.size() * 2);
    for (const auto& [u, v] : edge_pairs) {
        if (u >= n || v >= n) {
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n));
        }
        if (u == v) {
            throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        }
        const auto key = static_cast<std::uint64_t>(std::min(u, v)) * n + std::max(u, v);
        if (!seen.insert(key).second) {
            throw Error(ErrorCode::DuplicateEdge,
                        "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        const EdgeId id = g.edges_.size();
        g.edges_.push_back({u, v});
        g.adjacency_[u].push_back({v, id});
        g.adjacency_[v].push_back({u, id});
    }
    return g;
}

std::size_t Graph::min_degree() const {
    std::size_t best = adjacency_.empty() ? 0 : adjacency_.front().size();
    for (const auto& adj : adjacency_) best = std::min(best, adj.size());
    return best;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& adj : adjacency_) best = std::max(best, adj.size());
    return best;
}

std::optional<std::size_t> Graph::regular_degree() const {
    if (adjacency_.empty()) return std::nullopt;
    const std::size_t k = adjacency_.front().size();
    for (const auto& adj : adjacency_) {
        if (adj.size() != k) return std::nullopt;
    }
    return k;
}

std::vector<std::size_t> component_index(const Graph& g) {
    constexpr auto unseen = static_cast<std::size_t>(-1);
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> comp(n, unseen);
    std::vector<VertexId> stack;
    std::size_t next = 0;
    for (VertexId root = 0; root < n; ++root) {
        if (comp[root] != unseen) continue;
        comp[root] = next;
        stack.push_back(root);
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (const auto& inc : g.incident(x)) {
                if (comp[inc.neighbor] == unseen) {
                    comp[inc.neighbor] = next;
                    stack.push_back(inc.neighbor);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool Graph::is_connected() const {
    const auto comp = component_index(*this);
    return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

std::vector<Component> connected_components(const Graph& g) {
    const auto comp = component_index(g);
    const std::size_t count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;

    std::vector<Component> out(count);
    std::vector<VertexId> local(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        local[v] = out[comp[v]].vertices.size();
        out[comp[v]].vertices.push_back(v);
    }

    std::vector<std::vector<std::pair<VertexId, VertexId>>> pairs(count);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edge(e);
        const auto c = comp[u];
        pairs[c].emplace_back(local[u], local[v]);
        out[c].edge_map.push_back(e);
    }
    for (std::size_t c = 0; c < count; ++c) {
        out[c].graph = make_graph(out[c].vertices.size(), pairs[c]);
    }
    return out;
}

}  // namespace antimagic
