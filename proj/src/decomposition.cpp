#include "antimagic/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace antimagic {

namespace {

constexpr auto npos = std::numeric_limits<std::size_t>::max();

// Graph plus tagged virtual edges; virtual ids start at the host's edge count.
struct Multigraph {
    std::vector<Edge> edges;
    std::vector<std::vector<Incidence>> adj;

    explicit Multigraph(const Graph& g) : edges(g.edges().begin(), g.edges().end()), adj(g.vertex_count()) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            adj[v].assign(g.incident(v).begin(), g.incident(v).end());
        }
    }

    EdgeId add_edge(VertexId u, VertexId v) {
        const EdgeId id = edges.size();
        edges.push_back({u, v});
        adj[u].push_back({v, id});
        adj[v].push_back({u, id});
        return id;
    }
};

Trail hierholzer(const Multigraph& mg, VertexId start) {
    for (VertexId v = 0; v < mg.adj.size(); ++v) {
        if (mg.adj[v].size() % 2 != 0) {
            throw Error(ErrorCode::OddDegreeVertex, "vertex " + std::to_string(v) + " has odd degree");
        }
    }
    if (start >= mg.adj.size()) throw Error(ErrorCode::VertexOutOfRange, "start vertex out of range");

    std::vector<bool> used(mg.edges.size(), false);
    std::vector<std::size_t> cursor(mg.adj.size(), 0);
    std::vector<std::pair<VertexId, EdgeId>> stack{{start, npos}};
    Trail out;
    while (!stack.empty()) {
        const VertexId v = stack.back().first;
        auto& c = cursor[v];
        while (c < mg.adj[v].size() && used[mg.adj[v][c].edge]) ++c;
        if (c < mg.adj[v].size()) {
            const auto inc = mg.adj[v][c];
            used[inc.edge] = true;
            stack.emplace_back(inc.neighbor, inc.edge);
        } else {
            out.vertex_seq.push_back(v);
            if (stack.back().second != npos) out.edge_seq.push_back(stack.back().second);
            stack.pop_back();
        }
    }
    if (out.edge_seq.size() != mg.edges.size()) {
        throw Error(ErrorCode::Disconnected, "edges are not all reachable from vertex " + std::to_string(start));
    }
    std::reverse(out.vertex_seq.begin(), out.vertex_seq.end());
    std::reverse(out.edge_seq.begin(), out.edge_seq.end());
    return out;
}

VertexId first_nonisolated(const std::vector<std::vector<Incidence>>& adj) {
    for (VertexId v = 0; v < adj.size(); ++v) {
        if (!adj[v].empty()) return v;
    }
    return 0;
}

// Rotates a closed trail so that it starts (and ends) at vertex_seq[pos].
Trail rotate_closed(const Trail& t, std::size_t pos) {
    const std::size_t len = t.length();
    Trail r;
    r.edge_seq.reserve(len);
    r.vertex_seq.reserve(len + 1);
    for (std::size_t i = 0; i < len; ++i) {
        r.edge_seq.push_back(t.edge_seq[(pos + i) % len]);
        r.vertex_seq.push_back(t.vertex_seq[(pos + i) % len]);
    }
    r.vertex_seq.push_back(r.vertex_seq.front());
    return r;
}

std::vector<VertexId> sorted_vertices(const Trail& t) {
    std::vector<VertexId> vs(t.vertex_seq.begin(), t.vertex_seq.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::size_t lowest_common_vertex(const Trail& a, const Trail& b) {
    const auto va = sorted_vertices(a);
    const auto vb = sorted_vertices(b);
    std::vector<VertexId> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    return common.empty() ? npos : common.front();
}

Trail splice(const Trail& a, const Trail& b, VertexId at) {
    const auto pos_a = static_cast<std::size_t>(std::find(a.vertex_seq.begin(), a.vertex_seq.end(), at) - a.vertex_seq.begin());
    const auto pos_b = static_cast<std::size_t>(std::find(b.vertex_seq.begin(), b.vertex_seq.end(), at) - b.vertex_seq.begin());
    Trail merged = rotate_closed(a, pos_a);
    const Trail tail = rotate_closed(b, pos_b);
    merged.edge_seq.insert(merged.edge_seq.end(), tail.edge_seq.begin(), tail.edge_seq.end());
    merged.vertex_seq.insert(merged.vertex_seq.end(), tail.vertex_seq.begin() + 1, tail.vertex_seq.end());
    return merged;
}

}  // namespace

Trail euler_circuit(const Graph& g, VertexId start) {
    if (g.edge_count() > 0 && start < g.vertex_count() && g.degree(start) == 0) {
        throw Error(ErrorCode::Disconnected, "start vertex " + std::to_string(start) + " is isolated");
    }
    return hierholzer(Multigraph(g), start);
}

Trail euler_circuit(const Graph& g) {
    Multigraph mg(g);
    return hierholzer(mg, first_nonisolated(mg.adj));
}

TrailDecomposition listing_trails(const Graph& g) {
    std::vector<VertexId> odd;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) % 2 != 0) odd.push_back(v);
    }
    if (odd.empty()) throw Error(ErrorCode::NoOddVertices, "graph has no odd-degree vertices; use an Euler circuit");

    Multigraph mg(g);
    const EdgeId first_virtual = g.edge_count();
    for (std::size_t i = 0; i < odd.size(); i += 2) mg.add_edge(odd[i], odd[i + 1]);

    const Trail circuit = hierholzer(mg, first_nonisolated(mg.adj));
    const std::size_t len = circuit.length();
    std::size_t cut = 0;
    while (circuit.edge_seq[cut] < first_virtual) ++cut;

    // Walk once around the circuit starting just past a virtual edge; every
    // later virtual edge closes the current trail.
    TrailDecomposition td;
    Trail current;
    for (std::size_t step = 1; step <= len; ++step) {
        const std::size_t pos = (cut + step) % len;
        const EdgeId e = circuit.edge_seq[pos];
        if (e >= first_virtual) {
            current.vertex_seq.push_back(circuit.vertex_seq[pos]);
            td.trails.push_back(std::move(current));
            current = {};
            continue;
        }
        current.edge_seq.push_back(e);
        current.vertex_seq.push_back(circuit.vertex_seq[pos]);
    }

    std::stable_sort(td.trails.begin(), td.trails.end(), [](const Trail& a, const Trail& b) {
        if (a.length() != b.length()) return a.length() > b.length();
        return a.edge_seq.front() < b.edge_seq.front();
    });
    td.offsets.push_back(0);
    for (const auto& t : td.trails) {
        td.concat.insert(td.concat.end(), t.edge_seq.begin(), t.edge_seq.end());
        td.offsets.push_back(td.concat.size());
    }
    return td;
}

std::vector<Trail> cycle_decompose_even(const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) % 2 != 0) {
            throw Error(ErrorCode::OddDegreeVertex, "vertex " + std::to_string(v) + " has odd degree");
        }
    }

    std::vector<bool> used(g.edge_count(), false);
    std::vector<std::size_t> cursor(g.vertex_count(), 0);
    std::vector<std::size_t> on_walk(g.vertex_count(), npos);
    std::vector<VertexId> walk_vertices;
    std::vector<EdgeId> walk_edges;
    std::vector<Trail> cycles;
    std::size_t remaining = g.edge_count();
    EdgeId seed = 0;

    auto step = [&](EdgeId e, VertexId to) {
        used[e] = true;
        walk_edges.push_back(e);
        if (on_walk[to] == npos) {
            on_walk[to] = walk_vertices.size();
            walk_vertices.push_back(to);
            return;
        }
        const std::size_t i = on_walk[to];
        Trail c;
        c.vertex_seq.assign(walk_vertices.begin() + static_cast<std::ptrdiff_t>(i), walk_vertices.end());
        c.vertex_seq.push_back(to);
        c.edge_seq.assign(walk_edges.begin() + static_cast<std::ptrdiff_t>(i), walk_edges.end());
        remaining -= c.length();
        for (std::size_t j = i + 1; j < walk_vertices.size(); ++j) on_walk[walk_vertices[j]] = npos;
        walk_vertices.resize(i + 1);
        walk_edges.resize(i);
        if (walk_edges.empty()) {
            on_walk[walk_vertices.front()] = npos;
            walk_vertices.clear();
        }
        cycles.push_back(std::move(c));
    };

    while (remaining > 0) {
        if (walk_edges.empty()) {
            while (used[seed]) ++seed;
            const auto& [u, v] = g.edge(seed);
            on_walk[u] = 0;
            walk_vertices.push_back(u);
            step(seed, v);
            continue;
        }
        const VertexId x = walk_vertices.back();
        auto& c = cursor[x];
        const auto adj = g.incident(x);
        while (used[adj[c].edge]) ++c;  // an even graph always leaves a free edge here
        step(adj[c].edge, adj[c].neighbor);
    }
    return cycles;
}

CircuitDecomposition merge_odd_cycles(std::vector<Trail> cycles) {
    const auto odd = [](const Trail& t) { return t.length() % 2 == 1; };

    bool merged_any = true;
    while (merged_any) {
        merged_any = false;
        for (std::size_t i = 0; i < cycles.size() && !merged_any; ++i) {
            if (!odd(cycles[i])) continue;
            for (std::size_t j = i + 1; j < cycles.size(); ++j) {
                if (!odd(cycles[j])) continue;
                const auto at = lowest_common_vertex(cycles[i], cycles[j]);
                if (at == npos) continue;
                cycles[i] = splice(cycles[i], cycles[j], at);
                cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(j));
                merged_any = true;
                break;
            }
        }
    }

    CircuitDecomposition cd;
    for (auto& c : cycles) {
        if (odd(c)) {
            cd.n_star += c.length();
            cd.odd_cycles.push_back(std::move(c));
        } else {
            cd.m_star += c.length() / 2;
            cd.even_circuits.push_back(std::move(c));
        }
    }
    std::stable_sort(cd.odd_cycles.begin(), cd.odd_cycles.end(),
                     [](const Trail& a, const Trail& b) { return a.length() > b.length(); });
    return cd;
}

}  // namespace antimagic
