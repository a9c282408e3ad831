#pragma once

// Reference computations for tests. Deliberately naive and independent of
// the library's own kernels: graphs are read only through edge(e).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "antimagic/decomposition.hpp"
#include "antimagic/labeling.hpp"

namespace oracle {

using antimagic::EdgeId;
using antimagic::Graph;
using antimagic::Label;
using antimagic::Labeling;
using antimagic::Trail;
using antimagic::VertexId;

inline std::vector<Label> sums(const Graph& g, const Labeling& lab) {
    std::vector<Label> w(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        w[g.edge(e).u] += lab.label_of.at(e);
        w[g.edge(e).v] += lab.label_of.at(e);
    }
    return w;
}

inline bool is_bijection(const Labeling& lab) {
    std::vector<Label> s = lab.label_of;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != static_cast<Label>(i + 1)) return false;
    }
    return true;
}

inline Label delta(const Graph& g, const Labeling& lab) {
    const auto w = sums(g, lab);
    if (w.empty()) return 0;
    const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    return *hi - *lo;
}

inline bool all_distinct(std::vector<Label> w) {
    std::sort(w.begin(), w.end());
    return std::adjacent_find(w.begin(), w.end()) == w.end();
}

inline bool is_antimagic(const Graph& g, const Labeling& lab) { return is_bijection(lab) && all_distinct(sums(g, lab)); }

// vertex_seq matches edge endpoints step by step and no edge repeats.
inline bool is_trail(const Graph& g, const Trail& t) {
    if (t.edge_seq.empty() || t.vertex_seq.size() != t.edge_seq.size() + 1) return false;
    std::set<EdgeId> seen;
    for (std::size_t i = 0; i < t.edge_seq.size(); ++i) {
        const EdgeId e = t.edge_seq[i];
        if (e >= g.edge_count() || !seen.insert(e).second) return false;
        const auto& ed = g.edge(e);
        const VertexId a = t.vertex_seq[i];
        const VertexId b = t.vertex_seq[i + 1];
        if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
    }
    return true;
}

inline bool is_simple_cycle(const Graph& g, const Trail& t) {
    if (!is_trail(g, t) || !t.is_closed()) return false;
    std::vector<VertexId> vs(t.vertex_seq.begin(), t.vertex_seq.end() - 1);
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

// Every edge of g appears in exactly one of the trails.
inline bool partitions_edges(const Graph& g, const std::vector<Trail>& trails) {
    std::vector<int> hits(g.edge_count(), 0);
    for (const auto& t : trails) {
        if (!is_trail(g, t)) return false;
        for (auto e : t.edge_seq) ++hits[e];
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

// Multisets of odd integers >= 3 summing to n, each in nonincreasing order.
inline std::vector<std::vector<std::size_t>> odd_partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t p = std::min(cap, left); p >= 3; --p) {
            if (p % 2 == 0) continue;
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// Vertex-disjoint union of cycles, built without the library generators.
inline Graph cycles_union(const std::vector<std::size_t>& sizes) {
    std::vector<std::pair<VertexId, VertexId>> es;
    VertexId base = 0;
    for (auto s : sizes) {
        for (VertexId i = 0; i < s; ++i) es.emplace_back(base + i, base + (i + 1) % s);
        base += s;
    }
    return antimagic::make_graph(base, es);
}

}  // namespace oracle
