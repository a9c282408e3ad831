#include "antimagic/approx_magic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace antimagic {

namespace {

std::size_t require_regular(const Graph& g) {
    const auto k = g.regular_degree();
    if (!k) throw Error(ErrorCode::NotRegular, "graph is not regular");
    if (*k == 0) throw Error(ErrorCode::InfeasibleParameters, "graph has no edges");
    return *k;
}

void require_connected(const Graph& g) {
    if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");
}

// Edges of a closed trail starting at its lowest-id edge, heading toward the
// smaller of that edge's two neighbours.
std::vector<EdgeId> canonical_arc(const Trail& cycle) {
    const auto& es = cycle.edge_seq;
    const std::size_t len = es.size();
    const auto start = static_cast<std::size_t>(std::min_element(es.begin(), es.end()) - es.begin());
    const bool forward = es[(start + 1) % len] < es[(start + len - 1) % len];
    std::vector<EdgeId> arc;
    arc.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        arc.push_back(forward ? es[(start + i) % len] : es[(start + len - i) % len]);
    }
    return arc;
}

void validate_odd_cycles(std::span<const Trail> cycles) {
    std::vector<VertexId> all;
    for (const auto& c : cycles) {
        if (!c.is_closed() || c.length() < 3 || c.length() % 2 == 0) {
            throw Error(ErrorCode::InvalidCycleSet, "expected closed odd cycles of length >= 3");
        }
        std::vector<VertexId> vs(c.vertex_seq.begin(), c.vertex_seq.end() - 1);
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
            throw Error(ErrorCode::InvalidCycleSet, "cycle repeats a vertex");
        }
        all.insert(all.end(), vs.begin(), vs.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw Error(ErrorCode::InvalidCycleSet, "cycles share a vertex");
    }
}

}  // namespace

std::string DeltaBound::to_string() const {
    if (denominator == 1) return std::to_string(numerator);
    return std::to_string(numerator) + "/" + std::to_string(denominator);
}

std::vector<Label> cycle_position_labels(std::size_t m) {
    if (m < 3) throw Error(ErrorCode::InfeasibleParameters, "cycle labeling needs m >= 3");
    std::vector<Label> at(m, 0);
    at[0] = 1;
    auto high = static_cast<Label>(m);
    Label low = 2;
    const std::size_t pairs = (m - 1) / 2;
    for (std::size_t j = 1; j <= pairs; ++j) {
        if (j % 2 == 1) {
            at[j] = high;
            at[m - j] = high - 1;
            high -= 2;
        } else {
            at[j] = low;
            at[m - j] = low + 1;
            low += 2;
        }
    }
    if (m % 2 == 0) {
        // Both cursors meet at the single leftover label 2t+2.
        at[m / 2] = low;
    }
    return at;
}

Labeling label_cycle(std::size_t m) { return {cycle_position_labels(m)}; }

Labeling label_trail_sequence(std::span<const EdgeId> concat, std::size_t m) {
    if (concat.size() != m) throw Error(ErrorCode::SizeMismatch, "trail sequence does not cover every edge");
    Labeling lab{std::vector<Label>(m, 0)};
    const auto mm = static_cast<Label>(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto p = static_cast<Label>(i + 1);
        lab.label_of[concat[i]] = (p % 2 == 1) ? (p + 1) / 2 : mm + 1 - p / 2;
    }
    return lab;
}

Labeling label_regular_odd(const Graph& g, const TrailDecomposition& td) {
    const auto k = require_regular(g);
    if (k % 2 == 0) throw Error(ErrorCode::EvenDegree, "degree " + std::to_string(k) + " is even");
    require_connected(g);
    return label_trail_sequence(td.concat, g.edge_count());
}

Labeling label_regular_odd(const Graph& g) {
    const auto k = require_regular(g);
    if (k % 2 == 0) throw Error(ErrorCode::EvenDegree, "degree " + std::to_string(k) + " is even");
    require_connected(g);
    return label_trail_sequence(listing_trails(g).concat, g.edge_count());
}

TrailDecomposition listing_trails_all_components(const Graph& g) {
    TrailDecomposition all;
    for (const auto& comp : connected_components(g)) {
        if (comp.graph.edge_count() == 0) continue;
        for (auto t : listing_trails(comp.graph).trails) {
            for (auto& e : t.edge_seq) e = comp.edge_map[e];
            for (auto& v : t.vertex_seq) v = comp.vertices[v];
            all.trails.push_back(std::move(t));
        }
    }
    std::stable_sort(all.trails.begin(), all.trails.end(), [](const Trail& a, const Trail& b) {
        if (a.length() != b.length()) return a.length() > b.length();
        return a.edge_seq.front() < b.edge_seq.front();
    });
    all.offsets.push_back(0);
    for (const auto& t : all.trails) {
        all.concat.insert(all.concat.end(), t.edge_seq.begin(), t.edge_seq.end());
        all.offsets.push_back(all.concat.size());
    }
    return all;
}

Labeling label_regular_odd_general(const Graph& g) {
    const auto k = require_regular(g);
    if (k % 2 == 0) throw Error(ErrorCode::EvenDegree, "degree " + std::to_string(k) + " is even");
    return label_trail_sequence(listing_trails_all_components(g).concat, g.edge_count());
}

Labeling label_regular_even_connected(const Graph& g) {
    const auto k = require_regular(g);
    if (k % 2 == 1) throw Error(ErrorCode::OddDegree, "degree " + std::to_string(k) + " is odd");
    require_connected(g);
    const Trail circuit = euler_circuit(g);
    const auto at = cycle_position_labels(circuit.length());
    Labeling lab{std::vector<Label>(g.edge_count(), 0)};
    for (std::size_t p = 0; p < circuit.length(); ++p) lab.label_of[circuit.edge_seq[p]] = at[p];
    return lab;
}

bool ThreeSequences::identities_hold() const {
    for (Label i = 1; i <= t; ++i) {
        if (a(i) + b(i) != 2 * t + eps + 1) return false;
        if (b(i) + c(i) != 4 * t + 2 * eps + 1) return false;
        for (Label j = 1; j <= t; ++j) {
            const Label ac = a(i) + c(j);
            if (ac < 2 * t + eps + 2 || ac > 4 * t + eps) return false;
        }
    }
    for (Label i = 1; i <= b_count(); ++i) {
        for (Label j = 1; j <= b_count(); ++j) {
            if (i == j) continue;
            const Label bb = b(i) + b(j);
            if (bb < min_sum() || bb > max_sum()) return false;
        }
    }
    return true;
}

std::vector<LabeledArc> label_disjoint_odd_cycles(std::span<const Trail> cycles, Label offset) {
    validate_odd_cycles(cycles);
    if (cycles.empty()) return {};

    std::vector<std::size_t> order(cycles.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return cycles[x].length() > cycles[y].length(); });

    std::vector<LabeledArc> out;
    std::size_t n = 0;
    for (const auto idx : order) {
        out.push_back({canonical_arc(cycles[idx]), {}});
        n += cycles[idx].length();
    }

    if (out.size() == 1) {
        for (const Label x : cycle_position_labels(n)) out.front().labels.push_back(x + offset);
        return out;
    }

    const auto seq = ThreeSequences::for_total(n);
    const Label t = seq.t;
    std::vector<bool> b_used(static_cast<std::size_t>(seq.b_count()) + 1, false);
    Label next_b = 1;
    auto take_b = [&](Label i) {
        b_used[static_cast<std::size_t>(i)] = true;
        return seq.b(i);
    };
    // Remaining B elements in descending value order, i.e. ascending index.
    auto next_free_b = [&]() {
        while (next_b <= seq.b_count() && b_used[static_cast<std::size_t>(next_b)]) ++next_b;
        if (next_b > seq.b_count()) throw std::logic_error("B sequence exhausted");
        return take_b(next_b);
    };

    Label consumed = 0;  // elements taken so far from each of A and C
    for (auto& arc : out) {
        const auto len = static_cast<Label>(arc.edges.size());
        const Label half = (len - 1) / 2;
        auto& labels = arc.labels;
        const Label left = t - consumed;

        if (left >= half) {
            labels.push_back(take_b(consumed + half));
            for (Label j = consumed + 1; j <= consumed + half; ++j) {
                labels.push_back(seq.c(j));
                labels.push_back(seq.a(j));
            }
            consumed += half;
        } else if (left > 0) {
            if (t < 2 || b_used[static_cast<std::size_t>(t)] || b_used[1]) {
                throw std::logic_error("b_t or b_1 unavailable for a partial odd-cycle arc");
            }
            labels.push_back(take_b(t));
            for (Label j = consumed + 1; j <= t; ++j) {
                labels.push_back(seq.c(j));
                labels.push_back(seq.a(j));
            }
            labels.push_back(take_b(1));
            consumed = t;
        }
        while (static_cast<Label>(labels.size()) < len) labels.push_back(next_free_b());
        for (auto& x : labels) x += offset;
    }
    return out;
}

Labeling label_disjoint_odd_cycles(const Graph& g) {
    const auto cycles = cycle_decompose_even(g);
    Labeling lab{std::vector<Label>(g.edge_count(), 0)};
    for (const auto& arc : label_disjoint_odd_cycles(cycles)) {
        for (std::size_t i = 0; i < arc.edges.size(); ++i) lab.label_of[arc.edges[i]] = arc.labels[i];
    }
    return lab;
}

Labeling label_regular_even_general(const Graph& g) {
    const auto k = require_regular(g);
    if (k % 2 == 1) throw Error(ErrorCode::OddDegree, "degree " + std::to_string(k) + " is odd");

    const auto m = static_cast<Label>(g.edge_count());
    const CircuitDecomposition cd = circuit_decomposition(g);
    Labeling lab{std::vector<Label>(g.edge_count(), 0)};

    // Circuit i takes lows below[i]+1.. and highs m-below[i] downward, where
    // below[i] is the total half-length of the circuits before it.
    Label below = 0;
    for (const auto& circuit : cd.even_circuits) {
        const std::size_t len = circuit.length();
        if (len < 4) throw std::logic_error("even circuit shorter than 4 in a simple graph");
        const auto half = static_cast<Label>(len / 2);
        const auto at = cycle_position_labels(len);
        for (std::size_t p = 0; p < len; ++p) {
            const Label x = at[p];
            lab.label_of[circuit.edge_seq[p]] = x <= half ? below + x : x + m - below - 2 * half;
        }
        below += half;
    }

    const auto m_star = static_cast<Label>(cd.m_star);
    for (const auto& arc : label_disjoint_odd_cycles(cd.odd_cycles, m_star)) {
        for (std::size_t i = 0; i < arc.edges.size(); ++i) lab.label_of[arc.edges[i]] = arc.labels[i];
    }
    return lab;
}

ApproxMagicResult label_approx_magic(const Graph& g) {
    const auto k = static_cast<Label>(require_regular(g));
    const auto n = static_cast<Label>(g.vertex_count());
    const bool connected = g.is_connected();
    if (k % 2 == 1) {
        const DeltaBound bound{n * k / 2 - 1, 1};
        if (connected) return {label_regular_odd(g), "odd-trails", bound};
        return {label_regular_odd_general(g), "odd-trails-general", bound};
    }
    if (connected) return {label_regular_even_connected(g), "even-euler", DeltaBound{k, 1}};
    return {label_regular_even_general(g), "even-circuits-general", DeltaBound{2 * n + 3 * (k - 1), 3}};
}

}  // namespace antimagic
