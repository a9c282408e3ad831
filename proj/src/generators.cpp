#include "antimagic/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace antimagic {

namespace {

using PairList = std::vector<std::pair<VertexId, VertexId>>;

[[noreturn]] void infeasible(const std::string& what) { throw Error(ErrorCode::InfeasibleParameters, what); }

}  // namespace

Graph cycle_graph(std::size_t n) {
    if (n < 3) infeasible("cycle needs n >= 3");
    PairList pairs;
    for (VertexId i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    return make_graph(n, pairs);
}

Graph complete_graph(std::size_t n) {
    if (n < 2) infeasible("complete graph needs n >= 2");
    PairList pairs;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    return make_graph(n, pairs);
}

Graph path_graph(std::size_t n) {
    if (n < 2) infeasible("path needs n >= 2 vertices");
    PairList pairs;
    for (VertexId i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return make_graph(n, pairs);
}

Graph petersen_graph() {
    PairList pairs;
    for (VertexId i = 0; i < 5; ++i) pairs.emplace_back(i, (i + 1) % 5);
    for (VertexId i = 0; i < 5; ++i) pairs.emplace_back(i, i + 5);
    for (VertexId i = 0; i < 5; ++i) pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
    return make_graph(10, pairs);
}

Graph circulant_graph(std::size_t n, std::span<const std::size_t> offsets) {
    if (n < 2) infeasible("circulant needs n >= 2");
    std::set<std::size_t> classes;
    for (const auto raw : offsets) {
        const std::size_t s = raw % n;
        if (s == 0) infeasible("circulant offset " + std::to_string(raw) + " is 0 mod n");
        const std::size_t cls = std::min(s, n - s);
        if (!classes.insert(cls).second) {
            infeasible("circulant offset " + std::to_string(raw) + " duplicates another offset");
        }
    }
    PairList pairs;
    for (const auto s : classes) {
        const bool diameter = 2 * s == n;
        for (VertexId i = 0; i < n; ++i) {
            if (diameter && i >= s) break;
            pairs.emplace_back(i, (i + s) % n);
        }
    }
    return make_graph(n, pairs);
}

Graph disjoint_union(std::span<const Graph> parts) {
    PairList pairs;
    std::size_t base = 0;
    for (const auto& part : parts) {
        for (const auto& e : part.edges()) pairs.emplace_back(base + e.u, base + e.v);
        base += part.vertex_count();
    }
    return make_graph(base, pairs);
}

Graph copies(const Graph& g, std::size_t count) {
    std::vector<Graph> parts(count, g);
    return disjoint_union(parts);
}

Graph random_regular_graph(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t max_attempts) {
    if (n == 0) infeasible("random regular graph needs n >= 1");
    if (k >= n) infeasible("random regular graph needs k < n");
    if ((n * k) % 2 != 0) infeasible("random regular graph needs nk even");

    std::mt19937_64 rng(seed);
    std::vector<VertexId> stubs;
    stubs.reserve(n * k);
    for (VertexId v = 0; v < n; ++v) stubs.insert(stubs.end(), k, v);

    std::set<std::pair<VertexId, VertexId>> chosen;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        chosen.clear();
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            const VertexId a = std::min(stubs[i], stubs[i + 1]);
            const VertexId b = std::max(stubs[i], stubs[i + 1]);
            simple = a != b && chosen.emplace(a, b).second;
        }
        if (simple) {
            const PairList pairs(chosen.begin(), chosen.end());
            return make_graph(n, pairs);
        }
    }
    throw Error(ErrorCode::RetryBudgetExhausted,
                "no simple " + std::to_string(k) + "-regular sample on " + std::to_string(n) + " vertices after " +
                    std::to_string(max_attempts) + " attempts");
}

}  // namespace antimagic
