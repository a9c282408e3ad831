#pragma once

#include <cstdint>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

using Label = std::int64_t;

/// Edge id -> label. A valid labeling of an m-edge graph is a bijection onto
/// 1..m; this type does not enforce that, so files and mutated labelings can
/// still be represented and rejected by the verifier.
struct Labeling {
    std::vector<Label> label_of;

    [[nodiscard]] std::size_t size() const { return label_of.size(); }
    [[nodiscard]] Label operator[](EdgeId e) const { return label_of[e]; }
    [[nodiscard]] bool is_bijection() const;

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

struct SumProfile {
    std::vector<Label> sum_of;
    Label min = 0;
    Label max = 0;

    [[nodiscard]] Label delta() const { return max - min; }
};

/// w(v) for every vertex. OpenMP-parallel over vertices.
/// Throws Error{SizeMismatch} if the labeling is not sized for g.
std::vector<Label> vertex_sums(const Graph& g, const Labeling& lab);

/// Serial edge-scatter reference for vertex_sums; kept for tests and the benchmark.
std::vector<Label> vertex_sums_serial(const Graph& g, const Labeling& lab);

SumProfile sum_profile(const Graph& g, const Labeling& lab);

}  // namespace antimagic
