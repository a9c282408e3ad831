#pragma once

#include <optional>

#include "antimagic/labeling.hpp"

namespace antimagic {

inline constexpr std::size_t kDefaultAntimagicSearchEdges = 10;
inline constexpr std::size_t kDefaultMinDeltaSearchEdges = 8;

enum class SearchStatus { Found, NotAntimagic };

struct AntimagicSearchResult {
    SearchStatus status = SearchStatus::NotAntimagic;
    std::optional<Labeling> labeling;  // set iff Found
};

// Exhaustive searches over all m! labelings of small graphs. Labels are
// assigned edge by edge in id order, smallest label first; a branch dies as
// soon as two fully-labeled vertices have equal sums. The first hit is
// therefore the lexicographically smallest antimagic labeling.
//
// The plain versions split the search over the label of edge 0 with OpenMP
// and keep the lowest successful subtree, so they return exactly what the
// _serial reference returns. All throw Error{BudgetExceeded} if the graph
// has more than max_edges edges.

AntimagicSearchResult brute_force_antimagic(const Graph& g, std::size_t max_edges = kDefaultAntimagicSearchEdges);
AntimagicSearchResult brute_force_antimagic_serial(const Graph& g,
                                                   std::size_t max_edges = kDefaultAntimagicSearchEdges);

/// Minimum of (max vertex sum - min vertex sum) over all bijective labelings.
Label brute_force_min_delta(const Graph& g, std::size_t max_edges = kDefaultMinDeltaSearchEdges);
Label brute_force_min_delta_serial(const Graph& g, std::size_t max_edges = kDefaultMinDeltaSearchEdges);

}  // namespace antimagic
