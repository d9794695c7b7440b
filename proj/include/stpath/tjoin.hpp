#pragma once

#include "stpath/errors.hpp"
#include "stpath/graph.hpp"

#include <span>
#include <utility>
#include <vector>

namespace stpath {

/// Largest point count accepted by min_weight_perfect_matching.
inline constexpr int kMatchingLimit = 20;

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // vertex ids, first < second
  long long weight = 0;
};

/// Exact minimum-weight perfect matching of `points` under `dist`, by dynamic
/// programming over matched subsets (always pairing the lowest unmatched point).
/// Throws std::invalid_argument for an odd count, ScaleLimitError above kMatchingLimit.
Matching min_weight_perfect_matching(std::span<const int> points, const CostMatrix& dist);

struct TJoin {
  EdgeSet edges;
  Matching matching;
};

/// Minimum-cardinality T-join: BFS shortest paths between T vertices, an exact
/// minimum perfect matching on their distances, and the symmetric difference of
/// the matched paths.
TJoin min_tjoin(const Graph& g, const VertexSet& terminals);

}  // namespace stpath
