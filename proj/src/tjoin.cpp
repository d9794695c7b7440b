#include "stpath/tjoin.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace stpath {

Matching min_weight_perfect_matching(std::span<const int> points, const CostMatrix& dist) {
  const int k = static_cast<int>(points.size());
  if (k % 2) throw std::invalid_argument("perfect matching needs an even number of points");
  if (k > kMatchingLimit)
    throw ScaleLimitError("matching supports at most " + std::to_string(kMatchingLimit) + " points");
  Matching result;
  if (k == 0) return result;

  const std::size_t states = std::size_t{1} << k;
  constexpr long long kUnset = std::numeric_limits<long long>::max();
  std::vector<long long> best(states, kUnset);
  std::vector<std::int8_t> partner(states, -1);
  best[0] = 0;
  for (std::size_t mask = 1; mask < states; ++mask) {
    if (std::popcount(mask) % 2) continue;
    const int i = std::countr_zero(mask);
    for (int j = i + 1; j < k; ++j) {
      if (!(mask >> j & 1)) continue;
      const std::size_t rest = mask ^ (std::size_t{1} << i) ^ (std::size_t{1} << j);
      if (best[rest] == kUnset) continue;
      const long long w = best[rest] + dist.at(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
      if (w < best[mask]) {
        best[mask] = w;
        partner[mask] = static_cast<std::int8_t>(j);
      }
    }
  }

  std::size_t mask = states - 1;
  result.weight = best[mask];
  while (mask) {
    const int i = std::countr_zero(mask);
    const int j = partner[mask];
    int a = points[static_cast<std::size_t>(i)];
    int b = points[static_cast<std::size_t>(j)];
    if (a > b) std::swap(a, b);
    result.pairs.emplace_back(a, b);
    mask ^= (std::size_t{1} << i) ^ (std::size_t{1} << j);
  }
  return result;
}

TJoin min_tjoin(const Graph& g, const VertexSet& terminals) {
  if (terminals.size() % 2) throw std::invalid_argument("T-join needs |T| even");
  const auto points = terminals.members();
  TJoin join{EdgeSet(g.m()), {}};
  if (points.empty()) return join;

  CostMatrix dist(g.n());
  std::vector<BfsResult> trees(static_cast<std::size_t>(g.n()));
  for (int a : points) {
    trees[static_cast<std::size_t>(a)] = bfs(g, a);
    for (int b : points) dist.set(a, b, trees[static_cast<std::size_t>(a)].dist[static_cast<std::size_t>(b)]);
  }
  join.matching = min_weight_perfect_matching(points, dist);

  for (const auto& [a, b] : join.matching.pairs) {
    const auto& tree = trees[static_cast<std::size_t>(a)];
    for (int v = b; v != a;) {
      const int e = tree.parent_edge[static_cast<std::size_t>(v)];
      join.edges.toggle(e);
      v = g.edge(e).other(v);
    }
  }

  if (odd_degree_vertices(g, join.edges) != terminals)
    throw std::logic_error("T-join parity check failed");
  if (join.edges.size() > join.matching.weight) throw std::logic_error("T-join larger than its matching");
  return join;
}

}  // namespace stpath
