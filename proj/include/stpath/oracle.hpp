#pragma once

// Brute-force references. Nothing here calls the max-flow, cut-tree, tree-building
// or matching code of the main pipeline.

#include "stpath/errors.hpp"
#include "stpath/fractional.hpp"
#include "stpath/graph.hpp"
#include "stpath/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stpath::oracle {

inline constexpr int kHeldKarpLimit = 18;
inline constexpr int kEnumerateLpLimit = 10;
inline constexpr int kNarrowCutLimit = 12;
inline constexpr int kTJoinEdgeLimit = 18;
inline constexpr int kMatchingPointLimit = 10;
inline constexpr int kTJoinLpLimit = 10;
inline constexpr int kMinCutLimit = 16;

struct OptResult {
  long long cost = 0;
  std::vector<int> order;
};

/// Exact OPT(G): cheapest Hamiltonian s-t path in the metric completion, by DP over
/// (visited subset, last vertex).
OptResult held_karp_opt(const Graph& g);

struct LpResult {
  FractionalSolution x;
  Rational value;
};

/// The relaxation with every partition row and every even-cut row written out
/// explicitly, solved by adding violated rows from that explicit list.
LpResult enumerate_lp(const Graph& g);

/// Every S with s ∈ S, t ∉ S and x(delta(S)) < 2, ordered by size then members.
std::vector<VertexSet> brute_narrow_cuts(const Graph& g, const FractionalSolution& x);

/// Minimum |F| over all edge subsets whose odd-degree set is exactly `terminals`.
int brute_tjoin(const Graph& g, const VertexSet& terminals);

/// Minimum perfect matching weight by enumerating all pairings.
long long brute_matching_weight(std::span<const int> points, const CostMatrix& dist);

/// Optimum of min x(E) s.t. x(delta(S)) >= 1 for every S with |S ∩ T| odd, x >= 0.
Rational tjoin_lp_value(const Graph& g, const VertexSet& terminals);

/// Minimum x(delta(S)) over S containing u but not v.
Rational brute_min_cut(const Graph& g, const FractionalSolution& x, int u, int v);

/// Describes a relaxation row violated by x, or nullopt if x satisfies all of them.
std::optional<std::string> find_relaxation_violation(const Graph& g, const FractionalSolution& x);

}  // namespace stpath::oracle
