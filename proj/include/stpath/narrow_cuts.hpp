#pragma once

#include "stpath/fractional.hpp"
#include "stpath/graph.hpp"
#include "stpath/rational.hpp"

#include <vector>

namespace stpath {

struct CutTreeEdge {
  int u = 0;
  int v = 0;
  Rational weight;
  /// Component of the tree minus this edge that contains u.
  VertexSet side;
};

/// Gomory-Hu cut tree: every tree edge's fundamental cut is a minimum cut between
/// its endpoints, so the minimum u-v cut equals the lightest edge on the tree path.
class GomoryHuTree {
 public:
  GomoryHuTree(int n, std::vector<CutTreeEdge> edges);

  int n() const { return n_; }
  const std::vector<CutTreeEdge>& edges() const { return edges_; }
  /// Indices into edges() along the tree path from u to v.
  std::vector<int> path(int u, int v) const;
  /// Minimum edge weight on the tree path (the min u-v cut value).
  Rational min_cut_value(int u, int v) const;

 private:
  int n_;
  std::vector<CutTreeEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;  // (neighbor, edge index)
};

/// Classic contraction-based construction with n - 1 exact max-flows.
/// Throws std::logic_error when the support of x is disconnected.
GomoryHuTree gomory_hu_tree(const Graph& g, const FractionalSolution& x);

/// Nested s-side cuts S_1 ⊊ ... ⊊ S_k with x(delta(S_i)) < 2 and their levels
/// L_i = S_i \ S_{i-1}, i = 1..k+1 (S_0 = ∅, S_{k+1} = V).
struct NarrowCutChain {
  std::vector<VertexSet> cuts;
  std::vector<VertexSet> levels;

  int k() const { return static_cast<int>(cuts.size()); }
};

/// Builds the chain from one vertex set per level; k may be 0.
NarrowCutChain chain_from_cuts(int n, std::vector<VertexSet> cuts);

/// Narrow cuts are read off the tree edges on the s-t tree path. Throws std::logic_error
/// if the recovered cuts are not strictly nested.
NarrowCutChain extract_narrow_cuts(const Graph& g, const GomoryHuTree& tree, const FractionalSolution& x);

}  // namespace stpath
