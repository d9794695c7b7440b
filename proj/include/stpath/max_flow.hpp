#pragma once

#include "stpath/rational.hpp"

#include <vector>

namespace stpath {

/// Exact undirected max-flow on a dense capacity matrix (shortest augmenting paths).
class MaxFlow {
 public:
  explicit MaxFlow(int n);

  int size() const { return n_; }
  /// Adds capacity c in both directions between u and v.
  void add_undirected(int u, int v, const Rational& c);

  /// Maximum flow value from source to sink. Resets any previous flow.
  Rational solve(int source, int sink);
  /// Vertices reachable from the source in the residual graph of the last solve.
  const std::vector<char>& source_side() const { return reach_; }

 private:
  std::size_t at(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_;
  std::vector<Rational> cap_;
  std::vector<Rational> residual_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<char> reach_;
};

}  // namespace stpath
