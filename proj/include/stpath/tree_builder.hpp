#pragma once

#include "stpath/fractional.hpp"
#include "stpath/graph.hpp"
#include "stpath/narrow_cuts.hpp"

#include <vector>

namespace stpath {

/// Subgraph of G on the edges with positive x, with its edge indices mapped back to G.
struct SupportGraph {
  Graph graph;
  std::vector<int> parent_edge;
};

SupportGraph support_graph(const Graph& g, const FractionalSolution& x);

/// J = (∪ J_i) ∪ E_b as edge sets of G.
struct SpanningTree {
  EdgeSet edges;
  std::vector<EdgeSet> level_trees;  // J_1 .. J_{k+1}; empty when the fallback tree is used
  std::vector<int> connectors;       // e_1 .. e_k as G edge indices
  bool fallback = false;             // no narrow cuts: BFS tree of G from s
};

/// Spanning tree on each level's support subgraph plus one connector between
/// consecutive levels. Level trees grow by BFS from the level's smallest vertex;
/// e_i is the lexicographically smallest support edge (u, v) with u ∈ L_i, v ∈ L_{i+1}.
/// Throws std::logic_error if a level is disconnected in H or has no connector.
SpanningTree build_tree(const Graph& g, const SupportGraph& h, const NarrowCutChain& chain);

/// Vertices whose J-degree parity is wrong: even at s or t, odd elsewhere.
VertexSet wrong_degree_set(const Graph& g, const EdgeSet& tree);

/// Whether H restricted to `vertices` is connected (an empty set counts as connected).
bool induced_connected(const SupportGraph& h, const VertexSet& vertices);

}  // namespace stpath
