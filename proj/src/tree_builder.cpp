#include "stpath/tree_builder.hpp"

#include <queue>
#include <stdexcept>

namespace stpath {

SupportGraph support_graph(const Graph& g, const FractionalSolution& x) {
  if (x.size() != g.m()) throw std::invalid_argument("solution size does not match edge count");
  std::vector<Edge> edges;
  std::vector<int> parent;
  for (int e = 0; e < g.m(); ++e) {
    if (x[e] <= 0) continue;
    edges.push_back(g.edge(e));
    parent.push_back(e);
  }
  return {Graph(g.n(), std::move(edges), g.s(), g.t()), std::move(parent)};
}

bool induced_connected(const SupportGraph& h, const VertexSet& vertices) {
  const auto members = vertices.members();
  if (members.empty()) return true;
  VertexSet seen(h.graph.n());
  std::vector<int> stack{members.front()};
  seen.insert(members.front());
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& inc : h.graph.incident(v)) {
      if (!vertices.contains(inc.neighbor) || seen.contains(inc.neighbor)) continue;
      seen.insert(inc.neighbor);
      stack.push_back(inc.neighbor);
    }
  }
  return seen.size() == vertices.size();
}

namespace {

EdgeSet bfs_tree(const Graph& graph, const std::vector<int>& to_g, int g_edges, const VertexSet& within, int root) {
  EdgeSet tree(g_edges);
  VertexSet seen(graph.n());
  std::queue<int> q;
  q.push(root);
  seen.insert(root);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (const auto& inc : graph.incident(v)) {
      if (!within.contains(inc.neighbor) || seen.contains(inc.neighbor)) continue;
      seen.insert(inc.neighbor);
      tree.add(to_g[static_cast<std::size_t>(inc.edge)]);
      q.push(inc.neighbor);
    }
  }
  if (seen.size() != within.size()) throw std::logic_error("level is disconnected in the support graph");
  return tree;
}

}  // namespace

SpanningTree build_tree(const Graph& g, const SupportGraph& h, const NarrowCutChain& chain) {
  SpanningTree j;
  j.edges = EdgeSet(g.m());

  if (chain.k() == 0) {
    std::vector<int> identity(static_cast<std::size_t>(g.m()));
    for (int e = 0; e < g.m(); ++e) identity[static_cast<std::size_t>(e)] = e;
    j.edges = bfs_tree(g, identity, g.m(), VertexSet::full(g.n()), g.s());
    j.fallback = true;
    return j;
  }

  for (const auto& level : chain.levels) {
    const EdgeSet ji = bfs_tree(h.graph, h.parent_edge, g.m(), level, level.members().front());
    for (int e : ji.indices()) j.edges.add(e);
    j.level_trees.push_back(ji);
  }

  for (int i = 0; i + 1 < static_cast<int>(chain.levels.size()); ++i) {
    const auto& here = chain.levels[static_cast<std::size_t>(i)];
    const auto& next = chain.levels[static_cast<std::size_t>(i + 1)];
    int chosen = -1;
    std::pair<int, int> key{g.n(), g.n()};
    for (int he = 0; he < h.graph.m(); ++he) {
      auto [u, v] = h.graph.edge(he);
      if (here.contains(v) && next.contains(u)) std::swap(u, v);
      if (!here.contains(u) || !next.contains(v)) continue;
      if (std::pair{u, v} < key) {
        key = {u, v};
        chosen = h.parent_edge[static_cast<std::size_t>(he)];
      }
    }
    if (chosen < 0)
      throw std::logic_error("no support edge joins level " + std::to_string(i + 1) + " to level " +
                             std::to_string(i + 2));
    j.edges.add(chosen);
    j.connectors.push_back(chosen);
  }

  if (j.edges.size() != g.n() - 1 || !is_connected_spanning(g, j.edges))
    throw std::logic_error("level trees and connectors do not form a spanning tree");
  return j;
}

VertexSet wrong_degree_set(const Graph& g, const EdgeSet& tree) {
  const VertexSet odd = odd_degree_vertices(g, tree);
  VertexSet wrong(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (odd.contains(v) != g.is_terminal(v)) wrong.insert(v);
  return wrong;
}

}  // namespace stpath
