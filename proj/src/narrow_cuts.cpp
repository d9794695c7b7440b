#include "stpath/narrow_cuts.hpp"

#include "stpath/max_flow.hpp"

#include <algorithm>
#include <stdexcept>

namespace stpath {

GomoryHuTree::GomoryHuTree(int n, std::vector<CutTreeEdge> edges)
    : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(n)) {
  if (static_cast<int>(edges_.size()) != n - 1) throw std::invalid_argument("cut tree needs n - 1 edges");
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    adj_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(i)].u)].emplace_back(edges_[static_cast<std::size_t>(i)].v, i);
    adj_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(i)].v)].emplace_back(edges_[static_cast<std::size_t>(i)].u, i);
  }
}

std::vector<int> GomoryHuTree::path(int u, int v) const {
  std::vector<int> via(static_cast<std::size_t>(n_), -2);
  std::vector<int> from(static_cast<std::size_t>(n_), -1);
  std::vector<int> stack{u};
  via[static_cast<std::size_t>(u)] = -1;
  while (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    for (const auto& [b, e] : adj_[static_cast<std::size_t>(a)]) {
      if (via[static_cast<std::size_t>(b)] != -2) continue;
      via[static_cast<std::size_t>(b)] = e;
      from[static_cast<std::size_t>(b)] = a;
      stack.push_back(b);
    }
  }
  if (via[static_cast<std::size_t>(v)] == -2) throw std::logic_error("cut tree is disconnected");
  std::vector<int> out;
  for (int w = v; w != u; w = from[static_cast<std::size_t>(w)]) out.push_back(via[static_cast<std::size_t>(w)]);
  std::reverse(out.begin(), out.end());
  return out;
}

Rational GomoryHuTree::min_cut_value(int u, int v) const {
  const auto p = path(u, v);
  if (p.empty()) throw std::invalid_argument("min_cut_value needs distinct vertices");
  Rational best = edges_[static_cast<std::size_t>(p.front())].weight;
  for (int e : p) best = std::min(best, edges_[static_cast<std::size_t>(e)].weight);
  return best;
}

namespace {

bool support_connected(const Graph& g, const FractionalSolution& x) {
  EdgeSet support(g.m());
  for (int e = 0; e < g.m(); ++e)
    if (x[e] > 0) support.add(e);
  return is_connected_spanning(g, support);
}

}  // namespace

GomoryHuTree gomory_hu_tree(const Graph& g, const FractionalSolution& x) {
  if (x.size() != g.m()) throw std::invalid_argument("solution size does not match edge count");
  if (!support_connected(g, x)) throw std::logic_error("support of x is disconnected");
  const int n = g.n();

  struct SuperEdge {
    int a;
    int b;
    Rational weight;
  };
  std::vector<std::vector<int>> super{{}};
  for (int v = 0; v < n; ++v) super[0].push_back(v);
  std::vector<SuperEdge> tree;

  for (;;) {
    int split = -1;
    for (int i = 0; i < static_cast<int>(super.size()); ++i)
      if (super[static_cast<std::size_t>(i)].size() >= 2) {
        split = i;
        break;
      }
    if (split < 0) break;
    const auto members = super[static_cast<std::size_t>(split)];

    // Label each supernode by the component of (tree - split) it lies in.
    std::vector<int> comp(super.size(), -1);
    int comps = 0;
    for (const auto& te : tree) {
      if (te.a != split && te.b != split) continue;
      const int root = te.a == split ? te.b : te.a;
      std::vector<int> stack{root};
      comp[static_cast<std::size_t>(root)] = comps;
      while (!stack.empty()) {
        const int y = stack.back();
        stack.pop_back();
        for (const auto& other : tree) {
          int z = -1;
          if (other.a == y) z = other.b;
          if (other.b == y) z = other.a;
          if (z < 0 || z == split || comp[static_cast<std::size_t>(z)] != -1) continue;
          comp[static_cast<std::size_t>(z)] = comps;
          stack.push_back(z);
        }
      }
      ++comps;
    }

    const int width = static_cast<int>(members.size());
    std::vector<int> node_of(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < width; ++i) node_of[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] = i;
    for (std::size_t y = 0; y < super.size(); ++y)
      if (static_cast<int>(y) != split)
        for (int v : super[y]) node_of[static_cast<std::size_t>(v)] = width + comp[y];

    MaxFlow net(width + comps);
    for (int e = 0; e < g.m(); ++e)
      if (x[e] > 0)
        net.add_undirected(node_of[static_cast<std::size_t>(g.edge(e).u)], node_of[static_cast<std::size_t>(g.edge(e).v)], x[e]);
    Rational value = net.solve(0, 1);
    const auto& reach = net.source_side();

    std::vector<int> keep;
    std::vector<int> moved;
    for (int i = 0; i < width; ++i)
      (reach[static_cast<std::size_t>(i)] ? keep : moved).push_back(members[static_cast<std::size_t>(i)]);
    const int fresh = static_cast<int>(super.size());
    super[static_cast<std::size_t>(split)] = keep;
    super.push_back(moved);

    for (auto& te : tree) {
      if (te.a != split && te.b != split) continue;
      const int other = te.a == split ? te.b : te.a;
      if (!reach[static_cast<std::size_t>(width + comp[static_cast<std::size_t>(other)])]) {
        if (te.a == split)
          te.a = fresh;
        else
          te.b = fresh;
      }
    }
    tree.push_back({split, fresh, std::move(value)});
  }

  std::vector<CutTreeEdge> edges;
  edges.reserve(tree.size());
  for (const auto& te : tree)
    edges.push_back({super[static_cast<std::size_t>(te.a)].front(), super[static_cast<std::size_t>(te.b)].front(), te.weight,
                     VertexSet(n)});

  // Fundamental cut sides.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& side = edges[i].side;
    std::vector<int> stack{edges[i].u};
    side.insert(edges[i].u);
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < edges.size(); ++j) {
        if (j == i) continue;
        int b = -1;
        if (edges[j].u == a) b = edges[j].v;
        if (edges[j].v == a) b = edges[j].u;
        if (b < 0 || side.contains(b)) continue;
        side.insert(b);
        stack.push_back(b);
      }
    }
  }
  return GomoryHuTree(n, std::move(edges));
}

NarrowCutChain chain_from_cuts(int n, std::vector<VertexSet> cuts) {
  NarrowCutChain chain;
  chain.cuts = std::move(cuts);
  VertexSet previous(n);
  for (int i = 0; i <= chain.k(); ++i) {
    const VertexSet current = i < chain.k() ? chain.cuts[static_cast<std::size_t>(i)] : VertexSet::full(n);
    if (!previous.is_subset_of(current) || previous.size() >= current.size())
      throw std::logic_error("narrow cuts are not strictly nested");
    VertexSet level(n);
    for (int v = 0; v < n; ++v)
      if (current.contains(v) && !previous.contains(v)) level.insert(v);
    chain.levels.push_back(std::move(level));
    previous = current;
  }
  return chain;
}

NarrowCutChain extract_narrow_cuts(const Graph& g, const GomoryHuTree& tree, const FractionalSolution& x) {
  std::vector<VertexSet> cuts;
  for (int e : tree.path(g.s(), g.t())) {
    const auto& te = tree.edges()[static_cast<std::size_t>(e)];
    VertexSet side = te.side.contains(g.s()) ? te.side : te.side.complement();
    const Rational value = x.cut_value(g, side);
    if (value != te.weight) throw std::logic_error("cut tree weight disagrees with its fundamental cut");
    if (value < 2) cuts.push_back(std::move(side));
  }
  std::sort(cuts.begin(), cuts.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  for (const auto& c : cuts)
    if (!c.contains(g.s()) || c.contains(g.t())) throw std::logic_error("narrow cut does not separate s from t");
  return chain_from_cuts(g.n(), std::move(cuts));
}

}  // namespace stpath
