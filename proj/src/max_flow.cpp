#include "stpath/max_flow.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace stpath {

MaxFlow::MaxFlow(int n)
    : n_(n),
      cap_(static_cast<std::size_t>(n) * n),
      neighbors_(static_cast<std::size_t>(n)) {}

void MaxFlow::add_undirected(int u, int v, const Rational& c) {
  if (u == v || c == 0) return;
  if (c < 0) throw std::invalid_argument("negative capacity");
  if (cap_[at(u, v)] == 0) {
    neighbors_[static_cast<std::size_t>(u)].push_back(v);
    neighbors_[static_cast<std::size_t>(v)].push_back(u);
    std::sort(neighbors_[static_cast<std::size_t>(u)].begin(), neighbors_[static_cast<std::size_t>(u)].end());
    std::sort(neighbors_[static_cast<std::size_t>(v)].begin(), neighbors_[static_cast<std::size_t>(v)].end());
  }
  cap_[at(u, v)] += c;
  cap_[at(v, u)] += c;
}

Rational MaxFlow::solve(int source, int sink) {
  if (source == sink) throw std::invalid_argument("source equals sink");
  residual_ = cap_;
  Rational flow;
  std::vector<int> parent(static_cast<std::size_t>(n_));
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[static_cast<std::size_t>(sink)] == -1) {
      const int u = q.front();
      q.pop();
      for (int v : neighbors_[static_cast<std::size_t>(u)]) {
        if (parent[static_cast<std::size_t>(v)] != -1 || residual_[at(u, v)] <= 0) continue;
        parent[static_cast<std::size_t>(v)] = u;
        q.push(v);
      }
    }
    if (parent[static_cast<std::size_t>(sink)] == -1) break;

    Rational bottleneck = residual_[at(parent[static_cast<std::size_t>(sink)], sink)];
    for (int v = sink; v != source; v = parent[static_cast<std::size_t>(v)]) {
      const int u = parent[static_cast<std::size_t>(v)];
      if (residual_[at(u, v)] < bottleneck) bottleneck = residual_[at(u, v)];
    }
    for (int v = sink; v != source; v = parent[static_cast<std::size_t>(v)]) {
      const int u = parent[static_cast<std::size_t>(v)];
      residual_[at(u, v)] -= bottleneck;
      residual_[at(v, u)] += bottleneck;
    }
    flow += bottleneck;
  }

  reach_.assign(static_cast<std::size_t>(n_), 0);
  for (int v = 0; v < n_; ++v) reach_[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(v)] != -1;
  return flow;
}

}  // namespace stpath
