#include "stpath/gen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace stpath {

namespace {

std::vector<Edge> prufer_tree(int n, std::mt19937_64& rng) {
  if (n == 2) return {{0, 1}};
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = pick(rng);

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[static_cast<std::size_t>(c)];
  std::vector<Edge> edges;
  for (int c : code) {
    int leaf = 0;
    while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    edges.push_back({std::min(leaf, c), std::max(leaf, c)});
    --degree[static_cast<std::size_t>(leaf)];
    --degree[static_cast<std::size_t>(c)];
  }
  int a = -1;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.push_back({a, v});
        break;
      }
    }
  return edges;
}

}  // namespace

Graph gen_random(int n, int m, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_random needs n >= 2");
  const long long max_m = 1LL * n * (n - 1) / 2;
  if (m < n - 1 || m > max_m)
    throw std::invalid_argument("edge count " + std::to_string(m) + " outside [" + std::to_string(n - 1) + ", " +
                                std::to_string(max_m) + "]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges = prufer_tree(n, rng);

  std::vector<std::vector<char>> used(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const auto& e : edges) used[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
  std::vector<Edge> spare;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) spare.push_back({u, v});
  std::shuffle(spare.begin(), spare.end(), rng);
  edges.insert(edges.end(), spare.begin(), spare.begin() + (m - (n - 1)));
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return std::pair{a.u, a.v} < std::pair{b.u, b.v}; });

  std::uniform_int_distribution<int> pick(0, n - 1);
  const int s = pick(rng);
  std::uniform_int_distribution<int> pick_other(0, n - 2);
  int t = pick_other(rng);
  if (t >= s) ++t;
  return Graph(n, std::move(edges), s, t);
}

Graph gen_gap(int k) {
  if (k < 2) throw std::invalid_argument("gap family needs k >= 2 (k = 1 would repeat the s-t edge)");
  const int n = 3 * k - 1;
  std::vector<Edge> edges;
  int next = 2;
  for (int path = 0; path < 3; ++path) {
    int prev = 0;
    for (int step = 1; step < k; ++step) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return Graph(n, std::move(edges), 0, 1);
}

Graph gen_named(std::string_view name) {
  if (name == "p4") return Graph(4, {{0, 1}, {1, 2}, {2, 3}}, 0, 3);
  if (name == "star") return Graph(4, {{1, 0}, {1, 2}, {1, 3}}, 0, 2);
  if (name == "k3") return Graph(3, {{0, 1}, {0, 2}, {1, 2}}, 0, 1);
  if (name == "c5") return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, 0, 2);
  if (name == "edge") return Graph(2, {{0, 1}}, 0, 1);
  throw std::invalid_argument("unknown named instance '" + std::string(name) + "'");
}

}  // namespace stpath
