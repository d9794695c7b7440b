#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stpath {

/// Raised for malformed or invalid graph input.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  int u = 0;
  int v = 0;

  int other(int w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  int neighbor = 0;
  int edge = 0;
};

/// Subset of the vertex range 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : in_(static_cast<std::size_t>(n), 0) {}
  VertexSet(int n, std::initializer_list<int> members);
  static VertexSet from_members(int n, std::span<const int> members);
  static VertexSet full(int n);

  int universe() const { return static_cast<int>(in_.size()); }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(int v) const { return in_[static_cast<std::size_t>(v)] != 0; }

  void insert(int v);
  void erase(int v);

  std::vector<int> members() const;
  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.in_ == b.in_; }
  /// Lexicographic order on the sorted member lists.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

 private:
  std::vector<std::uint8_t> in_;
  int count_ = 0;
};

/// Edge indices of a Graph with multiplicity 0, 1 or 2 (a sub-multigraph of 2G).
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int m) : mult_(static_cast<std::size_t>(m), 0) {}

  int universe() const { return static_cast<int>(mult_.size()); }
  int multiplicity(int e) const { return mult_.at(static_cast<std::size_t>(e)); }
  bool contains(int e) const { return multiplicity(e) > 0; }
  /// Total multiplicity.
  int size() const { return total_; }
  bool empty() const { return total_ == 0; }

  void add(int e, int times = 1);
  void remove(int e);
  /// Toggle membership of a simple set (used for symmetric differences).
  void toggle(int e);

  /// Distinct edges present, in increasing index order.
  std::vector<int> indices() const;
  /// Number of distinct edges shared with `other`, counting multiplicity of this set.
  int count_in(const EdgeSet& other) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<std::uint8_t> mult_;
  int total_ = 0;
};

/// Simple connected undirected graph with unit edge costs and terminals s != t.
class Graph {
 public:
  /// Validates simplicity, index ranges, s != t and connectivity.
  Graph(int n, std::vector<Edge> edges, int s, int t);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  int s() const { return s_; }
  int t() const { return t_; }
  bool is_terminal(int v) const { return v == s_ || v == t_; }

  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  /// Incident edges of v, sorted by neighbor index.
  std::span<const Incidence> incident(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  /// Edge index joining u and v, or -1.
  int find_edge(int u, int v) const;

  /// Edge-list text form accepted by parse_graph.
  std::string to_text() const;

 private:
  int n_;
  int s_;
  int t_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

/// Pairwise-disjoint nonempty blocks covering the vertex range.
class Partition {
 public:
  Partition(int n, std::vector<std::vector<int>> blocks);
  /// Builds from a block label per vertex (labels need not be contiguous).
  static Partition from_labels(std::span<const int> labels);

  int universe() const { return static_cast<int>(block_of_.size()); }
  int size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int v) const { return block_of_[static_cast<std::size_t>(v)]; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

/// All-pairs unit-cost shortest-path distances (metric completion).
class CostMatrix {
 public:
  explicit CostMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}
  int n() const { return n_; }
  int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  void set(int u, int v, int value) {
    d_[static_cast<std::size_t>(u) * n_ + v] = value;
    d_[static_cast<std::size_t>(v) * n_ + u] = value;
  }

 private:
  int n_;
  std::vector<int> d_;
};

/// Walk from s to t in a multigraph; edges[i] joins vertices[i] and vertices[i+1].
struct Trail {
  std::vector<int> vertices;
  std::vector<int> edges;

  int length() const { return static_cast<int>(edges.size()); }
};

struct HamiltonianPath {
  std::vector<int> order;
  long long cost = 0;
};

Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

EdgeSet cut_edges(const Graph& g, const VertexSet& side);
EdgeSet partition_cut(const Graph& g, const Partition& partition);

CostMatrix metric_completion(const Graph& g);

/// Breadth-first distances from `source`, exploring neighbors in increasing order.
/// `parent_edge[v]` is the edge used to reach v (-1 for the source).
struct BfsResult {
  std::vector<int> dist;
  std::vector<int> parent_edge;
};
BfsResult bfs(const Graph& g, int source);

/// Vertices that the multigraph `mg` touches, and whether (V, mg) is connected.
bool is_connected_spanning(const Graph& g, const EdgeSet& mg);
/// Odd-degree vertices of (V, mg), counting multiplicities.
VertexSet odd_degree_vertices(const Graph& g, const EdgeSet& mg);

/// Hierholzer trail from s to t that uses every edge of `mg` exactly its multiplicity.
Trail eulerian_trail(const Graph& g, const EdgeSet& mg, int s, int t);

/// Keeps the first occurrence of each vertex; t is kept only at the end.
HamiltonianPath shortcut(const Trail& trail, const CostMatrix& cost, int s, int t);

}  // namespace stpath
