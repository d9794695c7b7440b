#include "stpath/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace stpath {

VertexSet::VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::from_members(int n, std::span<const int> members) {
  VertexSet s(n);
  for (int v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(int n) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe()) throw std::out_of_range("vertex index out of range");
  auto& slot = in_[static_cast<std::size_t>(v)];
  if (!slot) {
    slot = 1;
    ++count_;
  }
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe()) throw std::out_of_range("vertex index out of range");
  auto& slot = in_[static_cast<std::size_t>(v)];
  if (slot) {
    slot = 0;
    --count_;
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (int v = 0; v < universe(); ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet c(universe());
  for (int v = 0; v < universe(); ++v)
    if (!contains(v)) c.insert(v);
  return c;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (int v = 0; v < universe(); ++v)
    if (contains(v) && !other.contains(v)) return false;
  return true;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

void EdgeSet::add(int e, int times) {
  auto& slot = mult_.at(static_cast<std::size_t>(e));
  if (times < 0 || slot + times > 2) throw std::logic_error("edge multiplicity exceeds 2");
  slot = static_cast<std::uint8_t>(slot + times);
  total_ += times;
}

void EdgeSet::remove(int e) {
  auto& slot = mult_.at(static_cast<std::size_t>(e));
  total_ -= slot;
  slot = 0;
}

void EdgeSet::toggle(int e) {
  if (contains(e))
    remove(e);
  else
    add(e);
}

std::vector<int> EdgeSet::indices() const {
  std::vector<int> out;
  for (int e = 0; e < universe(); ++e)
    if (mult_[static_cast<std::size_t>(e)]) out.push_back(e);
  return out;
}

int EdgeSet::count_in(const EdgeSet& other) const {
  int c = 0;
  for (int e = 0; e < universe(); ++e)
    if (other.contains(e)) c += multiplicity(e);
  return c;
}

Graph::Graph(int n, std::vector<Edge> edges, int s, int t)
    : n_(n), s_(s), t_(t), edges_(std::move(edges)) {
  if (n < 2) throw GraphError("graph needs at least two vertices");
  if (s < 0 || s >= n || t < 0 || t >= n) throw GraphError("terminal index out of range");
  if (s == t) throw GraphError("terminals s and t must differ");

  adj_.assign(static_cast<std::size_t>(n), {});
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < m(); ++e) {
    const auto [u, v] = edges_[static_cast<std::size_t>(e)];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError("edge " + std::to_string(e) + ": vertex index out of range");
    if (u == v) throw GraphError("edge " + std::to_string(e) + ": self-loop at " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    adj_[static_cast<std::size_t>(u)].push_back({v, e});
    adj_[static_cast<std::size_t>(v)].push_back({u, e});
  }
  for (auto& list : adj_)
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });

  const auto reach = bfs(*this, 0).dist;
  if (std::find(reach.begin(), reach.end(), -1) != reach.end())
    throw GraphError("graph is disconnected");
}

int Graph::find_edge(int u, int v) const {
  for (const auto& inc : incident(u))
    if (inc.neighbor == v) return inc.edge;
  return -1;
}

std::string Graph::to_text() const {
  std::ostringstream out;
  out << n_ << ' ' << m() << ' ' << s_ << ' ' << t_ << '\n';
  for (const auto& e : edges_) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw GraphError("missing header line \"n m s t\"");

  auto read_ints = [](const std::string& l, std::size_t want, const std::string& what) {
    std::istringstream ls(l);
    std::vector<long long> vals;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw GraphError("malformed " + what + ": '" + l + "'");
      }
      if (used != tok.size()) throw GraphError("malformed " + what + ": '" + l + "'");
      vals.push_back(v);
    }
    if (vals.size() != want) throw GraphError("malformed " + what + ": '" + l + "'");
    return vals;
  };

  const auto header = read_ints(lines[0], 4, "header");
  const long long n = header[0];
  const long long m = header[1];
  if (n < 2 || n > 1'000'000) throw GraphError("vertex count out of range");
  if (m < 0) throw GraphError("negative edge count");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw GraphError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string(lines.size() - 1) + " edge lines follow");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto uv = read_ints(lines[i], 2, "edge line");
    if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
      throw GraphError("vertex index out of range in '" + lines[i] + "'");
    edges.push_back({static_cast<int>(uv[0]), static_cast<int>(uv[1])});
  }
  const long long s = header[2];
  const long long t = header[3];
  if (s < 0 || s >= n || t < 0 || t >= n) throw GraphError("terminal index out of range");
  return Graph(static_cast<int>(n), std::move(edges), static_cast<int>(s), static_cast<int>(t));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

EdgeSet cut_edges(const Graph& g, const VertexSet& side) {
  if (side.universe() != g.n()) throw std::invalid_argument("vertex set universe mismatch");
  if (side.empty() || side.size() == g.n())
    throw std::invalid_argument("cut side must be a proper nonempty subset");
  EdgeSet out(g.m());
  for (int e = 0; e < g.m(); ++e)
    if (side.contains(g.edge(e).u) != side.contains(g.edge(e).v)) out.add(e);
  return out;
}

EdgeSet partition_cut(const Graph& g, const Partition& partition) {
  if (partition.universe() != g.n()) throw std::invalid_argument("partition universe mismatch");
  EdgeSet out(g.m());
  for (int e = 0; e < g.m(); ++e)
    if (partition.block_of(g.edge(e).u) != partition.block_of(g.edge(e).v)) out.add(e);
  return out;
}

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)), block_of_(static_cast<std::size_t>(n), -1) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw std::invalid_argument("partition has an empty block");
    for (int v : blocks_[b]) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
      if (block_of_[static_cast<std::size_t>(v)] != -1)
        throw std::invalid_argument("partition blocks overlap at vertex " + std::to_string(v));
      block_of_[static_cast<std::size_t>(v)] = static_cast<int>(b);
    }
    std::sort(blocks_[b].begin(), blocks_[b].end());
  }
  if (std::find(block_of_.begin(), block_of_.end(), -1) != block_of_.end())
    throw std::invalid_argument("partition does not cover every vertex");
}

Partition Partition::from_labels(std::span<const int> labels) {
  std::vector<std::vector<int>> blocks;
  std::vector<std::pair<int, int>> label_to_block;
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
    auto it = std::find_if(label_to_block.begin(), label_to_block.end(),
                           [&](const auto& p) { return p.first == labels[static_cast<std::size_t>(v)]; });
    if (it == label_to_block.end()) {
      label_to_block.emplace_back(labels[static_cast<std::size_t>(v)], static_cast<int>(blocks.size()));
      blocks.push_back({v});
    } else {
      blocks[static_cast<std::size_t>(it->second)].push_back(v);
    }
  }
  return Partition(static_cast<int>(labels.size()), std::move(blocks));
}

BfsResult bfs(const Graph& g, int source) {
  BfsResult r{std::vector<int>(static_cast<std::size_t>(g.n()), -1),
              std::vector<int>(static_cast<std::size_t>(g.n()), -1)};
  std::queue<int> q;
  r.dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (const auto& inc : g.incident(v)) {
      auto& d = r.dist[static_cast<std::size_t>(inc.neighbor)];
      if (d != -1) continue;
      d = r.dist[static_cast<std::size_t>(v)] + 1;
      r.parent_edge[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
      q.push(inc.neighbor);
    }
  }
  return r;
}

CostMatrix metric_completion(const Graph& g) {
  CostMatrix c(g.n());
  for (int u = 0; u < g.n(); ++u) {
    const auto r = bfs(g, u);
    for (int v = u + 1; v < g.n(); ++v) c.set(u, v, r.dist[static_cast<std::size_t>(v)]);
  }
  return c;
}

bool is_connected_spanning(const Graph& g, const EdgeSet& mg) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(v)) {
      if (!mg.contains(inc.edge) || seen[static_cast<std::size_t>(inc.neighbor)]) continue;
      seen[static_cast<std::size_t>(inc.neighbor)] = 1;
      ++reached;
      stack.push_back(inc.neighbor);
    }
  }
  return reached == g.n();
}

VertexSet odd_degree_vertices(const Graph& g, const EdgeSet& mg) {
  std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
  for (int e = 0; e < g.m(); ++e) {
    deg[static_cast<std::size_t>(g.edge(e).u)] += mg.multiplicity(e);
    deg[static_cast<std::size_t>(g.edge(e).v)] += mg.multiplicity(e);
  }
  VertexSet odd(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (deg[static_cast<std::size_t>(v)] % 2) odd.insert(v);
  return odd;
}

Trail eulerian_trail(const Graph& g, const EdgeSet& mg, int s, int t) {
  if (s == t) throw std::logic_error("eulerian_trail: s and t must differ");
  if (mg.universe() != g.m()) throw std::logic_error("eulerian_trail: edge set universe mismatch");
  if (odd_degree_vertices(g, mg) != VertexSet(g.n(), {s, t}))
    throw std::logic_error("eulerian_trail: odd-degree set is not exactly {s, t}");
  if (!is_connected_spanning(g, mg))
    throw std::logic_error("eulerian_trail: multigraph is not connected and spanning");

  std::vector<int> remaining(static_cast<std::size_t>(g.m()));
  for (int e = 0; e < g.m(); ++e) remaining[static_cast<std::size_t>(e)] = mg.multiplicity(e);
  std::vector<std::size_t> cursor(static_cast<std::size_t>(g.n()), 0);

  // Stack of (vertex, edge used to enter it).
  std::vector<std::pair<int, int>> stack{{s, -1}};
  std::vector<std::pair<int, int>> out;
  while (!stack.empty()) {
    const int v = stack.back().first;
    const auto inc = g.incident(v);
    auto& c = cursor[static_cast<std::size_t>(v)];
    while (c < inc.size() && remaining[static_cast<std::size_t>(inc[c].edge)] == 0) ++c;
    if (c == inc.size()) {
      out.push_back(stack.back());
      stack.pop_back();
      continue;
    }
    --remaining[static_cast<std::size_t>(inc[c].edge)];
    stack.emplace_back(inc[c].neighbor, inc[c].edge);
  }

  std::reverse(out.begin(), out.end());
  Trail trail;
  for (std::size_t i = 0; i < out.size(); ++i) {
    trail.vertices.push_back(out[i].first);
    if (i > 0) trail.edges.push_back(out[i].second);
  }
  if (trail.length() != mg.size() || trail.vertices.back() != t)
    throw std::logic_error("eulerian_trail: construction did not consume every edge");
  return trail;
}

HamiltonianPath shortcut(const Trail& trail, const CostMatrix& cost, int s, int t) {
  const int n = cost.n();
  if (trail.vertices.empty() || trail.vertices.front() != s || trail.vertices.back() != t)
    throw std::invalid_argument("shortcut: trail must start at s and end at t");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  HamiltonianPath path;
  for (std::size_t i = 0; i + 1 < trail.vertices.size(); ++i) {
    const int v = trail.vertices[i];
    if (v == t || seen[static_cast<std::size_t>(v)]) continue;
    seen[static_cast<std::size_t>(v)] = 1;
    path.order.push_back(v);
  }
  path.order.push_back(t);
  if (static_cast<int>(path.order.size()) != n)
    throw std::invalid_argument("shortcut: trail does not visit every vertex");
  for (std::size_t i = 0; i + 1 < path.order.size(); ++i)
    path.cost += cost.at(path.order[i], path.order[i + 1]);
  return path;
}

}  // namespace stpath
