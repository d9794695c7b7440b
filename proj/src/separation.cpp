#include "stpath/separation.hpp"

#include "stpath/max_flow.hpp"
#include "stpath/rational_lp.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <limits>

namespace stpath {

namespace {

// ---------------------------------------------------------------------------
// Even cuts: contract t into s and take a minimum v-s cut for every other v.
// ---------------------------------------------------------------------------

MaxFlow contracted_network(const Graph& g, const FractionalSolution& x) {
  MaxFlow net(g.n());
  for (int e = 0; e < g.m(); ++e) {
    int u = g.edge(e).u;
    int v = g.edge(e).v;
    if (u == g.t()) u = g.s();
    if (v == g.t()) v = g.s();
    net.add_undirected(u, v, x[e]);
  }
  return net;
}

struct CutCandidate {
  Rational value;
  VertexSet side;
};

bool better(const CutCandidate& a, const CutCandidate& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.side < b.side;
}

std::optional<CutCandidate> min_cut_from(MaxFlow& net, int v, int sink) {
  Rational value = net.solve(v, sink);
  if (value >= 2) return std::nullopt;
  VertexSet side(net.size());
  const auto& reach = net.source_side();
  for (int w = 0; w < net.size(); ++w)
    if (reach[static_cast<std::size_t>(w)]) side.insert(w);
  return CutCandidate{std::move(value), std::move(side)};
}

std::optional<ViolatedConstraint> to_even_violation(const Graph& g, const FractionalSolution& x,
                                                    std::optional<CutCandidate> best) {
  if (!best) return std::nullopt;
  ViolatedConstraint vc;
  vc.kind = ConstraintKind::even_cut;
  vc.lhs = x.cut_value(g, best->side);
  if (vc.lhs != best->value) throw std::logic_error("max-flow value disagrees with its cut");
  vc.rhs = 2;
  vc.cut = std::move(best->side);
  return vc;
}

// ---------------------------------------------------------------------------
// Partitions: depth-first enumeration of restricted-growth strings with x scaled
// to integers over a common denominator.
// ---------------------------------------------------------------------------

template <class Int>
struct ScaledWeights {
  Int unit;                                             // the common denominator
  std::vector<std::vector<std::pair<int, Int>>> back;  // edges to lower-indexed vertices
};

template <class Int>
Int to_int(const mpz_class& z) {
  if constexpr (std::is_same_v<Int, mpz_class>)
    return z;
  else
    return static_cast<Int>(z.get_si());
}

template <class Int>
ScaledWeights<Int> scale(const Graph& g, const FractionalSolution& x, const mpz_class& den) {
  ScaledWeights<Int> w;
  w.unit = to_int<Int>(den);
  w.back.resize(static_cast<std::size_t>(g.n()));
  for (int e = 0; e < g.m(); ++e) {
    if (x[e] == 0) continue;
    const mpz_class num = x[e].get_num() * (den / x[e].get_den());
    const int lo = std::min(g.edge(e).u, g.edge(e).v);
    const int hi = std::max(g.edge(e).u, g.edge(e).v);
    w.back[static_cast<std::size_t>(hi)].emplace_back(lo, to_int<Int>(num));
  }
  return w;
}

template <class Int>
class PartitionSearch {
 public:
  PartitionSearch(const ScaledWeights<Int>& w, int n) : w_(w), n_(n), labels_(static_cast<std::size_t>(n), 0) {}

  // Enumerates completions of labels_[0..depth) with `blocks` blocks so far.
  void run(const std::vector<int>& prefix, int blocks, const Int& cross) {
    std::copy(prefix.begin(), prefix.end(), labels_.begin());
    dfs(static_cast<int>(prefix.size()), blocks, cross);
  }

  bool found() const { return found_; }
  const Int& best() const { return best_; }
  const std::vector<int>& best_labels() const { return best_labels_; }

  Int added_cross(int v, int label) const {
    Int add = 0;
    for (const auto& [u, wt] : w_.back[static_cast<std::size_t>(v)])
      if (labels_[static_cast<std::size_t>(u)] != label) add += wt;
    return add;
  }
  std::vector<int>& labels() { return labels_; }

 private:
  void dfs(int i, int blocks, const Int& cross) {
    if (i == n_) {
      const Int slack = cross - Int(blocks - 1) * w_.unit;
      if (slack < 0 && (!found_ || slack < best_ || (slack == best_ && labels_ < best_labels_))) {
        found_ = true;
        best_ = slack;
        best_labels_ = labels_;
      }
      return;
    }
    const Int bound = cross - Int(blocks + (n_ - i) - 1) * w_.unit;
    if (bound >= 0 || (found_ && bound > best_)) return;
    for (int label = 0; label <= blocks && label < n_; ++label) {
      labels_[static_cast<std::size_t>(i)] = label;
      const Int next = cross + added_cross(i, label);
      dfs(i + 1, label == blocks ? blocks + 1 : blocks, next);
    }
  }

  const ScaledWeights<Int>& w_;
  int n_;
  std::vector<int> labels_;
  bool found_ = false;
  Int best_ = 0;
  std::vector<int> best_labels_;
};

struct Prefix {
  std::vector<int> labels;
  int blocks = 0;
};

std::vector<Prefix> partition_prefixes(int n, int depth) {
  std::vector<Prefix> out;
  Prefix p;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == depth) {
      out.push_back(p);
      return;
    }
    const int blocks = p.blocks;
    for (int label = 0; label <= blocks; ++label) {
      p.labels.push_back(label);
      p.blocks = label == blocks ? blocks + 1 : blocks;
      self(self, i + 1);
      p.labels.pop_back();
      p.blocks = blocks;
    }
  };
  rec(rec, 0);
  (void)n;
  return out;
}

template <class Int>
std::optional<std::vector<int>> most_violated_partition(const Graph& g, const FractionalSolution& x,
                                                        const mpz_class& den, bool parallel) {
  const int n = g.n();
  const auto weights = scale<Int>(g, x, den);
  if (!parallel) {
    PartitionSearch<Int> search(weights, n);
    search.run({}, 0, Int(0));
    if (!search.found()) return std::nullopt;
    return search.best_labels();
  }

  const int depth = std::min(n, 6);
  const auto prefixes = partition_prefixes(n, depth);
  struct Local {
    bool found = false;
    Int slack = 0;
    std::vector<int> labels;
  };
  std::vector<Local> results(prefixes.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t p = 0; p < prefixes.size(); ++p) {
    PartitionSearch<Int> search(weights, n);
    Int cross = 0;
    auto& labels = search.labels();
    for (int i = 0; i < depth; ++i) {
      labels[static_cast<std::size_t>(i)] = prefixes[p].labels[static_cast<std::size_t>(i)];
      cross += search.added_cross(i, labels[static_cast<std::size_t>(i)]);
    }
    search.run(prefixes[p].labels, prefixes[p].blocks, cross);
    if (search.found()) results[p] = Local{true, search.best(), search.best_labels()};
  }

  const Local* best = nullptr;
  for (const auto& r : results) {
    if (!r.found) continue;
    if (!best || r.slack < best->slack || (r.slack == best->slack && r.labels < best->labels)) best = &r;
  }
  if (!best) return std::nullopt;
  return best->labels;
}

std::optional<ViolatedConstraint> separate_partitions_impl(const Graph& g, const FractionalSolution& x,
                                                           int limit, bool parallel) {
  if (g.n() > limit)
    throw ScaleLimitError("exhaustive partition separation supports n <= " + std::to_string(limit) +
                          " (instance has n = " + std::to_string(g.n()) + ")");
  if (x.size() != g.m()) throw std::invalid_argument("solution size does not match edge count");

  mpz_class den = 1;
  for (const auto& v : x.values()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  mpz_class magnitude = den * g.n();
  for (const auto& v : x.values()) magnitude += v.get_num() * (den / v.get_den());

  const mpz_class int64_budget = mpz_class(1) << 62;
  const auto labels = magnitude < int64_budget
                          ? most_violated_partition<std::int64_t>(g, x, den, parallel)
                          : most_violated_partition<mpz_class>(g, x, den, parallel);
  if (!labels) return std::nullopt;

  ViolatedConstraint vc;
  vc.kind = ConstraintKind::partition;
  Partition w = Partition::from_labels(*labels);
  vc.lhs = x.partition_value(g, w);
  vc.rhs = w.size() - 1;
  if (!(vc.lhs < vc.rhs)) throw std::logic_error("partition search returned a satisfied row");
  vc.partition = std::move(w);
  return vc;
}

std::vector<Rational> cut_row(const Graph& g, const VertexSet& side) {
  std::vector<Rational> row(static_cast<std::size_t>(g.m()));
  for (int e = 0; e < g.m(); ++e)
    if (side.contains(g.edge(e).u) != side.contains(g.edge(e).v)) row[static_cast<std::size_t>(e)] = 1;
  return row;
}

std::vector<Rational> partition_row(const Graph& g, const Partition& w) {
  std::vector<Rational> row(static_cast<std::size_t>(g.m()));
  for (int e = 0; e < g.m(); ++e)
    if (w.block_of(g.edge(e).u) != w.block_of(g.edge(e).v)) row[static_cast<std::size_t>(e)] = 1;
  return row;
}

}  // namespace

std::optional<ViolatedConstraint> separate_even_cuts_serial(const Graph& g, const FractionalSolution& x) {
  if (x.size() != g.m()) throw std::invalid_argument("solution size does not match edge count");
  MaxFlow net = contracted_network(g, x);
  std::optional<CutCandidate> best;
  for (int v = 0; v < g.n(); ++v) {
    if (g.is_terminal(v)) continue;
    auto cand = min_cut_from(net, v, g.s());
    if (cand && (!best || better(*cand, *best))) best = std::move(cand);
  }
  return to_even_violation(g, x, std::move(best));
}

std::optional<ViolatedConstraint> separate_even_cuts(const Graph& g, const FractionalSolution& x) {
  if (x.size() != g.m()) throw std::invalid_argument("solution size does not match edge count");
  const MaxFlow base = contracted_network(g, x);
  std::vector<std::optional<CutCandidate>> per_vertex(static_cast<std::size_t>(g.n()));

#pragma omp parallel
  {
    MaxFlow net = base;
#pragma omp for schedule(dynamic, 1)
    for (int v = 0; v < g.n(); ++v) {
      if (g.is_terminal(v)) continue;
      per_vertex[static_cast<std::size_t>(v)] = min_cut_from(net, v, g.s());
    }
  }

  std::optional<CutCandidate> best;
  for (auto& cand : per_vertex)
    if (cand && (!best || better(*cand, *best))) best = std::move(cand);
  return to_even_violation(g, x, std::move(best));
}

std::optional<ViolatedConstraint> separate_partitions(const Graph& g, const FractionalSolution& x, int limit) {
  return separate_partitions_impl(g, x, limit, true);
}

std::optional<ViolatedConstraint> separate_partitions_serial(const Graph& g, const FractionalSolution& x,
                                                             int limit) {
  return separate_partitions_impl(g, x, limit, false);
}

RelaxationResult solve_relaxation(const Graph& g, const RelaxationOptions& options) {
  if (g.n() > options.partition_limit)
    throw ScaleLimitError("relaxation needs exhaustive partition separation; n = " + std::to_string(g.n()) +
                          " exceeds the limit " + std::to_string(options.partition_limit));

  LinearProgram lp(g.m());
  for (int e = 0; e < g.m(); ++e) {
    lp.objective[static_cast<std::size_t>(e)] = 1;
    lp.upper[static_cast<std::size_t>(e)] = Rational(2);
  }
  lp.add_row(std::vector<Rational>(static_cast<std::size_t>(g.m()), Rational(1)), Rational(g.n() - 1));
  for (int v = 0; v < g.n(); ++v)
    if (!g.is_terminal(v)) lp.add_row(cut_row(g, VertexSet(g.n(), {v})), Rational(2));

  RelaxationResult result;
  for (;;) {
    ++result.iterations;
    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::optimal)
      throw std::logic_error("relaxation LP reported " + to_string(sol.status));
    FractionalSolution x(sol.values);

    const auto even = options.parallel ? separate_even_cuts(g, x) : separate_even_cuts_serial(g, x);
    const auto part = options.parallel ? separate_partitions(g, x, options.partition_limit)
                                       : separate_partitions_serial(g, x, options.partition_limit);
    if (!even && !part) {
      result.lp_value = sol.objective;
      result.x = std::move(x);
      result.rows = static_cast<int>(lp.rows.size());
      return result;
    }
    if (even) lp.add_row(cut_row(g, *even->cut), even->rhs);
    if (part) lp.add_row(partition_row(g, *part->partition), part->rhs);
  }
}

}  // namespace stpath
