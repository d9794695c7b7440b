#include "stpath/verify.hpp"

#include "stpath/oracle.hpp"

#include <algorithm>

namespace stpath::verify {

namespace {

CheckResult pass(const char* name) { return {name, CheckStatus::passed, ""}; }
CheckResult fail(const char* name, std::string detail) { return {name, CheckStatus::failed, std::move(detail)}; }
CheckResult skip(const char* name, std::string detail) { return {name, CheckStatus::skipped, std::move(detail)}; }

std::string describe(const VertexSet& s) {
  std::string out = "{";
  for (int v : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

int crossing(const Graph& g, const EdgeSet& edges, const VertexSet& side) {
  int c = 0;
  for (int e : edges.indices())
    if (side.contains(g.edge(e).u) != side.contains(g.edge(e).v)) c += edges.multiplicity(e);
  return c;
}

bool connected_within(const Graph& g, const FractionalSolution& x, const VertexSet& vertices) {
  const auto members = vertices.members();
  if (members.empty()) return false;
  VertexSet seen(g.n());
  seen.insert(members.front());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int e = 0; e < g.m(); ++e) {
      if (x[e] <= 0) continue;
      const auto [u, v] = g.edge(e);
      if (!vertices.contains(u) || !vertices.contains(v)) continue;
      if (seen.contains(u) != seen.contains(v)) {
        seen.insert(u);
        seen.insert(v);
        grew = true;
      }
    }
  }
  return seen.size() == vertices.size();
}

}  // namespace

CheckResult lp_matches_enumeration(const Graph& g, const PipelineRun& run) {
  constexpr const char* name = "lp_matches_enumeration";
  if (g.n() > oracle::kEnumerateLpLimit) return skip(name, "n above enumeration budget");
  const auto ref = oracle::enumerate_lp(g);
  if (ref.value != run.relaxation.lp_value)
    return fail(name, "cutting planes " + to_fraction_string(run.relaxation.lp_value) + " vs enumeration " +
                          to_fraction_string(ref.value));
  return pass(name);
}

CheckResult relaxation_feasible(const Graph& g, const PipelineRun& run) {
  constexpr const char* name = "relaxation_feasible";
  if (g.n() > oracle::kEnumerateLpLimit) return skip(name, "n above enumeration budget");
  if (auto v = oracle::find_relaxation_violation(g, run.relaxation.x)) return fail(name, *v);
  return pass(name);
}

CheckResult lp_below_opt(const PipelineRun& run, std::optional<long long> opt) {
  constexpr const char* name = "lp_below_opt";
  if (!opt) return skip(name, "OPT not computed");
  if (run.relaxation.lp_value > Rational(static_cast<long>(*opt)))
    return fail(name, "lp " + to_fraction_string(run.relaxation.lp_value) + " > OPT " + std::to_string(*opt));
  return pass(name);
}

CheckResult cost_within_three_halves(const PipelineRun& run, std::optional<long long> opt) {
  constexpr const char* name = "cost_within_three_halves";
  if (!opt) return skip(name, "OPT not computed");
  if (2 * run.path.cost > 3 * *opt)
    return fail(name, "cost " + std::to_string(run.path.cost) + " > 3/2 * OPT " + std::to_string(*opt));
  return pass(name);
}

CheckResult tree_bound(const Graph& g, const PipelineRun& run) {
  constexpr const char* name = "tree_bound";
  const int size = run.tree.edges.size();
  if (size != g.n() - 1) return fail(name, "|J| = " + std::to_string(size) + " != n - 1");
  if (Rational(size) > run.relaxation.lp_value) return fail(name, "|J| exceeds the LP value");
  return pass(name);
}

CheckResult join_bound(const PipelineRun& run) {
  constexpr const char* name = "join_bound";
  if (Rational(2 * run.join.edges.size()) > run.relaxation.lp_value)
    return fail(name, "|F| = " + std::to_string(run.join.edges.size()) + " exceeds lp/2");
  return pass(name);
}

CheckResult narrow_cuts_match_brute(const Graph& g, const PipelineRun& run) {
  constexpr const char* name = "narrow_cuts_match_brute";
  if (g.n() > oracle::kNarrowCutLimit) return skip(name, "n above enumeration budget");
  const auto brute = oracle::brute_narrow_cuts(g, run.relaxation.x);
  if (brute != run.chain.cuts)
    return fail(name, "cut tree found " + std::to_string(run.chain.k()) + " narrow cuts, enumeration found " +
                          std::to_string(brute.size()));
  return pass(name);
}

CheckResult chain_nested(const Graph& g, const PipelineRun& run) {
  constexpr const char* name = "chain_nested";
  const auto& chain = run.chain;
  for (int i = 0; i < chain.k(); ++i) {
    const auto& c = chain.cuts[static_cast<std::size_t>(i)];
    if (!c.contains(g.s()) || c.contains(g.t())) return fail(name, "cut " + describe(c) + " is not an s-side cut");
    if (!(run.relaxation.x.cut_value(g, c) < 2)) return fail(name, "cut " + describe(c) + " is not narrow");
    if (i > 0) {
      const auto& prev = chain.cuts[static_cast<std::size_t>(i - 1)];
      if (!prev.is_subset_of(c) || prev.size() == c.size()) return fail(name, "cuts not strictly nested");
    }
  }
  if (static_cast<int>(chain.levels.size()) != chain.k() + 1) return fail(name, "wrong level count");
  VertexSet covered(g.n());
  for (const auto& level : chain.levels) {
    if (level.empty()) return fail(name, "empty level");
    for (int v : level.members()) {
      if (covered.contains(v)) return fail(name, "levels overlap");
      covered.insert(v);
    }
  }
  if (covered.size() != g.n()) return fail(name, "levels do not cover V");
  if (!chain.levels.front().contains(g.s()) || !chain.levels.back().contains(g.t()))
    return fail(name, "terminals not in the outer levels");
  return pass(name);
}

CheckResult single_crossing(const Graph& g, const PipelineRun& run) {
  constexpr const char* name = "single_crossing";
  for (const auto& c : run.chain.cuts) {
    const int k = crossing(g, run.tree.edges, c);
    if (k != 1) return fail(name, "J crosses " + describe(c) + " " + std::to_string(k) + " times");
  }
  return pass(name);
}

CheckResult parity_on_st_cuts(const Graph& g, const PipelineRun& run) {
  constexpr const char* name = "parity_on_st_cuts";
  const int n = g.n();
  if (n > oracle::kEnumerateLpLimit) return skip(name, "n above enumeration budget");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> g.s() & 1u) || (mask >> g.t() & 1u)) continue;
    VertexSet side(n);
    int t_odd = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) {
        side.insert(v);
        if (run.wrong_degree.contains(v)) ++t_odd;
      }
    if (t_odd % 2 == 0) continue;
    if (crossing(g, run.tree.edges, side) % 2)
      return fail(name, "T-odd s-t cut " + describe(side) + " is crossed an odd number of times by J");
  }
  return pass(name);
}

CheckResult level_unions_connected(const Graph& g, const PipelineRun& run) {
  constexpr const char* name = "level_unions_connected";
  const auto& levels = run.chain.levels;
  const int count = static_cast<int>(levels.size());
  for (int p = 0; p < count; ++p) {
    VertexSet unite(g.n());
    for (int q = p; q < count; ++q) {
      for (int v : levels[static_cast<std::size_t>(q)].members()) unite.insert(v);
      if (!connected_within(g, run.relaxation.x, unite))
        return fail(name, "support induced on levels " + std::to_string(p + 1) + ".." + std::to_string(q + 1) +
                              " is disconnected");
    }
  }
  return pass(name);
}

CheckResult tjoin_matches_brute(const Graph& g, const PipelineRun& run) {
  constexpr const char* name = "tjoin_matches_brute";
  if (g.m() > oracle::kTJoinEdgeLimit) return skip(name, "edge count above enumeration budget");
  const int brute = oracle::brute_tjoin(g, run.wrong_degree);
  if (brute != run.join.edges.size())
    return fail(name, "|F| = " + std::to_string(run.join.edges.size()) + ", enumeration " + std::to_string(brute));
  return pass(name);
}

CheckResult tjoin_matches_lp(const Graph& g, const PipelineRun& run) {
  constexpr const char* name = "tjoin_matches_lp";
  if (g.n() > oracle::kTJoinLpLimit) return skip(name, "n above enumeration budget");
  const Rational lp = oracle::tjoin_lp_value(g, run.wrong_degree);
  if (lp != run.join.edges.size())
    return fail(name, "|F| = " + std::to_string(run.join.edges.size()) + ", T-join LP " + to_fraction_string(lp));
  return pass(name);
}

CheckResult matching_matches_enumeration(const Graph& g, const PipelineRun& run) {
  constexpr const char* name = "matching_matches_enumeration";
  const auto points = run.wrong_degree.members();
  if (static_cast<int>(points.size()) > oracle::kMatchingPointLimit) return skip(name, "|T| above enumeration budget");
  const long long brute = oracle::brute_matching_weight(points, metric_completion(g));
  if (brute != run.join.matching.weight)
    return fail(name, "matching " + std::to_string(run.join.matching.weight) + ", enumeration " + std::to_string(brute));
  return pass(name);
}

CheckResult output_valid(const Graph& g, const PipelineRun& run) {
  constexpr const char* name = "output_valid";
  EdgeSet expected(g.m());
  for (int e : run.tree.edges.indices()) expected.add(e);
  for (int e : run.join.edges.indices()) expected.add(e);
  if (expected != run.multigraph) return fail(name, "multigraph is not J plus F");
  if (!is_connected_spanning(g, expected)) return fail(name, "J plus F is not connected");
  if (odd_degree_vertices(g, expected) != VertexSet(g.n(), {g.s(), g.t()}))
    return fail(name, "odd-degree set of J plus F is not {s, t}");

  const auto& tr = run.trail;
  if (tr.vertices.size() != tr.edges.size() + 1 || tr.vertices.front() != g.s() || tr.vertices.back() != g.t())
    return fail(name, "trail does not run from s to t");
  std::vector<int> used(static_cast<std::size_t>(g.m()), 0);
  for (std::size_t i = 0; i < tr.edges.size(); ++i) {
    const int e = tr.edges[i];
    const int a = tr.vertices[i];
    const int b = tr.vertices[i + 1];
    if (!((g.edge(e).u == a && g.edge(e).v == b) || (g.edge(e).u == b && g.edge(e).v == a)))
      return fail(name, "trail step " + std::to_string(i) + " does not follow its edge");
    ++used[static_cast<std::size_t>(e)];
  }
  for (int e = 0; e < g.m(); ++e)
    if (used[static_cast<std::size_t>(e)] != expected.multiplicity(e))
      return fail(name, "trail uses edge " + std::to_string(e) + " the wrong number of times");

  const auto& order = run.path.order;
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int v = 0; v < g.n(); ++v)
    if (static_cast<int>(sorted.size()) != g.n() || sorted[static_cast<std::size_t>(v)] != v)
      return fail(name, "path is not a permutation of V");
  if (order.front() != g.s() || order.back() != g.t()) return fail(name, "path endpoints are not s and t");
  const CostMatrix c = metric_completion(g);
  long long cost = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) cost += c.at(order[i], order[i + 1]);
  if (cost != run.path.cost) return fail(name, "path cost is inconsistent");
  if (cost > run.tree.edges.size() + run.join.edges.size()) return fail(name, "path cost exceeds |J| + |F|");
  return pass(name);
}

std::vector<CheckResult> run_all(const Graph& g, const PipelineRun& run, std::optional<long long> opt) {
  return {
      lp_matches_enumeration(g, run),
      relaxation_feasible(g, run),
      lp_below_opt(run, opt),
      cost_within_three_halves(run, opt),
      tree_bound(g, run),
      join_bound(run),
      narrow_cuts_match_brute(g, run),
      chain_nested(g, run),
      single_crossing(g, run),
      parity_on_st_cuts(g, run),
      level_unions_connected(g, run),
      tjoin_matches_brute(g, run),
      tjoin_matches_lp(g, run),
      matching_matches_enumeration(g, run),
      output_valid(g, run),
  };
}

}  // namespace stpath::verify
