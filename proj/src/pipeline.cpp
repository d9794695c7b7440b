#include "stpath/pipeline.hpp"

#include "stpath/oracle.hpp"
#include "stpath/verify.hpp"

#include <chrono>

namespace stpath {

PipelineError::PipelineError(std::string stage, const std::string& message)
    : std::runtime_error("stage '" + stage + "': " + message), stage_(std::move(stage)) {}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

CheckStatus parse_check_status(std::string_view text) {
  if (text == "passed") return CheckStatus::passed;
  if (text == "failed") return CheckStatus::failed;
  if (text == "skipped") return CheckStatus::skipped;
  throw std::invalid_argument("unknown check status '" + std::string(text) + "'");
}

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Graph& g, const EdgeSet& set) {
  std::vector<std::pair<int, int>> out;
  for (int e : set.indices()) out.emplace_back(std::min(g.edge(e).u, g.edge(e).v), std::max(g.edge(e).u, g.edge(e).v));
  return out;
}

}  // namespace

PipelineRun run_algorithm(const Graph& g, const PipelineOptions& options) {
  PipelineRun run;
  SolutionReport& rep = run.report;
  rep.id = options.id;
  rep.n = g.n();
  rep.m = g.m();
  rep.s = g.s();
  rep.t = g.t();

  auto stage = [&](const char* name, auto&& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const PipelineError&) {
      throw;
    } catch (const std::exception& e) {
      throw PipelineError(name, e.what());
    }
    const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
    rep.timings.push_back({name, took.count()});
  };

  stage("relaxation", [&] {
    run.relaxation = solve_relaxation(g, {options.parallel, options.partition_limit});
  });
  const FractionalSolution& x = run.relaxation.x;

  stage("narrow_cuts", [&] {
    run.support = support_graph(g, x);
    run.cut_tree = gomory_hu_tree(g, x);
    run.chain = extract_narrow_cuts(g, *run.cut_tree, x);
  });

  stage("spanning_tree", [&] {
    run.tree = build_tree(g, *run.support, run.chain);
    run.wrong_degree = wrong_degree_set(g, run.tree.edges);
  });

  stage("tjoin", [&] { run.join = min_tjoin(g, run.wrong_degree); });

  stage("eulerian_trail", [&] {
    run.multigraph = run.tree.edges;
    for (int e : run.join.edges.indices()) run.multigraph.add(e);
    run.trail = eulerian_trail(g, run.multigraph, g.s(), g.t());
  });

  stage("shortcut", [&] { run.path = shortcut(run.trail, metric_completion(g), g.s(), g.t()); });

  rep.lp_value = run.relaxation.lp_value;
  rep.lp_iterations = run.relaxation.iterations;
  rep.k = run.chain.k();
  for (const auto& c : run.chain.cuts) rep.narrow_cuts.push_back(c.members());
  for (const auto& l : run.chain.levels) rep.levels.push_back(l.members());
  rep.fallback_tree = run.tree.fallback;
  rep.tree_size = run.tree.edges.size();
  rep.tree_edges = edge_pairs(g, run.tree.edges);
  rep.wrong_degree = run.wrong_degree.members();
  rep.join_size = run.join.edges.size();
  rep.join_edges = edge_pairs(g, run.join.edges);
  rep.trail = run.trail.vertices;
  rep.path = run.path.order;
  rep.cost = run.path.cost;
  rep.ratio_lp = Rational(static_cast<long>(rep.cost)) / rep.lp_value;

  if (rep.cost > rep.tree_size + rep.join_size)
    throw PipelineError("bounds", "path cost " + std::to_string(rep.cost) + " exceeds |J| + |F|");
  if (Rational(2 * rep.join_size) > rep.lp_value)
    throw PipelineError("bounds", "|F| = " + std::to_string(rep.join_size) + " exceeds lp/2 = " +
                                      to_fraction_string(rep.lp_value / 2));
  if (Rational(rep.tree_size) > rep.lp_value)
    throw PipelineError("bounds", "|J| exceeds the LP value " + to_fraction_string(rep.lp_value));

  if (options.verify) {
    stage("verify", [&] {
      if (g.n() <= oracle::kHeldKarpLimit) rep.opt = oracle::held_karp_opt(g).cost;
      rep.checks = verify::run_all(g, run, rep.opt);
    });
    if (rep.opt) rep.ratio_opt = Rational(static_cast<long>(rep.cost)) / Rational(static_cast<long>(*rep.opt));
    std::string failed;
    for (const auto& c : rep.checks)
      if (c.status == CheckStatus::failed) failed += (failed.empty() ? "" : "; ") + c.name + ": " + c.detail;
    if (!failed.empty()) throw PipelineError("verify", failed);
  }
  return run;
}

SolutionReport run_pipeline(const Graph& g, bool verify, const std::string& id) {
  PipelineOptions options;
  options.id = id;
  options.verify = verify;
  return run_algorithm(g, options).report;
}

}  // namespace stpath
