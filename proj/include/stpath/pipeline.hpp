#pragma once

#include "stpath/fractional.hpp"
#include "stpath/graph.hpp"
#include "stpath/narrow_cuts.hpp"
#include "stpath/rational.hpp"
#include "stpath/separation.hpp"
#include "stpath/tjoin.hpp"
#include "stpath/tree_builder.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stpath {

/// A pipeline stage failed; what() names the stage.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& message);
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

enum class CheckStatus { passed, failed, skipped };

std::string to_string(CheckStatus status);
CheckStatus parse_check_status(std::string_view text);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct StageTiming {
  std::string stage;
  double millis = 0;

  friend bool operator==(const StageTiming&, const StageTiming&) = default;
};

struct SolutionReport {
  std::string id;
  int n = 0;
  int m = 0;
  int s = 0;
  int t = 0;
  Rational lp_value;
  int lp_iterations = 0;
  int k = 0;
  std::vector<std::vector<int>> narrow_cuts;
  std::vector<std::vector<int>> levels;
  bool fallback_tree = false;
  int tree_size = 0;
  std::vector<std::pair<int, int>> tree_edges;
  std::vector<int> wrong_degree;
  int join_size = 0;
  std::vector<std::pair<int, int>> join_edges;
  std::vector<int> trail;
  std::vector<int> path;
  long long cost = 0;
  std::optional<long long> opt;
  Rational ratio_lp;
  std::optional<Rational> ratio_opt;
  std::vector<CheckResult> checks;
  std::vector<StageTiming> timings;

  friend bool operator==(const SolutionReport&, const SolutionReport&) = default;
};

/// Every intermediate object of one run, kept for verification.
struct PipelineRun {
  RelaxationResult relaxation;
  std::optional<SupportGraph> support;
  std::optional<GomoryHuTree> cut_tree;
  NarrowCutChain chain;
  SpanningTree tree;
  VertexSet wrong_degree;
  TJoin join;
  EdgeSet multigraph;
  Trail trail;
  HamiltonianPath path;
  SolutionReport report;
};

struct PipelineOptions {
  std::string id = "instance";
  bool verify = false;
  bool parallel = true;
  int partition_limit = kPartitionSeparationLimit;
};

/// Relaxation, narrow cuts, layered spanning tree, parity correction, Eulerian
/// trail and shortcutting. Throws PipelineError naming the failing stage; bound
/// violations (cost > |J| + |F|, |F| > lp/2, |J| > lp, cost > 3/2 opt) are errors.
PipelineRun run_algorithm(const Graph& g, const PipelineOptions& options = {});

SolutionReport run_pipeline(const Graph& g, bool verify, const std::string& id = "instance");

}  // namespace stpath
