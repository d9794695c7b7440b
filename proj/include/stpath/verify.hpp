#pragma once

#include "stpath/graph.hpp"
#include "stpath/pipeline.hpp"

#include <optional>
#include <vector>

namespace stpath::verify {

// Each check compares one pipeline artifact against its brute-force reference or
// the property it must satisfy. Checks whose oracle would exceed its size budget
// return CheckStatus::skipped.

CheckResult lp_matches_enumeration(const Graph& g, const PipelineRun& run);
CheckResult relaxation_feasible(const Graph& g, const PipelineRun& run);
CheckResult lp_below_opt(const PipelineRun& run, std::optional<long long> opt);
CheckResult cost_within_three_halves(const PipelineRun& run, std::optional<long long> opt);
CheckResult tree_bound(const Graph& g, const PipelineRun& run);
CheckResult join_bound(const PipelineRun& run);
CheckResult narrow_cuts_match_brute(const Graph& g, const PipelineRun& run);
CheckResult chain_nested(const Graph& g, const PipelineRun& run);
CheckResult single_crossing(const Graph& g, const PipelineRun& run);
CheckResult parity_on_st_cuts(const Graph& g, const PipelineRun& run);
CheckResult level_unions_connected(const Graph& g, const PipelineRun& run);
CheckResult tjoin_matches_brute(const Graph& g, const PipelineRun& run);
CheckResult tjoin_matches_lp(const Graph& g, const PipelineRun& run);
CheckResult matching_matches_enumeration(const Graph& g, const PipelineRun& run);
CheckResult output_valid(const Graph& g, const PipelineRun& run);

/// All of the above, with OPT from the Held-Karp oracle when n is within budget.
std::vector<CheckResult> run_all(const Graph& g, const PipelineRun& run, std::optional<long long> opt);

}  // namespace stpath::verify
