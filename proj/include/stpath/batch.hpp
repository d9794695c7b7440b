#pragma once

#include "stpath/graph.hpp"
#include "stpath/pipeline.hpp"
#include "stpath/rational.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stpath {

struct BatchItem {
  std::string id;
  std::optional<Graph> graph;
  std::string load_error;
};

/// Every regular file in `dir`, in name order; unreadable or malformed files keep
/// their error and are reported as failures.
std::vector<BatchItem> load_directory(const std::string& dir);

/// Generator specs:
///   random:COUNT:NMIN-NMAX:SEED   n uniform in range, m uniform in [n-1, n(n-1)/2]
///   gap:KMIN-KMAX                 theta graphs for each k
std::vector<BatchItem> load_genspec(const std::string& spec);

/// Directory if `source` names one, generator spec otherwise.
std::vector<BatchItem> load_batch_source(const std::string& source);

struct BatchFailure {
  std::string id;
  std::string error;
};

struct BatchSummary {
  std::vector<SolutionReport> reports;
  std::vector<BatchFailure> failures;
  std::optional<Rational> max_ratio_lp;
  std::optional<Rational> max_ratio_opt;

  bool ok() const { return failures.empty(); }
};

/// Instances run concurrently; results keep input order.
BatchSummary run_batch(const std::vector<BatchItem>& items, bool verify);

nlohmann::ordered_json summary_to_json(const BatchSummary& summary, bool include_timings = false);
std::string summary_to_csv(const BatchSummary& summary);

}  // namespace stpath
