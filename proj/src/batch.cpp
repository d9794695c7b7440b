#include "stpath/batch.hpp"

#include "stpath/gen.hpp"
#include "stpath/report.hpp"

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>

namespace stpath {

namespace fs = std::filesystem;

std::vector<BatchItem> load_directory(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<BatchItem> items;
  for (const auto& f : files) {
    BatchItem item{f.filename().string(), std::nullopt, ""};
    try {
      item.graph = read_graph_file(f.string());
    } catch (const std::exception& e) {
      item.load_error = e.what();
    }
    items.push_back(std::move(item));
  }
  return items;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto parts = split(text, '-');
  if (parts.size() == 1) return {std::stoi(parts[0]), std::stoi(parts[0])};
  if (parts.size() != 2) throw std::invalid_argument("malformed range '" + text + "'");
  const int lo = std::stoi(parts[0]);
  const int hi = std::stoi(parts[1]);
  if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

}  // namespace

std::vector<BatchItem> load_genspec(const std::string& spec) {
  const auto parts = split(spec, ':');
  std::vector<BatchItem> items;
  try {
    if (parts.size() == 4 && parts[0] == "random") {
      const int count = std::stoi(parts[1]);
      const auto [nmin, nmax] = parse_range(parts[2]);
      const auto seed = std::stoull(parts[3]);
      if (count < 0 || nmin < 2) throw std::invalid_argument("random spec needs count >= 0 and n >= 2");
      std::mt19937_64 rng(seed);
      for (int i = 0; i < count; ++i) {
        const int n = std::uniform_int_distribution<int>(nmin, nmax)(rng);
        const int m = std::uniform_int_distribution<int>(n - 1, n * (n - 1) / 2)(rng);
        const std::uint64_t instance_seed = rng();
        items.push_back({"random-" + std::to_string(seed) + "-" + std::to_string(i), gen_random(n, m, instance_seed), ""});
      }
      return items;
    }
    if (parts.size() == 2 && parts[0] == "gap") {
      const auto [kmin, kmax] = parse_range(parts[1]);
      for (int k = kmin; k <= kmax; ++k) items.push_back({"gap-" + std::to_string(k), gen_gap(k), ""});
      return items;
    }
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("bad generator spec '" + spec + "': " + e.what());
  }
  throw std::invalid_argument("bad generator spec '" + spec +
                              "' (expected random:COUNT:NMIN-NMAX:SEED or gap:KMIN-KMAX)");
}

std::vector<BatchItem> load_batch_source(const std::string& source) {
  if (fs::is_directory(source)) return load_directory(source);
  return load_genspec(source);
}

BatchSummary run_batch(const std::vector<BatchItem>& items, bool verify) {
  std::vector<std::optional<SolutionReport>> reports(items.size());
  std::vector<std::string> errors(items.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& item = items[i];
    if (!item.graph) {
      errors[i] = item.load_error;
      continue;
    }
    try {
      PipelineOptions options;
      options.id = item.id;
      options.verify = verify;
      // instances are the unit of parallelism here
      options.parallel = false;
      reports[i] = run_algorithm(*item.graph, options).report;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  BatchSummary summary;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!reports[i]) {
      summary.failures.push_back({items[i].id, errors[i]});
      continue;
    }
    const auto& r = *reports[i];
    if (!summary.max_ratio_lp || r.ratio_lp > *summary.max_ratio_lp) summary.max_ratio_lp = r.ratio_lp;
    if (r.ratio_opt && (!summary.max_ratio_opt || *r.ratio_opt > *summary.max_ratio_opt))
      summary.max_ratio_opt = r.ratio_opt;
    summary.reports.push_back(r);
  }
  return summary;
}

nlohmann::ordered_json summary_to_json(const BatchSummary& summary, bool include_timings) {
  using nlohmann::ordered_json;
  ordered_json j;
  ordered_json agg;
  agg["instances"] = summary.reports.size() + summary.failures.size();
  agg["succeeded"] = summary.reports.size();
  agg["failed"] = summary.failures.size();
  agg["max_ratio_lp"] = summary.max_ratio_lp ? ordered_json(to_fraction_string(*summary.max_ratio_lp)) : ordered_json(nullptr);
  agg["max_ratio_opt"] = summary.max_ratio_opt ? ordered_json(to_fraction_string(*summary.max_ratio_opt)) : ordered_json(nullptr);
  j["summary"] = std::move(agg);
  ordered_json failures = ordered_json::array();
  for (const auto& f : summary.failures) failures.push_back(ordered_json{{"id", f.id}, {"error", f.error}});
  j["failures"] = std::move(failures);
  ordered_json reports = ordered_json::array();
  for (const auto& r : summary.reports) reports.push_back(report_to_json(r, include_timings));
  j["reports"] = std::move(reports);
  return j;
}

std::string summary_to_csv(const BatchSummary& summary) {
  std::string out = csv_header() + "\n";
  for (const auto& r : summary.reports) out += csv_row(r) + "\n";
  return out;
}

}  // namespace stpath
