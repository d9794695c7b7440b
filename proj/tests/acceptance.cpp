// Acceptance run: twelve properties over a fixed-seed corpus of random instances.
// Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

#include "stpath/gen.hpp"
#include "stpath/oracle.hpp"
#include "stpath/pipeline.hpp"
#include "stpath/report.hpp"
#include "stpath/tjoin.hpp"
#include "stpath/verify.hpp"

#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

using namespace stpath;

namespace {

constexpr int kRandomInstances = 504;
constexpr std::uint64_t kCorpusSeed = 0x5eed2026;
constexpr int kMatchingTrials = 300;

struct Instance {
  std::string id;
  Graph graph;
};

/// n cycles through 4..10; density cycles through sparse, medium and dense.
std::vector<Instance> build_corpus() {
  std::vector<Instance> out;
  std::mt19937_64 rng(kCorpusSeed);
  for (int i = 0; i < kRandomInstances; ++i) {
    const int n = 4 + i % 7;
    const int lo = n - 1;
    const int hi = n * (n - 1) / 2;
    const int span = hi - lo;
    int m = lo;
    switch ((i / 7) % 3) {
      case 0: m = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(span / 3 + 1)); break;
      case 1: m = lo + span / 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(span / 3 + 1)); break;
      default: m = hi - static_cast<int>(rng() % static_cast<std::uint64_t>(span / 3 + 1)); break;
    }
    const std::uint64_t seed = rng();
    out.push_back({"random-" + std::to_string(i), gen_random(n, m, seed)});
  }
  for (const char* name : {"p4", "star", "c5"}) out.push_back({name, gen_named(name)});
  for (int k = 2; k <= 3; ++k) out.push_back({"gap-" + std::to_string(k), gen_gap(k)});
  return out;
}

struct Tally {
  int checked = 0;
  int skipped = 0;
  std::vector<std::string> violations;

  void record(const std::string& id, const CheckResult& r) {
    if (r.status == CheckStatus::skipped) {
      ++skipped;
      return;
    }
    ++checked;
    if (r.status == CheckStatus::failed) violations.push_back(id + ": " + r.name + ": " + r.detail);
  }
  void record(const std::string& id, bool ok, const std::string& what) {
    ++checked;
    if (!ok) violations.push_back(id + ": " + what);
  }
  void merge(const Tally& o) {
    checked += o.checked;
    skipped += o.skipped;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

constexpr int kCriteria = 12;

struct Outcome {
  Tally tally[kCriteria];
  std::optional<Rational> ratio_opt;
  std::optional<Rational> ratio_lp;
};

Outcome evaluate(const Instance& inst) {
  Outcome o;
  const Graph& g = inst.graph;
  PipelineOptions options;
  options.id = inst.id;
  options.parallel = false;

  PipelineRun run;
  try {
    run = run_algorithm(g, options);
  } catch (const std::exception& e) {
    for (auto& t : o.tally) t.record(inst.id, false, std::string("pipeline failed: ") + e.what());
    return o;
  }
  const long long opt = oracle::held_karp_opt(g).cost;
  o.ratio_opt = Rational(static_cast<long>(run.path.cost)) / Rational(static_cast<long>(opt));
  o.ratio_lp = run.report.ratio_lp;

  o.tally[0].record(inst.id, verify::cost_within_three_halves(run, opt));
  o.tally[1].record(inst.id, verify::lp_below_opt(run, opt));
  o.tally[2].record(inst.id, verify::join_bound(run));
  o.tally[3].record(inst.id, verify::tree_bound(g, run));
  o.tally[4].record(inst.id, verify::narrow_cuts_match_brute(g, run));
  o.tally[4].record(inst.id, verify::chain_nested(g, run));
  o.tally[5].record(inst.id, verify::single_crossing(g, run));
  o.tally[6].record(inst.id, verify::parity_on_st_cuts(g, run));
  o.tally[7].record(inst.id, verify::level_unions_connected(g, run));
  o.tally[8].record(inst.id, verify::lp_matches_enumeration(g, run));
  o.tally[9].record(inst.id, verify::tjoin_matches_brute(g, run));
  o.tally[9].record(inst.id, verify::matching_matches_enumeration(g, run));
  o.tally[10].record(inst.id, verify::output_valid(g, run));

  options.parallel = true;
  const std::string first = report_to_json(run_algorithm(g, options).report).dump(2);
  const std::string second = report_to_json(run_algorithm(g, options).report).dump(2);
  o.tally[11].record(inst.id, first == second, "JSON reports differ between identical runs");
  return o;
}

/// Extra matching instances with random metrics, independent of the corpus T sets.
Tally random_matchings() {
  Tally t;
  std::mt19937_64 rng(kCorpusSeed + 1);
  for (int trial = 0; trial < kMatchingTrials; ++trial) {
    const int k = 2 * (1 + static_cast<int>(rng() % 5));
    CostMatrix d(k);
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v) d.set(u, v, 1 + static_cast<int>(rng() % 9));
    std::vector<int> pts(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pts[static_cast<std::size_t>(i)] = i;
    const long long got = min_weight_perfect_matching(pts, d).weight;
    const long long want = oracle::brute_matching_weight(pts, d);
    t.record("matching-" + std::to_string(trial), got == want,
             "matching " + std::to_string(got) + " vs enumeration " + std::to_string(want));
  }
  return t;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto corpus = build_corpus();
  std::vector<Outcome> outcomes(corpus.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < corpus.size(); ++i) outcomes[i] = evaluate(corpus[i]);

  Tally totals[kCriteria];
  std::optional<Rational> max_ratio_opt;
  std::optional<Rational> max_ratio_lp;
  for (const auto& o : outcomes) {
    for (int c = 0; c < kCriteria; ++c) totals[c].merge(o.tally[c]);
    if (o.ratio_opt && (!max_ratio_opt || *o.ratio_opt > *max_ratio_opt)) max_ratio_opt = o.ratio_opt;
    if (o.ratio_lp && (!max_ratio_lp || *o.ratio_lp > *max_ratio_lp)) max_ratio_lp = o.ratio_lp;
  }
  totals[9].merge(random_matchings());

  const char* names[kCriteria] = {
      "approximation: cost <= 3/2 OPT",
      "LP lower bound: lp <= OPT",
      "T-join bound: |F| <= lp/2",
      "tree bound: |J| = n-1 <= lp",
      "narrow cuts equal enumeration and are nested",
      "single crossing: |J cap delta(S_i)| = 1",
      "parity: T-odd s-t cuts cross J evenly",
      "level unions induce connected support",
      "LP engine equals enumerated LP",
      "T-join and matching equal enumeration",
      "output validity",
      "determinism: byte-identical JSON",
  };

  bool all_ok = true;
  std::printf("corpus: %zu instances (n in 4..10), seed %#llx\n", corpus.size(),
              static_cast<unsigned long long>(kCorpusSeed));
  for (int c = 0; c < kCriteria; ++c) {
    const auto& t = totals[c];
    const bool ok = t.violations.empty() && t.checked > 0;
    all_ok = all_ok && ok;
    std::string extra;
    if (c == 0 && max_ratio_opt)
      extra = ", max cost/OPT " + to_fraction_string(*max_ratio_opt);
    if (c == 2 && max_ratio_lp)
      extra = ", max cost/lp " + to_fraction_string(*max_ratio_lp);
    std::printf("[%s] %2d %-46s checked %d, skipped %d, violations %zu%s\n", ok ? "PASS" : "FAIL", c + 1, names[c],
                t.checked, t.skipped, t.violations.size(), extra.c_str());
    for (std::size_t v = 0; v < t.violations.size() && v < 5; ++v)
      std::printf("       %s\n", t.violations[v].c_str());
  }
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  std::printf("elapsed %.1f s\n", took.count());
  return all_ok ? 0 : 1;
}
