// Command-line front end: solve single instances, generate instances, run batches.

#include "stpath/batch.hpp"
#include "stpath/gen.hpp"
#include "stpath/graph.hpp"
#include "stpath/pipeline.hpp"
#include "stpath/report.hpp"
#include "stpath/separation.hpp"

#include "CLI11.hpp"

#include <omp.h>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LP-based approximation for the graphic s-t path TSP"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string solve_file;
  std::string solve_json;
  bool solve_verify = false;
  bool solve_timings = false;
  auto* solve = app.add_subcommand("solve", "Run the algorithm on one edge-list file");
  solve->add_option("file", solve_file, "Graph file: 'n m s t' header then m lines 'u v'")->required();
  solve->add_option("--json", solve_json, "Write the JSON report here ('-' for stdout)");
  solve->add_flag("--verify", solve_verify, "Cross-check every stage against brute-force oracles");
  solve->add_flag("--timings", solve_timings, "Include per-stage wall-clock timings in the JSON report");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);
  int gen_n = 0;
  int gen_m = 0;
  std::uint64_t gen_seed = 0;
  int gen_k = 0;
  std::string gen_name;
  std::string gen_out = "-";
  auto* gen_random = gen->add_subcommand("random", "Random connected graph");
  gen_random->add_option("--n", gen_n, "Vertex count")->required();
  gen_random->add_option("--m", gen_m, "Edge count, n-1 <= m <= n(n-1)/2")->required();
  gen_random->add_option("--seed", gen_seed, "Random seed")->required();
  gen_random->add_option("--out", gen_out, "Output file ('-' for stdout)");
  auto* gen_gap = gen->add_subcommand("gap", "Theta graph: three s-t paths of length k");
  gen_gap->add_option("--k", gen_k, "Path length, k >= 2")->required();
  gen_gap->add_option("--out", gen_out, "Output file ('-' for stdout)");
  auto* gen_named = gen->add_subcommand("named", "Small fixed instance");
  gen_named->add_option("name", gen_name, "p4 | star | k3 | c5 | edge")->required();
  gen_named->add_option("--out", gen_out, "Output file ('-' for stdout)");

  std::string batch_source;
  bool batch_verify = false;
  bool batch_timings = false;
  std::string batch_csv;
  std::string batch_json;
  int threads = 0;
  auto* batch = app.add_subcommand("batch", "Run many instances and aggregate the ratios");
  batch->add_option("source", batch_source,
                    "Directory of graph files, or random:COUNT:NMIN-NMAX:SEED, or gap:KMIN-KMAX")
      ->required();
  batch->add_flag("--verify", batch_verify, "Cross-check every instance against the oracles");
  batch->add_flag("--timings", batch_timings, "Include per-stage timings in the JSON output");
  batch->add_option("--csv", batch_csv, "Write per-instance CSV here ('-' for stdout)");
  batch->add_option("--json", batch_json, "Write reports and summary as JSON ('-' for stdout)");
  app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (*solve) {
      const stpath::Graph g = stpath::read_graph_file(solve_file);
      if (g.n() > stpath::kPartitionSeparationLimit)
        std::cerr << "warning: n = " << g.n() << " exceeds the exhaustive partition-separation limit ("
                  << stpath::kPartitionSeparationLimit << ")\n";
      stpath::PipelineOptions options;
      options.id = std::filesystem::path(solve_file).filename().string();
      options.verify = solve_verify;
      const auto run = stpath::run_algorithm(g, options);
      if (solve_json != "-") std::cout << stpath::format_report(run.report);
      if (!solve_json.empty())
        write_text(solve_json, stpath::report_to_json(run.report, solve_timings).dump(2) + "\n");
      return 0;
    }

    if (*gen) {
      std::optional<stpath::Graph> g;
      if (*gen_random) g = stpath::gen_random(gen_n, gen_m, gen_seed);
      if (*gen_gap) g = stpath::gen_gap(gen_k);
      if (*gen_named) g = stpath::gen_named(gen_name);
      write_text(gen_out, g->to_text());
      return 0;
    }

    if (*batch) {
      const auto items = stpath::load_batch_source(batch_source);
      const auto summary = stpath::run_batch(items, batch_verify);
      if (!batch_csv.empty()) write_text(batch_csv, stpath::summary_to_csv(summary));
      if (!batch_json.empty()) write_text(batch_json, stpath::summary_to_json(summary, batch_timings).dump(2) + "\n");
      if (batch_csv != "-" && batch_json != "-") {
        std::cout << "instances " << items.size() << ", succeeded " << summary.reports.size() << ", failed "
                  << summary.failures.size() << '\n';
        if (summary.max_ratio_lp)
          std::cout << "max cost/lp  " << stpath::to_fraction_string(*summary.max_ratio_lp) << " ("
                    << stpath::to_double(*summary.max_ratio_lp) << ")\n";
        if (summary.max_ratio_opt)
          std::cout << "max cost/opt " << stpath::to_fraction_string(*summary.max_ratio_opt) << " ("
                    << stpath::to_double(*summary.max_ratio_opt) << ")\n";
      }
      for (const auto& f : summary.failures) std::cerr << "FAILED " << f.id << ": " << f.error << '\n';
      return summary.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
