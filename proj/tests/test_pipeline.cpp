#include "doctest.h"

#include "stpath/batch.hpp"
#include "stpath/pipeline.hpp"
#include "stpath/report.hpp"
#include "test_support.hpp"

#include <filesystem>
#include <fstream>

using namespace stpath;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("stpath_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("path instance end to end") {
  const auto rep = run_pipeline(gen_named("p4"), true, "p4");
  CHECK(rep.lp_value == 3);
  CHECK(rep.k == 3);
  CHECK(rep.tree_size == 3);
  CHECK(rep.wrong_degree.empty());
  CHECK(rep.join_size == 0);
  CHECK(rep.path == std::vector<int>{0, 1, 2, 3});
  CHECK(rep.cost == 3);
  CHECK(rep.opt == 3);
  CHECK(rep.ratio_lp == 1);
  CHECK(rep.ratio_opt == Rational(1));
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.status != CheckStatus::failed, c.name);
}

TEST_CASE("star instance end to end") {
  const auto rep = run_pipeline(gen_named("star"), true, "star");
  CHECK(rep.lp_value == 4);
  CHECK(rep.k == 2);
  CHECK(rep.narrow_cuts == std::vector<std::vector<int>>{{0}, {0, 1, 3}});
  CHECK(rep.levels == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});
  CHECK(rep.tree_size == 3);
  CHECK(rep.wrong_degree == std::vector<int>{1, 3});
  CHECK(rep.join_size == 1);
  CHECK(rep.join_edges == std::vector<std::pair<int, int>>{{1, 3}});
  CHECK(rep.trail == std::vector<int>{0, 1, 3, 1, 2});
  CHECK(rep.path == std::vector<int>{0, 1, 3, 2});
  CHECK(rep.cost == 4);
  CHECK(rep.opt == 4);
  CHECK(rep.ratio_opt == Rational(1));
}

TEST_CASE("triangle instance end to end") {
  const auto rep = run_pipeline(gen_named("k3"), true, "k3");
  CHECK(rep.lp_value == 2);
  CHECK(rep.tree_edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
  CHECK(rep.wrong_degree.empty());
  CHECK(rep.join_size == 0);
  CHECK(rep.path == std::vector<int>{0, 2, 1});
  CHECK(rep.cost == 2);
}

TEST_CASE("every verification check passes on random instances") {
  for (const Graph& g : testing::random_corpus(40, 2, 9, 1234)) {
    const auto rep = run_pipeline(g, true, "r");
    REQUIRE(rep.opt);
    CHECK(Rational(static_cast<long>(2 * rep.cost)) <= Rational(static_cast<long>(3 * *rep.opt)));
    CHECK(rep.lp_value <= Rational(static_cast<long>(*rep.opt)));
    int passed = 0;
    for (const auto& c : rep.checks) {
      CHECK_MESSAGE(c.status != CheckStatus::failed, c.name, ": ", c.detail);
      passed += c.status == CheckStatus::passed;
    }
    CHECK(passed >= 12);
  }
}

TEST_CASE("oversized instances fail in the relaxation stage") {
  try {
    run_pipeline(gen_random(13, 20, 3), false, "big");
    FAIL("expected a PipelineError");
  } catch (const PipelineError& e) {
    CHECK(e.stage() == "relaxation");
    CHECK(std::string(e.what()).find("stage 'relaxation'") == 0);
  }
}

TEST_CASE("JSON round trip and determinism") {
  const Graph g = gen_random(8, 13, 77);
  PipelineOptions options;
  options.id = "rt";
  options.verify = true;
  const auto rep = run_algorithm(g, options).report;

  const auto with_timings = report_to_json(rep, true);
  CHECK(with_timings.contains("timings"));
  CHECK(report_from_json(nlohmann::json::parse(with_timings.dump())) == rep);

  const auto plain = report_to_json(rep);
  CHECK_FALSE(plain.contains("timings"));
  auto stripped = rep;
  stripped.timings.clear();
  CHECK(report_from_json(nlohmann::json::parse(plain.dump())) == stripped);
  CHECK(plain.at("lp_value").get<std::string>().find('/') != std::string::npos);

  const auto again = run_algorithm(g, options).report;
  CHECK(report_to_json(again).dump(2) == plain.dump(2));

  options.parallel = false;
  const auto serial = run_algorithm(g, options).report;
  CHECK(report_to_json(serial).dump(2) == plain.dump(2));
}

TEST_CASE("CSV output") {
  const auto rep = run_pipeline(gen_named("star"), true, "star");
  CHECK(csv_header() == "id,n,m,lp_value,k,tree_size,join_size,cost,opt,ratio_lp,ratio_opt");
  CHECK(csv_row(rep) == "star,4,3,4/1,2,3,1,4,4,1/1,1/1");
  const auto plain = run_pipeline(gen_named("p4"), false, "p4");
  CHECK(csv_row(plain) == "p4,4,3,3/1,3,3,0,3,,1/1,");
  CHECK_FALSE(format_report(plain).empty());
}

TEST_CASE("batch over generator specs") {
  const auto items = load_genspec("random:20:3-8:5");
  REQUIRE(items.size() == 20);
  const auto summary = run_batch(items, true);
  CHECK(summary.ok());
  CHECK(summary.reports.size() == 20);
  REQUIRE(summary.max_ratio_opt);
  CHECK(*summary.max_ratio_opt <= Rational(3, 2));
  for (std::size_t i = 0; i < items.size(); ++i) CHECK(summary.reports[i].id == items[i].id);

  const auto gaps = load_genspec("gap:2-3");
  REQUIRE(gaps.size() == 2);
  CHECK(gaps[1].graph->n() == 8);

  CHECK_THROWS_AS(load_genspec("random:5:3"), std::invalid_argument);
  CHECK_THROWS_AS(load_genspec("gap:4-2"), std::invalid_argument);
  CHECK_THROWS_AS(load_genspec("banana"), std::invalid_argument);

  const auto csv = summary_to_csv(summary);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 21);
  CHECK(summary_to_json(summary).at("summary").at("instances") == 20);
}

TEST_CASE("batch over directories") {
  const fs::path empty = fresh_dir("empty");
  const auto none = run_batch(load_directory(empty.string()), false);
  CHECK(none.ok());
  CHECK(none.reports.empty());
  CHECK_FALSE(none.max_ratio_lp);

  const fs::path mixed = fresh_dir("mixed");
  write_file(mixed / "a.txt", gen_named("p4").to_text());
  write_file(mixed / "b.txt", "3 2 0 0\n0 1\n1 2\n");
  write_file(mixed / "c.txt", gen_named("star").to_text());
  const auto items = load_batch_source(mixed.string());
  REQUIRE(items.size() == 3);
  const auto summary = run_batch(items, false);
  CHECK_FALSE(summary.ok());
  CHECK(summary.reports.size() == 2);
  REQUIRE(summary.failures.size() == 1);
  CHECK(summary.failures[0].id == "b.txt");
  CHECK(*summary.max_ratio_lp == 1);

  fs::remove_all(empty);
  fs::remove_all(mixed);
}
