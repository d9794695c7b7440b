#include "stpath/report.hpp"

#include <iomanip>
#include <sstream>

namespace stpath {

using nlohmann::json;
using nlohmann::ordered_json;

nlohmann::ordered_json report_to_json(const SolutionReport& r, bool include_timings) {
  ordered_json j;
  j["id"] = r.id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["s"] = r.s;
  j["t"] = r.t;
  j["lp_value"] = to_fraction_string(r.lp_value);
  j["lp_value_decimal"] = to_double(r.lp_value);
  j["lp_iterations"] = r.lp_iterations;
  j["k"] = r.k;
  j["narrow_cuts"] = r.narrow_cuts;
  j["levels"] = r.levels;
  j["fallback_tree"] = r.fallback_tree;
  j["tree_size"] = r.tree_size;
  j["tree_edges"] = r.tree_edges;
  j["wrong_degree"] = r.wrong_degree;
  j["join_size"] = r.join_size;
  j["join_edges"] = r.join_edges;
  j["trail"] = r.trail;
  j["path"] = r.path;
  j["cost"] = r.cost;
  j["opt"] = r.opt ? ordered_json(*r.opt) : ordered_json(nullptr);
  j["ratio_lp"] = to_fraction_string(r.ratio_lp);
  j["ratio_lp_decimal"] = to_double(r.ratio_lp);
  j["ratio_opt"] = r.ratio_opt ? ordered_json(to_fraction_string(*r.ratio_opt)) : ordered_json(nullptr);
  j["ratio_opt_decimal"] = r.ratio_opt ? ordered_json(to_double(*r.ratio_opt)) : ordered_json(nullptr);
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back(ordered_json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  if (include_timings) {
    ordered_json timings = ordered_json::array();
    for (const auto& t : r.timings) timings.push_back(ordered_json{{"stage", t.stage}, {"ms", t.millis}});
    j["timings"] = std::move(timings);
  }
  return j;
}

SolutionReport report_from_json(const nlohmann::json& j) {
  SolutionReport r;
  r.id = j.at("id").get<std::string>();
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.s = j.at("s").get<int>();
  r.t = j.at("t").get<int>();
  r.lp_value = parse_fraction(j.at("lp_value").get<std::string>());
  r.lp_iterations = j.at("lp_iterations").get<int>();
  r.k = j.at("k").get<int>();
  r.narrow_cuts = j.at("narrow_cuts").get<std::vector<std::vector<int>>>();
  r.levels = j.at("levels").get<std::vector<std::vector<int>>>();
  r.fallback_tree = j.at("fallback_tree").get<bool>();
  r.tree_size = j.at("tree_size").get<int>();
  r.tree_edges = j.at("tree_edges").get<std::vector<std::pair<int, int>>>();
  r.wrong_degree = j.at("wrong_degree").get<std::vector<int>>();
  r.join_size = j.at("join_size").get<int>();
  r.join_edges = j.at("join_edges").get<std::vector<std::pair<int, int>>>();
  r.trail = j.at("trail").get<std::vector<int>>();
  r.path = j.at("path").get<std::vector<int>>();
  r.cost = j.at("cost").get<long long>();
  if (!j.at("opt").is_null()) r.opt = j.at("opt").get<long long>();
  r.ratio_lp = parse_fraction(j.at("ratio_lp").get<std::string>());
  if (!j.at("ratio_opt").is_null()) r.ratio_opt = parse_fraction(j.at("ratio_opt").get<std::string>());
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), parse_check_status(c.at("status").get<std::string>()),
                        c.at("detail").get<std::string>()});
  if (j.contains("timings"))
    for (const auto& t : j.at("timings")) r.timings.push_back({t.at("stage").get<std::string>(), t.at("ms").get<double>()});
  return r;
}

std::string csv_header() { return "id,n,m,lp_value,k,tree_size,join_size,cost,opt,ratio_lp,ratio_opt"; }

std::string csv_row(const SolutionReport& r) {
  std::ostringstream out;
  out << r.id << ',' << r.n << ',' << r.m << ',' << to_fraction_string(r.lp_value) << ',' << r.k << ',' << r.tree_size
      << ',' << r.join_size << ',' << r.cost << ',' << (r.opt ? std::to_string(*r.opt) : "") << ','
      << to_fraction_string(r.ratio_lp) << ',' << (r.ratio_opt ? to_fraction_string(*r.ratio_opt) : "");
  return out.str();
}

namespace {

std::string list(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

std::string sequence(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "-" : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::string format_report(const SolutionReport& r) {
  std::ostringstream out;
  out << std::setprecision(6);
  out << "instance   " << r.id << "  (n=" << r.n << ", m=" << r.m << ", s=" << r.s << ", t=" << r.t << ")\n";
  out << "lp value   " << to_fraction_string(r.lp_value) << " (" << to_double(r.lp_value) << ") after "
      << r.lp_iterations << " LP solves\n";
  out << "narrow     k=" << r.k;
  for (const auto& c : r.narrow_cuts) out << ' ' << list(c);
  out << '\n';
  out << "tree       |J|=" << r.tree_size << (r.fallback_tree ? " (no narrow cuts: BFS tree of G)" : "") << '\n';
  out << "wrong deg  T=" << list(r.wrong_degree) << '\n';
  out << "t-join     |F|=" << r.join_size << '\n';
  out << "trail      " << sequence(r.trail) << '\n';
  out << "path       " << sequence(r.path) << "  cost " << r.cost << '\n';
  out << "ratio/lp   " << to_fraction_string(r.ratio_lp) << " (" << to_double(r.ratio_lp) << ")\n";
  if (r.opt)
    out << "opt        " << *r.opt << "  ratio/opt " << to_fraction_string(*r.ratio_opt) << " ("
        << to_double(*r.ratio_opt) << ")\n";
  for (const auto& c : r.checks)
    out << "check      " << std::left << std::setw(30) << c.name << to_string(c.status)
        << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
  return out.str();
}

}  // namespace stpath
