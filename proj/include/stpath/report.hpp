#pragma once

#include "stpath/pipeline.hpp"

#include "json.hpp"

#include <string>

namespace stpath {

/// Rationals are written as exact "p/q" strings with a decimal companion field.
/// Timings are wall-clock and vary between runs, so they are opt-in.
nlohmann::ordered_json report_to_json(const SolutionReport& report, bool include_timings = false);
/// Inverse of report_to_json; decimal companions are ignored.
SolutionReport report_from_json(const nlohmann::json& j);

/// id,n,m,lp_value,k,tree_size,join_size,cost,opt,ratio_lp,ratio_opt
std::string csv_header();
std::string csv_row(const SolutionReport& report);

/// Multi-line summary for terminals.
std::string format_report(const SolutionReport& report);

}  // namespace stpath
