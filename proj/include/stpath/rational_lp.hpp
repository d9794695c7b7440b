#pragma once

#include "stpath/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stpath {

/// coeffs · x >= rhs
struct LpRow {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// minimize objective · x subject to ">=" rows and lower <= x <= upper.
/// A missing upper bound means the variable is unbounded above.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;

  LinearProgram() = default;
  /// Zero objective, bounds [0, inf).
  explicit LinearProgram(int n);

  void add_row(std::vector<Rational> coeffs, Rational rhs);
  /// Throws std::invalid_argument when widths or bounds are inconsistent.
  void validate() const;
};

enum class LpStatus { optimal, infeasible, unbounded };

std::string to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> values;
  Rational objective;
};

/// Bounded-variable primal simplex over exact rationals. Phase 1 uses artificial
/// variables; both phases pivot with Bland's rule, so the result is a deterministic
/// extreme point.
LpSolution solve(const LinearProgram& lp);

}  // namespace stpath
