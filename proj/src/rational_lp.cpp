#include "stpath/rational_lp.hpp"

#include <limits>
#include <stdexcept>

namespace stpath {

LinearProgram::LinearProgram(int n)
    : num_vars(n),
      objective(static_cast<std::size_t>(n)),
      lower(static_cast<std::size_t>(n)),
      upper(static_cast<std::size_t>(n)) {}

void LinearProgram::add_row(std::vector<Rational> coeffs, Rational rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    throw std::invalid_argument("row width does not match variable count");
  rows.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearProgram::validate() const {
  const auto n = static_cast<std::size_t>(num_vars);
  if (num_vars < 0 || objective.size() != n || lower.size() != n || upper.size() != n)
    throw std::invalid_argument("LP vectors do not match variable count");
  for (const auto& row : rows)
    if (row.coeffs.size() != n) throw std::invalid_argument("row width does not match variable count");
  for (std::size_t j = 0; j < n; ++j)
    if (upper[j] && *upper[j] < lower[j])
      throw std::invalid_argument("lower bound exceeds upper bound for variable " + std::to_string(j));
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Dense tableau over shifted variables x' = x - lower, all with lower bound 0.
// Columns: structural, then one surplus per row, then artificials.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : nv_(lp.num_vars), m_(static_cast<int>(lp.rows.size())) {
    int artificials = 0;
    std::vector<Rational> shifted_rhs(static_cast<std::size_t>(m_));
    for (int r = 0; r < m_; ++r) {
      const auto& row = lp.rows[static_cast<std::size_t>(r)];
      Rational b = row.rhs;
      for (int j = 0; j < nv_; ++j) b -= row.coeffs[static_cast<std::size_t>(j)] * lp.lower[static_cast<std::size_t>(j)];
      shifted_rhs[static_cast<std::size_t>(r)] = b;
      if (b > 0) ++artificials;
    }
    cols_ = nv_ + m_ + artificials;
    upper_.assign(static_cast<std::size_t>(cols_), std::nullopt);
    for (int j = 0; j < nv_; ++j) {
      const auto& u = lp.upper[static_cast<std::size_t>(j)];
      if (u) upper_[static_cast<std::size_t>(j)] = *u - lp.lower[static_cast<std::size_t>(j)];
    }
    at_upper_.assign(static_cast<std::size_t>(cols_), false);
    is_basic_.assign(static_cast<std::size_t>(cols_), false);
    rows_.assign(static_cast<std::size_t>(m_), std::vector<Rational>(static_cast<std::size_t>(cols_)));
    beta_.resize(static_cast<std::size_t>(m_));
    basis_.resize(static_cast<std::size_t>(m_));
    first_artificial_ = nv_ + m_;

    int next_art = first_artificial_;
    for (int r = 0; r < m_; ++r) {
      auto& t = rows_[static_cast<std::size_t>(r)];
      const auto& row = lp.rows[static_cast<std::size_t>(r)];
      const Rational& b = shifted_rhs[static_cast<std::size_t>(r)];
      const int surplus = nv_ + r;
      if (b > 0) {
        // a x' - s + art = b, art basic.
        for (int j = 0; j < nv_; ++j) t[static_cast<std::size_t>(j)] = row.coeffs[static_cast<std::size_t>(j)];
        t[static_cast<std::size_t>(surplus)] = -1;
        t[static_cast<std::size_t>(next_art)] = 1;
        set_basic(r, next_art);
        beta_[static_cast<std::size_t>(r)] = b;
        ++next_art;
      } else {
        // -a x' + s = -b, s basic.
        for (int j = 0; j < nv_; ++j) t[static_cast<std::size_t>(j)] = -row.coeffs[static_cast<std::size_t>(j)];
        t[static_cast<std::size_t>(surplus)] = 1;
        set_basic(r, surplus);
        beta_[static_cast<std::size_t>(r)] = -b;
      }
    }
  }

  bool has_artificials() const { return cols_ > first_artificial_; }

  // Returns false when the objective is unbounded below.
  bool minimize(const std::vector<Rational>& cost, const std::vector<bool>& frozen) {
    load_reduced_costs(cost);
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        if (is_basic_[ju] || frozen[ju]) continue;
        if (upper_[ju] && *upper_[ju] == 0) continue;
        if ((!at_upper_[ju] && d_[ju] < 0) || (at_upper_[ju] && d_[ju] > 0)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      if (!step(enter)) return false;
    }
  }

  // Artificials may stay basic at zero but never move off zero again.
  void pin_artificials() {
    for (int j = first_artificial_; j < cols_; ++j) upper_[static_cast<std::size_t>(j)] = Rational(0);
  }

  Rational value(int j) const {
    const auto ju = static_cast<std::size_t>(j);
    if (is_basic_[ju]) {
      for (int r = 0; r < m_; ++r)
        if (basis_[static_cast<std::size_t>(r)] == j) return beta_[static_cast<std::size_t>(r)];
    }
    return at_upper_[ju] ? *upper_[ju] : Rational(0);
  }

  int columns() const { return cols_; }
  int first_artificial() const { return first_artificial_; }

 private:
  void set_basic(int r, int j) {
    basis_[static_cast<std::size_t>(r)] = j;
    is_basic_[static_cast<std::size_t>(j)] = true;
  }

  void load_reduced_costs(const std::vector<Rational>& cost) {
    d_ = cost;
    for (int r = 0; r < m_; ++r) {
      const Rational& cb = cost[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])];
      if (cb == 0) continue;
      const auto& row = rows_[static_cast<std::size_t>(r)];
      for (int j = 0; j < cols_; ++j)
        if (row[static_cast<std::size_t>(j)] != 0) d_[static_cast<std::size_t>(j)] -= cb * row[static_cast<std::size_t>(j)];
    }
  }

  // One bounded-variable simplex step on entering column j (Bland tie-breaking).
  bool step(int j) {
    const auto ju = static_cast<std::size_t>(j);
    const int dir = at_upper_[ju] ? -1 : 1;

    std::optional<Rational> theta;
    int leave_row = -1;  // -1 with theta set means a bound flip of j
    int leave_var = std::numeric_limits<int>::max();
    bool leave_to_upper = false;

    if (upper_[ju]) {
      theta = *upper_[ju];
      leave_var = j;
    }
    for (int r = 0; r < m_; ++r) {
      const Rational& a = rows_[static_cast<std::size_t>(r)][ju];
      if (a == 0) continue;
      const int b = basis_[static_cast<std::size_t>(r)];
      const auto bu = static_cast<std::size_t>(b);
      // rate of change of the basic variable per unit step
      const Rational rate = dir > 0 ? Rational(-a) : a;
      Rational limit;
      bool to_upper = false;
      if (rate < 0) {
        limit = beta_[static_cast<std::size_t>(r)] / (-rate);
      } else {
        if (!upper_[bu]) continue;
        limit = (*upper_[bu] - beta_[static_cast<std::size_t>(r)]) / rate;
        to_upper = true;
      }
      if (!theta || limit < *theta || (limit == *theta && b < leave_var)) {
        theta = limit;
        leave_row = r;
        leave_var = b;
        leave_to_upper = to_upper;
      }
    }
    if (!theta) return false;

    for (int r = 0; r < m_; ++r) {
      const Rational& a = rows_[static_cast<std::size_t>(r)][ju];
      if (a == 0) continue;
      if (dir > 0)
        beta_[static_cast<std::size_t>(r)] -= a * *theta;
      else
        beta_[static_cast<std::size_t>(r)] += a * *theta;
    }

    if (leave_var == j) {
      at_upper_[ju] = !at_upper_[ju];
      return true;
    }

    const Rational entering_value = (at_upper_[ju] ? *upper_[ju] : Rational(0)) + (dir > 0 ? *theta : Rational(-*theta));
    const int out = basis_[static_cast<std::size_t>(leave_row)];
    is_basic_[static_cast<std::size_t>(out)] = false;
    at_upper_[static_cast<std::size_t>(out)] = leave_to_upper;
    at_upper_[ju] = false;
    set_basic(leave_row, j);
    beta_[static_cast<std::size_t>(leave_row)] = entering_value;
    pivot(leave_row, j);
    return true;
  }

  void pivot(int pr, int pc) {
    auto& prow = rows_[static_cast<std::size_t>(pr)];
    const Rational inv = 1 / prow[static_cast<std::size_t>(pc)];
    std::vector<int> nz;
    for (int j = 0; j < cols_; ++j) {
      auto& v = prow[static_cast<std::size_t>(j)];
      if (v == 0) continue;
      v *= inv;
      nz.push_back(j);
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      const Rational f = row[static_cast<std::size_t>(pc)];
      if (f == 0) return;
      for (int j : nz) row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
    };
    for (int r = 0; r < m_; ++r)
      if (r != pr) eliminate(rows_[static_cast<std::size_t>(r)]);
    eliminate(d_);
  }

  int nv_;
  int m_;
  int cols_ = 0;
  int first_artificial_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> beta_;
  std::vector<Rational> d_;
  std::vector<int> basis_;
  std::vector<bool> is_basic_;
  std::vector<bool> at_upper_;
  std::vector<std::optional<Rational>> upper_;
};

// GMP compares fractions by representation, so inputs built as mpq_class(p, q)
// must be reduced before any arithmetic.
LinearProgram canonical_copy(const LinearProgram& in) {
  LinearProgram lp = in;
  for (auto& c : lp.objective) c.canonicalize();
  for (auto& l : lp.lower) l.canonicalize();
  for (auto& u : lp.upper)
    if (u) u->canonicalize();
  for (auto& row : lp.rows) {
    row.rhs.canonicalize();
    for (auto& c : row.coeffs) c.canonicalize();
  }
  return lp;
}

}  // namespace

LpSolution solve(const LinearProgram& input) {
  input.validate();
  const LinearProgram lp = canonical_copy(input);
  Tableau tab(lp);
  const auto cols = static_cast<std::size_t>(tab.columns());
  std::vector<bool> frozen(cols, false);

  if (tab.has_artificials()) {
    std::vector<Rational> phase1(cols);
    for (int j = tab.first_artificial(); j < tab.columns(); ++j) phase1[static_cast<std::size_t>(j)] = 1;
    tab.minimize(phase1, frozen);
    Rational infeasibility;
    for (int j = tab.first_artificial(); j < tab.columns(); ++j) infeasibility += tab.value(j);
    if (infeasibility > 0) return {LpStatus::infeasible, {}, Rational(0)};
    tab.pin_artificials();
    for (int j = tab.first_artificial(); j < tab.columns(); ++j) frozen[static_cast<std::size_t>(j)] = true;
  }

  std::vector<Rational> phase2(cols);
  for (int j = 0; j < lp.num_vars; ++j) phase2[static_cast<std::size_t>(j)] = lp.objective[static_cast<std::size_t>(j)];
  if (!tab.minimize(phase2, frozen)) return {LpStatus::unbounded, {}, Rational(0)};

  LpSolution sol;
  sol.status = LpStatus::optimal;
  sol.values.resize(static_cast<std::size_t>(lp.num_vars));
  for (int j = 0; j < lp.num_vars; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    sol.values[ju] = lp.lower[ju] + tab.value(j);
    sol.objective += lp.objective[ju] * sol.values[ju];
  }
  for (const auto& row : lp.rows) {
    Rational lhs;
    for (int j = 0; j < lp.num_vars; ++j) lhs += row.coeffs[static_cast<std::size_t>(j)] * sol.values[static_cast<std::size_t>(j)];
    if (lhs < row.rhs) throw std::logic_error("simplex returned a point violating a row");
  }
  return sol;
}

}  // namespace stpath
