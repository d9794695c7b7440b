#include "stpath/oracle.hpp"

#include "stpath/rational_lp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

namespace stpath::oracle {

namespace {

void require(bool ok, const char* what, int limit) {
  if (!ok) throw ScaleLimitError(std::string(what) + " supports sizes up to " + std::to_string(limit));
}

using Mask = std::uint64_t;

Mask cut_mask(const Graph& g, std::uint32_t side) {
  Mask m = 0;
  for (int e = 0; e < g.m(); ++e) {
    const bool a = side >> g.edge(e).u & 1u;
    const bool b = side >> g.edge(e).v & 1u;
    if (a != b) m |= Mask{1} << e;
  }
  return m;
}

// Each set partition as a block label per vertex; block k is opened by its smallest vertex.
template <class Visit>
void for_each_partition(int n, Visit&& visit) {
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int v, int blocks) -> void {
    if (v == n) {
      visit(label, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[static_cast<std::size_t>(v)] = b;
      self(self, v + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(rec, 0, 0);
}

struct MaskRow {
  Mask edges;
  int rhs;
};

// Rows keyed by edge mask, keeping the largest right-hand side.
class RowTable {
 public:
  void add(Mask edges, int rhs) {
    auto [it, fresh] = rows_.emplace(edges, rhs);
    if (!fresh) it->second = std::max(it->second, rhs);
  }
  std::vector<MaskRow> rows() const {
    std::vector<MaskRow> out;
    for (const auto& [m, r] : rows_)
      if (r > 0) out.push_back({m, r});
    return out;
  }

 private:
  std::map<Mask, int> rows_;
};

// min 1·x subject to the given rows and 0 <= x <= upper, adding violated rows from
// the explicit list until none remain.
LpSolution row_generation(int m, const std::vector<MaskRow>& rows, std::optional<int> upper) {
  LinearProgram lp(m);
  for (int e = 0; e < m; ++e) {
    lp.objective[static_cast<std::size_t>(e)] = 1;
    if (upper) lp.upper[static_cast<std::size_t>(e)] = Rational(*upper);
  }
  std::vector<char> active(rows.size(), 0);
  for (;;) {
    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::optimal) throw std::logic_error("oracle LP is " + to_string(sol.status));

    mpz_class den = 1;
    for (const auto& v : sol.values) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    const bool narrow = den < (mpz_class(1) << 48);
    std::vector<__int128> num(static_cast<std::size_t>(m));
    if (narrow)
      for (int e = 0; e < m; ++e) {
        const auto& v = sol.values[static_cast<std::size_t>(e)];
        num[static_cast<std::size_t>(e)] = mpz_class(v.get_num() * (den / v.get_den())).get_si();
      }
    const __int128 unit = narrow ? den.get_si() : 0;

    // violation = rhs - lhs, scaled by den when narrow
    std::vector<std::pair<Rational, std::size_t>> violated;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (active[r]) continue;
      if (narrow) {
        __int128 lhs = 0;
        for (Mask bits = rows[r].edges; bits; bits &= bits - 1) lhs += num[static_cast<std::size_t>(std::countr_zero(bits))];
        const __int128 gap = unit * rows[r].rhs - lhs;
        if (gap > 0) violated.emplace_back(Rational(static_cast<long>(gap), 1), r);
      } else {
        Rational lhs;
        for (Mask bits = rows[r].edges; bits; bits &= bits - 1) lhs += sol.values[static_cast<std::size_t>(std::countr_zero(bits))];
        if (lhs < rows[r].rhs) violated.emplace_back(Rational(rows[r].rhs) - lhs, r);
      }
    }
    if (violated.empty()) return sol;
    std::stable_sort(violated.begin(), violated.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    const std::size_t take = std::min<std::size_t>(violated.size(), 16);
    for (std::size_t i = 0; i < take; ++i) {
      const auto& row = rows[violated[i].second];
      std::vector<Rational> coeffs(static_cast<std::size_t>(m));
      for (int e = 0; e < m; ++e)
        if (row.edges >> e & 1u) coeffs[static_cast<std::size_t>(e)] = 1;
      lp.add_row(std::move(coeffs), Rational(row.rhs));
      active[violated[i].second] = 1;
    }
  }
}

}  // namespace

OptResult held_karp_opt(const Graph& g) {
  const int n = g.n();
  require(n <= kHeldKarpLimit, "held_karp_opt", kHeldKarpLimit);
  const CostMatrix c = metric_completion(g);
  const int s = g.s();
  const int t = g.t();
  const std::size_t states = std::size_t{1} << n;
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<int> best(states * static_cast<std::size_t>(n), kInf);
  auto at = [&](std::size_t mask, int v) -> int& { return best[mask * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)]; };

  at(std::size_t{1} << s, s) = 0;
  const std::size_t full = states - 1;
  const std::size_t without_t = full ^ (std::size_t{1} << t);
  for (std::size_t mask = 1; mask < states; ++mask) {
    if (!(mask >> s & 1u)) continue;
    if ((mask >> t & 1u) && mask != full) continue;
    for (int v = 0; v < n; ++v) {
      const int cur = at(mask, v);
      if (cur >= kInf) continue;
      for (int w = 0; w < n; ++w) {
        if (mask >> w & 1u) continue;
        if (w == t && mask != without_t) continue;
        int& next = at(mask | (std::size_t{1} << w), w);
        next = std::min(next, cur + c.at(v, w));
      }
    }
  }

  OptResult r;
  r.cost = at(full, t);
  std::size_t mask = full;
  int v = t;
  r.order.push_back(t);
  while (v != s) {
    const std::size_t prev = mask ^ (std::size_t{1} << v);
    int from = -1;
    for (int u = 0; u < n && from < 0; ++u)
      if ((prev >> u & 1u) && at(prev, u) < kInf && at(prev, u) + c.at(u, v) == at(mask, v)) from = u;
    mask = prev;
    v = from;
    r.order.push_back(v);
  }
  std::reverse(r.order.begin(), r.order.end());
  return r;
}

LpResult enumerate_lp(const Graph& g) {
  const int n = g.n();
  require(n <= kEnumerateLpLimit, "enumerate_lp", kEnumerateLpLimit);
  RowTable table;
  for_each_partition(n, [&](const std::vector<int>& label, int blocks) {
    Mask m = 0;
    for (int e = 0; e < g.m(); ++e)
      if (label[static_cast<std::size_t>(g.edge(e).u)] != label[static_cast<std::size_t>(g.edge(e).v)]) m |= Mask{1} << e;
    table.add(m, blocks - 1);
  });
  const std::uint32_t all = (1u << n) - 1;
  const std::uint32_t terminals = (1u << g.s()) | (1u << g.t());
  for (std::uint32_t side = 1; side < all; ++side)
    if (std::popcount(side & terminals) % 2 == 0) table.add(cut_mask(g, side), 2);

  const LpSolution sol = row_generation(g.m(), table.rows(), 2);
  return {FractionalSolution(sol.values), sol.objective};
}

std::vector<VertexSet> brute_narrow_cuts(const Graph& g, const FractionalSolution& x) {
  const int n = g.n();
  require(n <= kNarrowCutLimit, "brute_narrow_cuts", kNarrowCutLimit);
  std::vector<VertexSet> out;
  for (std::uint32_t side = 0; side < (1u << n); ++side) {
    if (!(side >> g.s() & 1u) || (side >> g.t() & 1u)) continue;
    Rational value;
    for (int e = 0; e < g.m(); ++e)
      if ((side >> g.edge(e).u & 1u) != (side >> g.edge(e).v & 1u)) value += x[e];
    if (value >= 2) continue;
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (side >> v & 1u) s.insert(v);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

int brute_tjoin(const Graph& g, const VertexSet& terminals) {
  const int m = g.m();
  require(m <= kTJoinEdgeLimit, "brute_tjoin", kTJoinEdgeLimit);
  std::uint32_t target = 0;
  for (int v : terminals.members()) target |= 1u << v;
  if (g.n() > 32) throw ScaleLimitError("brute_tjoin supports at most 32 vertices");

  int best = std::numeric_limits<int>::max();
  std::uint32_t parity = 0;
  int size = 0;
  std::uint32_t gray = 0;
  for (std::uint32_t i = 0; i < (1u << m); ++i) {
    if (i > 0) {
      const int flip = std::countr_zero(i);
      gray ^= 1u << flip;
      parity ^= (1u << g.edge(flip).u) ^ (1u << g.edge(flip).v);
      size += (gray >> flip & 1u) ? 1 : -1;
    }
    if (parity == target) best = std::min(best, size);
  }
  if (best == std::numeric_limits<int>::max()) throw std::logic_error("no T-join exists");
  return best;
}

long long brute_matching_weight(std::span<const int> points, const CostMatrix& dist) {
  const int k = static_cast<int>(points.size());
  if (k % 2) throw std::invalid_argument("perfect matching needs an even number of points");
  require(k <= kMatchingPointLimit, "brute_matching_weight", kMatchingPointLimit);
  std::vector<int> rest(points.begin(), points.end());
  auto rec = [&](auto&& self, std::vector<int>& left) -> long long {
    if (left.empty()) return 0;
    long long best = std::numeric_limits<long long>::max();
    const int a = left.front();
    for (std::size_t j = 1; j < left.size(); ++j) {
      std::vector<int> next;
      for (std::size_t i = 1; i < left.size(); ++i)
        if (i != j) next.push_back(left[i]);
      best = std::min(best, dist.at(a, left[j]) + self(self, next));
    }
    return best;
  };
  return rec(rec, rest);
}

Rational tjoin_lp_value(const Graph& g, const VertexSet& terminals) {
  const int n = g.n();
  require(n <= kTJoinLpLimit, "tjoin_lp_value", kTJoinLpLimit);
  if (terminals.size() % 2) throw std::invalid_argument("|T| must be even");
  std::uint32_t tmask = 0;
  for (int v : terminals.members()) tmask |= 1u << v;
  RowTable table;
  for (std::uint32_t side = 1; side < (1u << n) - 1; ++side)
    if (std::popcount(side & tmask) % 2 == 1) table.add(cut_mask(g, side), 1);
  return row_generation(g.m(), table.rows(), std::nullopt).objective;
}

Rational brute_min_cut(const Graph& g, const FractionalSolution& x, int u, int v) {
  const int n = g.n();
  require(n <= kMinCutLimit, "brute_min_cut", kMinCutLimit);
  if (u == v) throw std::invalid_argument("brute_min_cut needs distinct vertices");
  std::optional<Rational> best;
  for (std::uint32_t side = 0; side < (1u << n); ++side) {
    if (!(side >> u & 1u) || (side >> v & 1u)) continue;
    Rational value;
    for (int e = 0; e < g.m(); ++e)
      if ((side >> g.edge(e).u & 1u) != (side >> g.edge(e).v & 1u)) value += x[e];
    if (!best || value < *best) best = value;
  }
  return *best;
}

std::optional<std::string> find_relaxation_violation(const Graph& g, const FractionalSolution& x) {
  const int n = g.n();
  require(n <= kEnumerateLpLimit, "find_relaxation_violation", kEnumerateLpLimit);
  for (int e = 0; e < g.m(); ++e)
    if (x[e] < 0 || x[e] > 2) return "bound violated on edge " + std::to_string(e);

  const std::uint32_t terminals = (1u << g.s()) | (1u << g.t());
  for (std::uint32_t side = 1; side < (1u << n) - 1; ++side) {
    if (std::popcount(side & terminals) % 2) continue;
    Rational value;
    for (int e = 0; e < g.m(); ++e)
      if ((side >> g.edge(e).u & 1u) != (side >> g.edge(e).v & 1u)) value += x[e];
    if (value < 2) return "even cut with mask " + std::to_string(side) + " has value " + to_fraction_string(value);
  }

  std::optional<std::string> found;
  for_each_partition(n, [&](const std::vector<int>& label, int blocks) {
    if (found) return;
    Rational value;
    for (int e = 0; e < g.m(); ++e)
      if (label[static_cast<std::size_t>(g.edge(e).u)] != label[static_cast<std::size_t>(g.edge(e).v)]) value += x[e];
    if (value < blocks - 1)
      found = "partition with " + std::to_string(blocks) + " blocks has value " + to_fraction_string(value);
  });
  return found;
}

}  // namespace stpath::oracle
