#include "doctest.h"

#include "stpath/errors.hpp"
#include "stpath/oracle.hpp"
#include "stpath/tjoin.hpp"
#include "test_support.hpp"

#include <random>

using namespace stpath;
using stpath::testing::edge_of;

namespace {

VertexSet random_even_set(int n, std::mt19937_64& rng) {
  VertexSet t(n);
  for (int v = 0; v < n; ++v)
    if (rng() % 3 == 0) t.insert(v);
  if (t.size() % 2 == 1) {
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (t.contains(v)) t.erase(v);
    else t.insert(v);
  }
  return t;
}

}  // namespace

TEST_CASE("matching examples") {
  CostMatrix two(2);
  two.set(0, 1, 5);
  const std::vector<int> pair{0, 1};
  const auto m2 = min_weight_perfect_matching(pair, two);
  CHECK(m2.weight == 5);
  CHECK(m2.pairs == std::vector<std::pair<int, int>>{{0, 1}});

  // a-b and c-d cost 1, everything else 10
  CostMatrix four(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) four.set(u, v, 10);
  four.set(0, 1, 1);
  four.set(2, 3, 1);
  const std::vector<int> pts{0, 1, 2, 3};
  const auto m4 = min_weight_perfect_matching(pts, four);
  CHECK(m4.weight == 2);
  CHECK(m4.pairs == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

  // the crossing pairing a-c, b-d is the cheap one
  CostMatrix cross(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) cross.set(u, v, 3);
  cross.set(0, 2, 2);
  cross.set(1, 3, 2);
  const auto mc = min_weight_perfect_matching(pts, cross);
  CHECK(mc.weight == 4);
  CHECK(mc.pairs == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

  CHECK(min_weight_perfect_matching(std::vector<int>{}, cross).weight == 0);
  CHECK_THROWS_AS(min_weight_perfect_matching(std::vector<int>{0, 1, 2}, cross), std::invalid_argument);
  std::vector<int> many(22);
  for (int i = 0; i < 22; ++i) many[static_cast<std::size_t>(i)] = i;
  CHECK_THROWS_AS(min_weight_perfect_matching(many, CostMatrix(22)), ScaleLimitError);
}

TEST_CASE("T-join examples") {
  const Graph p4 = gen_named("p4");
  CHECK(min_tjoin(p4, VertexSet(4)).edges.empty());
  const auto full = min_tjoin(p4, VertexSet(4, {0, 3}));
  CHECK(full.edges.size() == 3);
  CHECK(full.matching.weight == 3);

  const Graph star = gen_named("star");
  const auto f = min_tjoin(star, VertexSet(4, {1, 3}));
  CHECK(f.edges.indices() == std::vector<int>{edge_of(star, 1, 3)});

  // paths 0-1-2 and 1-2-3 overlap on 1-2, which cancels
  const auto overlap = min_tjoin(p4, VertexSet(4, {0, 1, 2, 3}));
  CHECK(overlap.edges.indices() == std::vector<int>{edge_of(p4, 0, 1), edge_of(p4, 2, 3)});

  CHECK_THROWS_AS(min_tjoin(p4, VertexSet(4, {0})), std::invalid_argument);
}

TEST_CASE("T-joins match brute force and the cut LP") {
  std::mt19937_64 rng(31);
  int compared = 0;
  for (const Graph& g : testing::random_corpus(80, 2, 9, 61)) {
    const VertexSet t = random_even_set(g.n(), rng);
    const TJoin f = min_tjoin(g, t);
    CHECK(odd_degree_vertices(g, f.edges) == t);
    CHECK(f.edges.size() <= f.matching.weight);
    CHECK(f.matching.weight == f.edges.size());
    if (g.m() <= oracle::kTJoinEdgeLimit) {
      CHECK(f.edges.size() == oracle::brute_tjoin(g, t));
      ++compared;
    }
    CHECK(Rational(f.edges.size()) == oracle::tjoin_lp_value(g, t));
  }
  CHECK(compared > 30);
}

TEST_CASE("matching equals enumeration on random metrics") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const int k = 2 * (1 + static_cast<int>(rng() % 5));
    CostMatrix d(k);
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v) d.set(u, v, 1 + static_cast<int>(rng() % 12));
    std::vector<int> pts(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pts[static_cast<std::size_t>(i)] = i;
    const Matching m = min_weight_perfect_matching(pts, d);
    CHECK(m.weight == oracle::brute_matching_weight(pts, d));
    long long sum = 0;
    std::vector<int> hit(static_cast<std::size_t>(k), 0);
    for (auto [a, b] : m.pairs) {
      CHECK(a < b);
      sum += d.at(a, b);
      ++hit[static_cast<std::size_t>(a)];
      ++hit[static_cast<std::size_t>(b)];
    }
    CHECK(sum == m.weight);
    for (int h : hit) CHECK(h == 1);
  }
}
