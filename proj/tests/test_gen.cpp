#include "doctest.h"

#include "stpath/gen.hpp"
#include "stpath/oracle.hpp"
#include "stpath/pipeline.hpp"

using namespace stpath;

TEST_CASE("random trees and complete graphs") {
  const Graph tree = gen_random(4, 3, 1);
  CHECK(tree.n() == 4);
  CHECK(tree.m() == 3);

  const Graph k5 = gen_random(5, 10, 9);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) CHECK(k5.find_edge(u, v) >= 0);

  CHECK(gen_random(2, 1, 0).m() == 1);
  CHECK_THROWS_AS(gen_random(5, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random(5, 11, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random(1, 0, 1), std::invalid_argument);
}

TEST_CASE("random generation is deterministic per seed") {
  CHECK(gen_random(6, 7, 42).to_text() == gen_random(6, 7, 42).to_text());
  bool differs = false;
  for (std::uint64_t seed = 0; seed < 8 && !differs; ++seed)
    differs = gen_random(9, 14, seed).to_text() != gen_random(9, 14, seed + 100).to_text();
  CHECK(differs);
}

TEST_CASE("random graphs have the requested shape") {
  for (int n = 2; n <= 12; ++n)
    for (int m = n - 1; m <= n * (n - 1) / 2; m += 3) {
      const Graph g = gen_random(n, m, static_cast<std::uint64_t>(n * 1000 + m));
      CHECK(g.n() == n);
      CHECK(g.m() == m);
      CHECK(g.s() != g.t());
    }
}

TEST_CASE("theta gap family") {
  CHECK_THROWS_AS(gen_gap(1), std::invalid_argument);
  const Graph g2 = gen_gap(2);
  CHECK(g2.n() == 5);
  CHECK(g2.m() == 6);
  CHECK(g2.s() == 0);
  CHECK(g2.t() == 1);
  const Graph g3 = gen_gap(3);
  CHECK(g3.n() == 8);
  CHECK(g3.m() == 9);
  CHECK(metric_completion(g3).at(0, 1) == 3);

  for (int k = 2; k <= 3; ++k) {
    const Graph g = gen_gap(k);
    const auto rep = run_pipeline(g, true, "gap");
    REQUIRE(rep.opt);
    CHECK(Rational(static_cast<long>(*rep.opt)) >= rep.lp_value);
    CHECK(Rational(static_cast<long>(2 * rep.cost)) <= Rational(static_cast<long>(3 * *rep.opt)));
  }
}

TEST_CASE("named instances") {
  CHECK(gen_named("p4").to_text() == "4 3 0 3\n0 1\n1 2\n2 3\n");
  CHECK(gen_named("k3").m() == 3);
  CHECK(gen_named("c5").t() == 2);
  CHECK(gen_named("edge").n() == 2);
  CHECK(gen_named("star").s() == 0);
  CHECK_THROWS_AS(gen_named("k9"), std::invalid_argument);
}
