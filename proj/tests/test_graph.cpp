#include "doctest.h"

#include "stpath/graph.hpp"
#include "test_support.hpp"

#include <random>

using namespace stpath;
using stpath::testing::edge_of;

TEST_CASE("parse_graph accepts the edge-list format") {
  const Graph p4 = parse_graph("4 3 0 3\n0 1\n1 2\n2 3");
  CHECK(p4.n() == 4);
  CHECK(p4.m() == 3);
  CHECK(p4.s() == 0);
  CHECK(p4.t() == 3);
  CHECK(p4.edge(1) == Edge{1, 2});

  const Graph star = parse_graph("# center 1\n4 3 0 2\n1 0\n1 2\n\n1 3\n");
  CHECK(star.incident(1).size() == 3);
  CHECK(star.incident(0).size() == 1);
  CHECK(star.t() == 2);
}

TEST_CASE("parse_graph rejects invalid input") {
  CHECK_THROWS_AS(parse_graph("3 2 0 0\n0 1\n1 2"), GraphError);  // s = t
  CHECK_THROWS_AS(parse_graph(""), GraphError);
  CHECK_THROWS_AS(parse_graph("4 3 0\n0 1\n1 2\n2 3"), GraphError);
  CHECK_THROWS_AS(parse_graph("4 3 0 3\n0 1\n1 2"), GraphError);       // missing line
  CHECK_THROWS_AS(parse_graph("3 2 0 2\n0 1\n1 0"), GraphError);       // duplicate
  CHECK_THROWS_AS(parse_graph("3 2 0 2\n0 1\n1 1"), GraphError);       // self-loop
  CHECK_THROWS_AS(parse_graph("4 2 0 3\n0 1\n2 3"), GraphError);       // disconnected
  CHECK_THROWS_AS(parse_graph("3 2 0 2\n0 1\n1 5"), GraphError);       // out of range
  CHECK_THROWS_AS(parse_graph("3 2 0 7\n0 1\n1 2"), GraphError);
  CHECK_THROWS_AS(parse_graph("3 2 0 2\n0 1\n1 x"), GraphError);
  CHECK_THROWS_AS(parse_graph("3 2 0 2\n0 1\n1 2 9"), GraphError);
}

TEST_CASE("cut_edges and partition_cut") {
  const Graph p4 = gen_named("p4");
  const Graph star = gen_named("star");

  CHECK(cut_edges(p4, VertexSet(4, {0})).indices() == std::vector<int>{edge_of(p4, 0, 1)});
  CHECK(cut_edges(p4, VertexSet(4, {0, 1})).indices() == std::vector<int>{edge_of(p4, 1, 2)});
  CHECK(cut_edges(star, VertexSet(4, {0, 3})).indices() == std::vector<int>{edge_of(star, 1, 0), edge_of(star, 1, 3)});
  CHECK_THROWS(cut_edges(p4, VertexSet(4)));
  CHECK_THROWS(cut_edges(p4, VertexSet::full(4)));

  CHECK(partition_cut(p4, Partition(4, {{0}, {1}, {2}, {3}})).size() == 3);
  CHECK(partition_cut(p4, Partition(4, {{0, 1, 2, 3}})).empty());
  CHECK(partition_cut(p4, Partition(4, {{0, 1}, {2, 3}})).indices() == std::vector<int>{edge_of(p4, 1, 2)});
  CHECK_THROWS(Partition(4, {{0, 1}, {1, 2, 3}}));
  CHECK_THROWS(Partition(4, {{0, 1}, {2}}));
  CHECK_THROWS(Partition(4, {{0, 1}, {}, {2, 3}}));
}

TEST_CASE("cut and partition properties on random graphs") {
  std::mt19937_64 rng(7);
  for (const Graph& g : testing::random_corpus(40, 3, 10, 11)) {
    for (int trial = 0; trial < 10; ++trial) {
      VertexSet side(g.n());
      for (int v = 0; v < g.n(); ++v)
        if (rng() & 1) side.insert(v);
      if (side.empty() || side.size() == g.n()) continue;
      CHECK(cut_edges(g, side) == cut_edges(g, side.complement()));

      std::vector<int> labels(static_cast<std::size_t>(g.n()));
      for (auto& l : labels) l = static_cast<int>(rng() % 4);
      const Partition w = Partition::from_labels(labels);
      EdgeSet unite(g.m());
      for (const auto& block : w.blocks()) {
        if (static_cast<int>(block.size()) == g.n()) continue;
        for (int e : cut_edges(g, VertexSet::from_members(g.n(), block)).indices())
          if (!unite.contains(e)) unite.add(e);
      }
      CHECK(partition_cut(g, w) == unite);
    }
  }
}

TEST_CASE("metric_completion") {
  const CostMatrix p4 = metric_completion(gen_named("p4"));
  CHECK(p4.at(0, 3) == 3);
  CHECK(p4.at(0, 2) == 2);
  CHECK(p4.at(1, 2) == 1);

  const CostMatrix star = metric_completion(gen_named("star"));
  CHECK(star.at(0, 2) == 2);
  CHECK(star.at(0, 3) == 2);
  CHECK(star.at(2, 3) == 2);

  const CostMatrix c5 = metric_completion(gen_named("c5"));
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v) CHECK(c5.at(u, v) == std::min(std::abs(u - v), 5 - std::abs(u - v)));
}

TEST_CASE("metric completion satisfies the triangle inequality") {
  for (const Graph& g : testing::random_corpus(30, 2, 12, 5)) {
    const CostMatrix c = metric_completion(g);
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v) {
        REQUIRE(c.at(u, v) == c.at(v, u));
        for (int w = 0; w < g.n(); ++w) REQUIRE(c.at(u, w) <= c.at(u, v) + c.at(v, w));
      }
    for (int e = 0; e < g.m(); ++e) CHECK(c.at(g.edge(e).u, g.edge(e).v) == 1);
  }
}

TEST_CASE("eulerian_trail") {
  const Graph p4 = gen_named("p4");
  EdgeSet all(3);
  for (int e = 0; e < 3; ++e) all.add(e);
  CHECK(eulerian_trail(p4, all, 0, 3).vertices == std::vector<int>{0, 1, 2, 3});

  const Graph star = gen_named("star");
  EdgeSet mg(3);
  mg.add(edge_of(star, 1, 0));
  mg.add(edge_of(star, 1, 2));
  mg.add(edge_of(star, 1, 3), 2);
  const Trail trail = eulerian_trail(star, mg, 0, 2);
  CHECK(trail.vertices == std::vector<int>{0, 1, 3, 1, 2});
  CHECK(trail.length() == 4);

  const Graph k3 = gen_named("k3");
  EdgeSet cycle(3);
  for (int e = 0; e < 3; ++e) cycle.add(e);
  CHECK_THROWS_AS(eulerian_trail(k3, cycle, 0, 0), std::logic_error);
  CHECK_THROWS_AS(eulerian_trail(k3, cycle, 0, 1), std::logic_error);  // every degree is even

  EdgeSet partial(3);
  partial.add(edge_of(p4, 0, 1));
  CHECK_THROWS_AS(eulerian_trail(p4, partial, 0, 1), std::logic_error);  // not spanning
  CHECK_THROWS(mg.add(edge_of(star, 1, 3)));                              // multiplicity cap
}

TEST_CASE("eulerian trails use every edge exactly its multiplicity") {
  for (const Graph& g : testing::random_corpus(40, 2, 12, 99)) {
    const EdgeSet mg = testing::doubled_tree_walk(g);
    const Trail trail = eulerian_trail(g, mg, g.s(), g.t());
    REQUIRE(trail.vertices.front() == g.s());
    REQUIRE(trail.vertices.back() == g.t());
    std::vector<int> used(static_cast<std::size_t>(g.m()), 0);
    for (std::size_t i = 0; i < trail.edges.size(); ++i) {
      const Edge e = g.edge(trail.edges[i]);
      CHECK(((e.u == trail.vertices[i] && e.v == trail.vertices[i + 1]) ||
             (e.v == trail.vertices[i] && e.u == trail.vertices[i + 1])));
      ++used[static_cast<std::size_t>(trail.edges[i])];
    }
    for (int e = 0; e < g.m(); ++e) CHECK(used[static_cast<std::size_t>(e)] == mg.multiplicity(e));

    const HamiltonianPath path = shortcut(trail, metric_completion(g), g.s(), g.t());
    CHECK(path.cost <= trail.length());
    CHECK(static_cast<int>(path.order.size()) == g.n());
  }
}

TEST_CASE("shortcut") {
  const Graph p4 = gen_named("p4");
  const auto path = shortcut(Trail{{0, 1, 2, 3}, {0, 1, 2}}, metric_completion(p4), 0, 3);
  CHECK(path.order == std::vector<int>{0, 1, 2, 3});
  CHECK(path.cost == 3);

  const Graph star = gen_named("star");
  const auto sp = shortcut(Trail{{0, 1, 3, 1, 2}, {}}, metric_completion(star), 0, 2);
  CHECK(sp.order == std::vector<int>{0, 1, 3, 2});
  CHECK(sp.cost == 4);

  // s=0, a=1, b=2, c=3, t=4 with edges s-a, a-b, a-c, c-t; trail s-a-b-a-c-t
  const Graph g(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}, 0, 4);
  const auto gp = shortcut(Trail{{0, 1, 2, 1, 3, 4}, {}}, metric_completion(g), 0, 4);
  CHECK(gp.order == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(gp.cost == 5);

  // t met early is skipped and kept at the end
  const Graph c5 = gen_named("c5");
  const auto early = shortcut(Trail{{0, 1, 2, 3, 4, 3, 2}, {}}, metric_completion(c5), 0, 2);
  CHECK(early.order == std::vector<int>{0, 1, 3, 4, 2});

  CHECK_THROWS(shortcut(Trail{{0, 1, 2}, {}}, metric_completion(p4), 0, 2));
  CHECK_THROWS(shortcut(Trail{{1, 2, 3}, {}}, metric_completion(p4), 0, 3));
}
