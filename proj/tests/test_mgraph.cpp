#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "enclose/error.hpp"
#include "enclose/mgraph.hpp"

using namespace enclose;

namespace {

Multigraph random_multigraph(int n, int edges, int max_mult, std::mt19937_64& rng) {
  Multigraph g(n);
  std::uniform_int_distribution<int> vert(0, n - 1);
  for (int t = 0; t < edges; ++t) {
    const Vertex u = vert(rng);
    const Vertex v = vert(rng);
    if (u == v || g.multiplicity(u, v) >= max_mult) continue;
    g.add_edges(u, v);
  }
  return g;
}

bool connected_without(const Multigraph& g, VertexPair skip) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Vertex> stack{skip.u};
  seen[static_cast<std::size_t>(skip.u)] = true;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y = 0; y < n; ++y) {
      int mult = x == y ? 0 : g.multiplicity(x, y);
      if (VertexPair(x, y) == skip) --mult;
      if (mult > 0 && !seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        stack.push_back(y);
      }
    }
  }
  return seen[static_cast<std::size_t>(skip.v)];
}

}  // namespace

TEST_CASE("loops count twice towards the degree") {
  Multigraph g(3);
  g.add_edges(0, 0, 2);
  g.add_edges(0, 1);
  CHECK(g.degree(0) == 5);
  CHECK(g.degree(1) == 1);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_loops());
  g.remove_edges(0, 0, 2);
  CHECK_FALSE(g.has_loops());
  CHECK(g.degree(0) == 1);
}

TEST_CASE("removing absent edges throws") {
  Multigraph g(2);
  g.add_edges(0, 1);
  CHECK_THROWS_AS(g.remove_edges(0, 1, 2), PreconditionError);
  CHECK_THROWS_AS(g.multiplicity(0, 2), PreconditionError);
  CHECK(g.multiplicity(1, 0) == 1);
}

TEST_CASE("pair counts are lexicographic") {
  Multigraph g(4);
  g.add_edges(2, 3);
  g.add_edges(1, 0, 2);
  g.add_edges(0, 3);
  const auto pcs = g.pair_counts();
  REQUIRE(pcs.size() == 3);
  CHECK(pcs[0] == PairCount{VertexPair(0, 1), 2});
  CHECK(pcs[1] == PairCount{VertexPair(0, 3), 1});
  CHECK(pcs[2] == PairCount{VertexPair(2, 3), 1});
}

TEST_CASE("complete multigraph") {
  const Multigraph g = complete_multigraph(5, 3);
  CHECK(g.edge_count() == 30);
  for (Vertex v = 0; v < 5; ++v) CHECK(g.degree(v) == 12);
  CHECK(g.induced_prefix(3) == complete_multigraph(3, 3));
}

TEST_CASE("components are ordered by smallest vertex") {
  Multigraph g(5);
  g.add_edges(3, 1);
  g.add_edges(4, 2);
  const auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<Vertex>{0});
  CHECK(comps[1] == std::vector<Vertex>{1, 3});
  CHECK(comps[2] == std::vector<Vertex>{2, 4});
  CHECK(component_labels(g) == std::vector<int>{0, 1, 2, 1, 2});
}

TEST_CASE("bridges") {
  Multigraph path(3);
  path.add_edges(0, 1);
  path.add_edges(1, 2);
  CHECK(bridges(path) == std::vector<VertexPair>{{0, 1}, {1, 2}});

  Multigraph doubled(2);
  doubled.add_edges(0, 1, 2);
  CHECK(bridges(doubled).empty());
  CHECK(is_two_edge_connected_spanning(doubled));

  Multigraph cycle(4);
  for (Vertex v = 0; v < 4; ++v) cycle.add_edges(v, (v + 1) % 4);
  CHECK(bridges(cycle).empty());
  CHECK(is_two_edge_connected_spanning(cycle));
  cycle.add_edges(0, 0);
  CHECK(is_two_edge_connected_spanning(cycle));

  Multigraph isolated(3);
  isolated.add_edges(0, 1, 2);
  CHECK_FALSE(is_two_edge_connected_spanning(isolated));
  CHECK(is_two_edge_connected_spanning(Multigraph(1)));
}

TEST_CASE("property: degree sum is twice the edge count") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Multigraph g = random_multigraph(6, 12, 3, rng);
    g.add_edges(trial % 6, trial % 6, trial % 2);
    int sum = 0;
    for (Vertex v = 0; v < 6; ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("property: bridges are exactly the disconnecting single edges") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Multigraph g = random_multigraph(7, 9, 2, rng);
    std::vector<VertexPair> naive;
    for (const auto& pc : g.pair_counts()) {
      if (!connected_without(g, pc.pair)) naive.push_back(pc.pair);
    }
    CHECK(bridges(g) == naive);
  }
}

TEST_CASE("property: 2-edge-connected iff connected and bridgeless") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const Multigraph g = random_multigraph(5, 10, 2, rng);
    const bool expected = components(g).size() == 1 && bridges(g).empty();
    CHECK(is_two_edge_connected_spanning(g) == expected);
  }
}
