#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "enclose/conditions.hpp"
#include "enclose/error.hpp"
#include "enclose/oracle.hpp"

#include <random>

using namespace enclose;

namespace {

Multigraph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  Multigraph g(n);
  for (auto [u, v] : edges) g.add_edges(u, v);
  return g;
}

Decomposition triangle_split() {
  return Decomposition(complete_multigraph(3, 1),
                       {graph_of(3, {{0, 1}}), graph_of(3, {{0, 2}}), graph_of(3, {{1, 2}}), Multigraph(3)});
}

}  // namespace

TEST_CASE("decomposition must partition the base") {
  CHECK_NOTHROW(triangle_split());
  CHECK_THROWS_AS(Decomposition(complete_multigraph(3, 1), {graph_of(3, {{0, 1}})}), PreconditionError);
  CHECK_THROWS_AS(Decomposition(complete_multigraph(3, 1), {graph_of(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}})}),
                  PreconditionError);
}

TEST_CASE("partial decomposition tracks uncolored edges") {
  PartialDecomposition pd(triangle_split(), complete_multigraph(3, 2));
  CHECK(pd.is_strict());
  CHECK(pd.uncolored().edge_count() == 3);
  pd.color(3, 0, 1);
  CHECK(pd.color_class(3).multiplicity(0, 1) == 1);
  CHECK_THROWS_AS(pd.color(3, 0, 1), PreconditionError);
  pd.recolor(0, 1, 3, 2);
  CHECK(pd.color_class(2).edge_count() == 2);
  pd.uncolor(2, 0, 1);
  CHECK(pd.uncolored().multiplicity(0, 1) == 1);
  CHECK_THROWS_AS(pd.complete(), PreconditionError);
}

TEST_CASE("admissibility examples") {
  SUBCASE("triangle is not 2-admissible") {
    const auto res = class_admissible(graph_of(3, {{0, 1}, {1, 2}, {0, 2}}), 2, 4);
    CHECK_FALSE(res.admissible);
    CHECK(res.violation->bullet == AdmissibilityBullet::kLowDegreeVertices);
    CHECK(res.violation->color == 4);
  }
  SUBCASE("matching and path are 2-admissible") {
    CHECK(class_admissible(graph_of(4, {{0, 1}, {2, 3}}), 2).admissible);
    CHECK(class_admissible(graph_of(3, {{0, 1}, {1, 2}}), 2).admissible);
  }
  SUBCASE("a doubled edge closes a 2-regular component") {
    CHECK_FALSE(class_admissible(graph_of(3, {{0, 1}, {0, 1}}), 2).admissible);
    CHECK(class_admissible(graph_of(3, {{0, 1}, {0, 1}}), 3).admissible);
  }
  SUBCASE("degree above r") {
    const auto res = class_admissible(graph_of(4, {{0, 1}, {0, 2}, {0, 3}}), 2);
    CHECK(res.violation->bullet == AdmissibilityBullet::kDegree);
    CHECK(res.violation->vertex == 0);
  }
  SUBCASE("cutedge with a saturated side") {
    // Side {0, 1, 2} has degrees 3, 3, 3 once the cutedge 2-3 is counted.
    const Multigraph g = graph_of(4, {{0, 1}, {0, 1}, {1, 2}, {0, 2}, {2, 3}});
    const auto res = class_admissible(g, 3);
    CHECK_FALSE(res.admissible);
    CHECK(res.violation->bullet == AdmissibilityBullet::kCutedge);
    CHECK(res.violation->cutedge == VertexPair(2, 3));
  }
}

TEST_CASE("class size counters") {
  const Decomposition d(complete_multigraph(3, 2), {graph_of(3, {{0, 1}, {0, 1}}), graph_of(3, {{0, 2}, {1, 2}, {0, 2}}),
                                                    graph_of(3, {{1, 2}}), Multigraph(3)});
  CHECK(s_count(d, 0) == 1);
  CHECK(s_count(d, 1) == 1);
  CHECK(s_count(d, 2) == 1);
  CHECK(s_uv_count(d, 2, 0, 1) == 1);
  CHECK(s_uv_count(d, 1, 1, 2) == 1);
  CHECK(s_uv_count(d, 2, 1, 2) == 0);
}

TEST_CASE("property: admissibility agrees with the literal reading on K5") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    // Random decompositions, admissible or not.
    std::mt19937_64 rng(seed);
    std::vector<Multigraph> cls(4, Multigraph(5));
    for (Vertex u = 0; u < 5; ++u) {
      for (Vertex v = u + 1; v < 5; ++v) {
        for (int t = 0; t < 2; ++t) cls[rng() % 4].add_edges(u, v);
      }
    }
    const Decomposition d(complete_multigraph(5, 2), std::move(cls));
    for (int r = 2; r <= 5; ++r) CHECK(static_cast<bool>(is_admissible(d, r)) == oracle::brute_force_admissible(d, r));
  }
}

TEST_CASE("verify_enclosing and restrict") {
  const Decomposition g = triangle_split();
  const auto params = make_params(3, 5, 1, 2, 2, 4);
  const auto found = oracle::brute_force_enclose(g, params);
  REQUIRE(found.witness.has_value());
  CHECK(verify_enclosing(g, *found.witness, params).ok);

  const Decomposition inner = restrict(*found.witness, 3);
  for (int i = 0; i < 4; ++i) {
    for (const auto& pc : g.color_class(i).pair_counts()) CHECK(inner.color_class(i).multiplicity(pc.pair) >= pc.count);
  }

  // Swapping one edge between classes breaks regularity or containment.
  std::vector<Multigraph> cls(found.witness->outer.classes().begin(), found.witness->outer.classes().end());
  const auto pc = g.color_class(0).pair_counts().front();
  cls[0].remove_edges(pc.pair.u, pc.pair.v);
  cls[1].add_edges(pc.pair.u, pc.pair.v);
  const Enclosing bad{Decomposition(complete_multigraph(5, 2), cls), 3};
  const auto rep = verify_enclosing(g, bad, params);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.diagnostics.empty());

  const Decomposition three(complete_multigraph(3, 1), {graph_of(3, {{0, 1}}), graph_of(3, {{0, 2}, {1, 2}}), Multigraph(3)});
  CHECK_THROWS_AS(verify_enclosing(three, *found.witness, params), PreconditionError);
}
