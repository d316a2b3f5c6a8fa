#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "enclose/error.hpp"
#include "enclose/oracle.hpp"
#include "enclose/pipeline.hpp"

using namespace enclose;

namespace {

Multigraph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  Multigraph g(n);
  for (auto [u, v] : edges) g.add_edges(u, v);
  return g;
}

Decomposition paths_of_2k3() {
  return Decomposition(complete_multigraph(3, 2),
                       {graph_of(3, {{0, 1}, {1, 2}}), graph_of(3, {{0, 1}, {0, 2}}), graph_of(3, {{0, 2}, {1, 2}})});
}

}  // namespace

TEST_CASE("amalgamated triad facts") {
  const auto params = make_params(3, 4, 2, 2, 2, 3);
  const Triad t = build_amalgamated_triad(paths_of_2k3(), params);
  CHECK(t.vertex_count() == 4);
  CHECK(t.g == std::vector<int>{1, 1, 1, 1});
  CHECK(is_good_triad(t));
  for (int i = 0; i < 3; ++i) {
    CHECK(t.decomposition.color_class(i).multiplicity(3, 3) == 0);
    CHECK(t.decomposition.color_class(i).degree(3) == 2);
  }
  for (Vertex j = 0; j < 3; ++j) CHECK(t.graph().multiplicity(3, j) == 2);
  CHECK(t.pair_weight(0, 3) == 1);
}

TEST_CASE("triad preconditions") {
  const Decomposition tri(complete_multigraph(3, 1), {complete_multigraph(3, 1)});
  CHECK_THROWS_AS(build_amalgamated_triad(tri, make_params(3, 3, 1, 1, 2, 1)), PreconditionError);
  const Decomposition split(complete_multigraph(3, 2), {graph_of(3, {{0, 1}, {0, 1}}), graph_of(3, {{0, 2}, {1, 2}}),
                                                        graph_of(3, {{0, 2}, {1, 2}})});
  CHECK_THROWS_AS(build_amalgamated_triad(split, make_params(3, 4, 2, 2, 2, 3)), PreconditionError);

  Triad looped = build_amalgamated_triad(paths_of_2k3(), make_params(3, 4, 2, 2, 2, 3));
  looped.g[0] = 0;
  CHECK_FALSE(is_good_triad(looped));
}

TEST_CASE("detachment of a B-route decomposition") {
  const Decomposition g(complete_multigraph(3, 1),
                        {graph_of(3, {{0, 1}}), graph_of(3, {{0, 2}}), graph_of(3, {{1, 2}}), Multigraph(3)});
  const auto params = make_params(3, 5, 1, 2, 2, 4);
  const auto a = enclose_in_mu_kn(g, params, Regime::kB).decomposition;
  const Triad t = build_amalgamated_triad(a, params);
  CHECK(t.g[3] == 2);
  CHECK(t.graph().multiplicity(3, 3) == 2);

  const auto w = fair_detach(t, params);
  CHECK(verify_detachment(w, t, params).ok);
  CHECK(w.vertex_map == std::vector<Vertex>{0, 1, 2, 3, 3});
  CHECK(w.stats.splits >= 1);
  CHECK(restrict(w.result, 3) == a);
  CHECK(verify_enclosing(g, Enclosing{w.result, 3}, params).ok);
  CHECK(fair_detach(t, params, 5).result == fair_detach(t, params, 5).result);

  CHECK_THROWS_AS(fair_detach(t, params, 0, 1), BudgetExhausted);

  DetachmentWitness bad = w;
  bad.vertex_map[4] = 2;
  CHECK_FALSE(verify_detachment(bad, t, params).ok);
}

TEST_CASE("pipeline on the padding route") {
  const auto params = make_params(8, 16, 1, 2, 3, 10);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Decomposition g = oracle::random_admissible(8, 1, 10, 2, seed);
    const auto res = enclose_decomposition(g, params, seed, kDefaultDetachBudget, Regime::kPadding);
    CHECK(verify_enclosing(g, res.enclosing, params).ok);
    CHECK(restrict(res.enclosing, 8) == res.extension.decomposition);
  }
}

TEST_CASE("property: pipeline finds an enclosing whenever the oracle does") {
  const auto params = make_params(3, 4, 1, 2, 2, 3);
  for (const auto& g : oracle::all_decompositions(3, 1, 3)) {
    const bool exists = oracle::brute_force_enclose(g, params).status == oracle::SearchStatus::kFound;
    bool built = true;
    try {
      enclose_decomposition(g, params);
    } catch (const PreconditionError&) {
      built = false;
    }
    CHECK(exists == built);
  }
}
