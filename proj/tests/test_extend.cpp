#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "enclose/error.hpp"
#include "enclose/extend.hpp"
#include "enclose/oracle.hpp"

using namespace enclose;

namespace {

Multigraph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  Multigraph g(n);
  for (auto [u, v] : edges) g.add_edges(u, v);
  return g;
}

Decomposition triangle_split(int extra_empty) {
  std::vector<Multigraph> cls{graph_of(3, {{0, 1}}), graph_of(3, {{0, 2}}), graph_of(3, {{1, 2}})};
  for (int i = 0; i < extra_empty; ++i) cls.emplace_back(3);
  return Decomposition(complete_multigraph(3, 1), std::move(cls));
}

bool encloses(const PartialDecomposition& s, const Decomposition& g) {
  for (int i = 0; i < g.k(); ++i) {
    for (const auto& pc : g.color_class(i).pair_counts()) {
      if (s.color_class(i).multiplicity(pc.pair) < pc.count) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("action names round-trip") {
  for (ActionKind k : {ActionKind::kPad, ActionKind::kColor, ActionKind::kRecolor, ActionKind::kMatchingAssign}) {
    CHECK(parse_action_kind(action_kind_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_action_kind("paint"), PreconditionError);
}

TEST_CASE("pad_to_p fills the empty class") {
  const Decomposition g = triangle_split(1);
  const auto params = make_params(3, 5, 1, 2, 2, 4);
  const auto res = pad_to_p(g, params);
  for (const auto& c : res.state.classes()) CHECK(c.edge_count() >= 1);
  REQUIRE(res.trace.actions.size() == 1);
  CHECK(res.trace.actions[0].kind == ActionKind::kPad);
  CHECK(res.trace.actions[0].color == 3);
  CHECK(replay(lift_to_mu_kn(g, params), res.trace) == res.state);
  CHECK(pad_to_p(g, params, 4).state == pad_to_p(g, params, 4).state);
  CHECK(is_admissible(res.state, 2));
}

TEST_CASE("matching extension on the C route") {
  const Decomposition g = triangle_split(0);
  const auto params = make_params(3, 4, 1, 3, 3, 3);
  const auto res = extend_to_r_via_matching(g, params);
  for (const auto& c : res.state.classes()) {
    CHECK(c.edge_count() >= 3);
    const auto pcs = c.pair_counts();
    CHECK_FALSE((c.edge_count() == 3 && pcs.size() == 1));
  }
  CHECK(is_admissible(res.state, 3));
  CHECK(encloses(res.state, g));
  CHECK(replay(lift_to_mu_kn(g, params), res.trace) == res.state);
  CHECK_THROWS_AS(extend_to_r_via_matching(g, make_params(3, 5, 1, 3, 3, 4)), PreconditionError);
}

TEST_CASE("color_one_edge keeps admissibility") {
  const Decomposition g = triangle_split(1);
  const auto params = make_params(3, 5, 1, 2, 2, 4);
  auto state = pad_to_p(g, params).state;
  while (state.is_strict()) {
    const int before = state.uncolored().edge_count();
    auto step = color_one_edge(state, params);
    CHECK(step.actions.size() == 1);
    CHECK(step.state.uncolored().edge_count() == before - 1);
    CHECK(is_admissible(step.state, 2));
    state = std::move(step.state);
  }
  CHECK_THROWS_AS(color_one_edge(state, params), PreconditionError);
}

// Colors spare edges depth-first until some uncolored edge fits no class.
bool find_blocked(PartialDecomposition& st, int r, long& budget, PartialDecomposition& hit, VertexPair& edge) {
  if (--budget < 0 || !st.is_strict()) return false;
  const auto pairs = st.uncolored().pair_counts();
  std::vector<int> first;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::vector<int> acc;
    for (int c = 0; c < st.k(); ++c) {
      st.color(c, pairs[i].pair.u, pairs[i].pair.v);
      if (is_admissible(st, r)) acc.push_back(c);
      st.uncolor(c, pairs[i].pair.u, pairs[i].pair.v);
    }
    if (acc.empty()) {
      hit = st;
      edge = pairs[i].pair;
      return true;
    }
    if (i == 0) first = std::move(acc);
  }
  for (int c : first) {
    st.color(c, pairs[0].pair.u, pairs[0].pair.v);
    if (find_blocked(st, r, budget, hit, edge)) return true;
    st.uncolor(c, pairs[0].pair.u, pairs[0].pair.v);
  }
  return false;
}

TEST_CASE("blocked edge takes the recoloring path") {
  const auto params = make_params(5, 8, 1, 2, 2, 7);
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 200 && found < 3; ++seed) {
    const Decomposition g = oracle::random_admissible(5, 1, 7, 2, seed);
    if (!check_c(g, params).overall()) continue;
    PartialDecomposition st = extend_to_r_via_matching(g, params, seed).state;
    PartialDecomposition hit;
    VertexPair edge;
    long budget = 20000;
    if (!find_blocked(st, 2, budget, hit, edge)) continue;
    ++found;
    // The blocking class holds r - 1 parallel copies of the edge.
    bool parallel = false;
    for (const auto& c : hit.classes()) parallel = parallel || c.multiplicity(edge) == 1;
    CHECK(parallel);
    const auto step = color_one_edge_with_recolor(hit, g, params, edge);
    CHECK(step.used_recolor);
    CHECK(is_admissible(step.state, 2));
    CHECK(encloses(step.state, g));
    PartialDecomposition st2 = hit;
    for (const auto& a : step.actions) {
      apply_action(st2, a);
      CHECK(is_admissible(st2, 2));
    }
    CHECK(st2 == step.state);
  }
  CHECK(found > 0);
}

TEST_CASE("almost-regular decompositions") {
  const int sizes[] = {3, 2, 0};
  const auto d = almost_regular_decompose(4, 1, sizes);
  CHECK(d.color_class(0).edge_count() == 3);
  CHECK(d.color_class(1).edge_count() == 2);
  CHECK(d.uncolored().edge_count() == 1);
  CHECK(is_almost_regular(d.classes()));
  const int over[] = {4, 3};
  CHECK_THROWS_AS(almost_regular_decompose(4, 1, over), PreconditionError);
  const int seeded[] = {5, 5, 2};
  CHECK(is_almost_regular(almost_regular_decompose(5, 2, seeded, 9).classes()));
  CHECK(almost_regular_decompose(5, 2, seeded, 9) == almost_regular_decompose(5, 2, seeded, 9));

  Multigraph star(4);
  star.add_edges(0, 1);
  star.add_edges(0, 2);
  const std::vector<Multigraph> uneven{star};
  CHECK_FALSE(is_almost_regular(uneven));
}

TEST_CASE("proper padding adds a matching to each class") {
  const auto params = make_params(8, 16, 1, 2, 3, 10);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Decomposition g = oracle::random_admissible(8, 1, 10, 2, seed);
    const auto res = proper_padding(g, params, seed);
    const Decomposition a = res.state.complete();
    for (int i = 0; i < 10; ++i) {
      for (Vertex v = 0; v < 8; ++v) CHECK(a.color_class(i).degree(v) - g.color_class(i).degree(v) <= 1);
    }
    CHECK(check_a_prime(a, params).overall());
  }
  const Decomposition tri(complete_multigraph(3, 1), {complete_multigraph(3, 1)});
  CHECK_THROWS_AS(proper_padding(tri, make_params(3, 4, 1, 2, 2, 3)), PreconditionError);
}

TEST_CASE("full extension to mu K_n on each route") {
  SUBCASE("B") {
    const Decomposition g = triangle_split(1);
    const auto params = make_params(3, 5, 1, 2, 2, 4);
    const auto res = enclose_in_mu_kn(g, params, Regime::kB);
    CHECK(check_a_prime(res.decomposition, params).overall());
    CHECK(replay(lift_to_mu_kn(g, params), res.trace).complete() == res.decomposition);
  }
  SUBCASE("C") {
    const Decomposition g = triangle_split(0);
    const auto params = make_params(3, 4, 1, 3, 3, 3);
    const auto res = enclose_in_mu_kn(g, params, Regime::kC);
    CHECK(check_a_prime(res.decomposition, params).overall());
  }
  SUBCASE("A' returns the input") {
    const auto params = make_params(3, 4, 2, 2, 2, 3);
    const Decomposition a(complete_multigraph(3, 2),
                          {graph_of(3, {{0, 1}, {1, 2}}), graph_of(3, {{0, 1}, {0, 2}}), graph_of(3, {{0, 2}, {1, 2}})});
    CHECK(enclose_in_mu_kn(a, params, Regime::kAPrime).decomposition == a);
  }
  SUBCASE("failing battery") {
    const Decomposition tri(complete_multigraph(3, 1), {complete_multigraph(3, 1), Multigraph(3), Multigraph(3), Multigraph(3)});
    CHECK_THROWS_AS(enclose_in_mu_kn(tri, make_params(3, 5, 1, 2, 2, 4), Regime::kB), PreconditionError);
  }
}

TEST_CASE("property: seeded B runs stay admissible at every action") {
  const auto params = make_params(4, 7, 1, 2, 2, 6);
  int runs = 0;
  for (std::uint64_t seed = 1; runs < 50 && seed < 500; ++seed) {
    const Decomposition g = oracle::random_admissible(4, 1, 6, 2, seed);
    if (!check_b(g, params).overall()) continue;
    ++runs;
    const auto res = enclose_in_mu_kn(g, params, Regime::kB, seed);
    replay(lift_to_mu_kn(g, params), res.trace, [&](const PartialDecomposition& s, const TraceAction&) {
      CHECK(is_admissible(s, 2));
      CHECK(encloses(s, g));
    });
  }
  CHECK(runs == 50);
}
