#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "enclose/error.hpp"
#include "enclose/oracle.hpp"

using namespace enclose;
using namespace enclose::oracle;

namespace {

Multigraph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  Multigraph g(n);
  for (auto [u, v] : edges) g.add_edges(u, v);
  return g;
}

std::uint64_t count(int n, int lambda, int k, bool dedup) {
  EnumerationOptions o;
  o.dedup = dedup;
  return enumerate_decompositions(n, lambda, k, o, [](const Decomposition&) {});
}

}  // namespace

TEST_CASE("exhaustive enclosure search") {
  const Decomposition g(complete_multigraph(3, 1),
                        {graph_of(3, {{0, 1}}), graph_of(3, {{0, 2}}), graph_of(3, {{1, 2}}), Multigraph(3)});
  const auto params = make_params(3, 5, 1, 2, 2, 4);
  const auto found = brute_force_enclose(g, params);
  CHECK(found.status == SearchStatus::kFound);
  REQUIRE(found.witness.has_value());
  CHECK(verify_enclosing(g, *found.witness, params).ok);
  CHECK(found.stats.solutions == 1);

  const Decomposition three(complete_multigraph(3, 1), {graph_of(3, {{0, 1}}), graph_of(3, {{0, 2}}), graph_of(3, {{1, 2}})});
  const auto none = brute_force_enclose(three, make_params(3, 5, 1, 2, 2, 3));
  CHECK(none.status == SearchStatus::kNone);
  CHECK_FALSE(none.witness.has_value());

  CHECK(brute_force_enclose(g, params, 3).status == SearchStatus::kBudget);
  CHECK_THROWS_AS(brute_force_enclose(g, make_params(3, 9, 1, 2, 2, 8)), CapExceeded);
}

TEST_CASE("an r-factorization already in place is its own enclosing") {
  const Decomposition cycle(complete_multigraph(3, 1), {complete_multigraph(3, 1)});
  const auto res = brute_force_enclose(cycle, make_params(3, 3, 1, 1, 2, 1));
  REQUIRE(res.status == SearchStatus::kFound);
  CHECK(res.witness->outer == cycle);
}

TEST_CASE("literal admissibility") {
  const std::vector<Multigraph> tri{complete_multigraph(3, 1)};
  CHECK_FALSE(brute_force_admissible(tri, 2));
  const std::vector<Multigraph> matching{graph_of(4, {{0, 1}, {2, 3}})};
  CHECK(brute_force_admissible(matching, 2));
}

TEST_CASE("enumeration counts") {
  CHECK(count(3, 1, 2, false) == 8);
  CHECK(count(3, 1, 3, false) == 27);
  // Frozen from an independent enumeration.
  CHECK(count(3, 1, 2, true) == 4);
  CHECK(count(3, 1, 3, true) == 5);
  CHECK(count(3, 1, 4, true) == 5);
  CHECK(count(4, 1, 2, true) == 32);
  CHECK(count(4, 1, 3, true) == 122);
  CHECK(count(3, 2, 2, true) == 14);
  CHECK(count(3, 2, 3, true) == 40);
  CHECK_THROWS_AS(count(6, 1, 2, true), CapExceeded);

  EnumerationOptions o;
  o.filter = [](const Decomposition& d) { return brute_force_admissible(d, 2); };
  const auto kept = all_decompositions(3, 1, 3, o);
  CHECK(kept.size() == 4);
  for (const auto& d : kept) {
    for (const auto& c : d.classes()) CHECK(c.edge_count() < 3);
  }
  CHECK(all_decompositions(4, 1, 3) == all_decompositions(4, 1, 3));
}

TEST_CASE("random admissible decompositions") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Decomposition d = random_admissible(6, 2, 5, 3, seed);
    CHECK(is_admissible(d, 3));
    CHECK(d == random_admissible(6, 2, 5, 3, seed));
  }
  CHECK(is_admissible(random_admissible(4, 1, 6, 2, 3), 2));
  CHECK_THROWS_AS(random_admissible(2, 3, 1, 2, 1), PreconditionError);
}
