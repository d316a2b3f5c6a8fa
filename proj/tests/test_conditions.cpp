#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "enclose/conditions.hpp"
#include "enclose/error.hpp"
#include "enclose/oracle.hpp"

using namespace enclose;

namespace {

Multigraph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  Multigraph g(n);
  for (auto [u, v] : edges) g.add_edges(u, v);
  return g;
}

}  // namespace

TEST_CASE("parameters") {
  const auto p = make_params(3, 5, 1, 2, 2, 4);
  CHECK(p.p == Rational(1));
  CHECK(p.factorization_arithmetic());
  CHECK(make_params(3, 5, 1, 3, 3, 4).p == Rational(3, 2));
  CHECK_FALSE(make_params(3, 5, 1, 3, 3, 4).factorization_arithmetic());
  CHECK_THROWS_AS(make_params(3, 5, 2, 1, 2, 4), PreconditionError);
  CHECK_THROWS_AS(make_params(3, 2, 1, 1, 2, 4), PreconditionError);
  CHECK_THROWS_AS(make_params(3, 5, 1, 2, 1, 4), PreconditionError);
}

TEST_CASE("B battery") {
  const Decomposition g(complete_multigraph(3, 1),
                        {graph_of(3, {{0, 1}}), graph_of(3, {{0, 2}}), graph_of(3, {{1, 2}}), Multigraph(3)});
  const auto rep = check_b(g, make_params(3, 5, 1, 2, 2, 4));
  CHECK(rep.overall());
  CHECK(rep.first_failure() == nullptr);

  const Decomposition three(complete_multigraph(3, 1), {graph_of(3, {{0, 1}}), graph_of(3, {{0, 2}}), graph_of(3, {{1, 2}})});
  const auto broken = check_b(three, make_params(3, 5, 1, 2, 2, 3));
  CHECK_FALSE(broken.ok("B1"));
  CHECK(broken.ok("B2"));
  CHECK(broken.first_failure()->name == "B1");
  CHECK_THROWS_AS(check_b(g, make_params(3, 4, 1, 2, 2, 4)), PreconditionError);
}

TEST_CASE("C battery on a single triangle class") {
  const Decomposition tri(complete_multigraph(3, 1), {graph_of(3, {{0, 1}, {1, 2}, {0, 2}})});
  const auto rep = check_c(tri, make_params(3, 4, 1, 2, 2, 1));
  CHECK_FALSE(rep.ok("C2"));
  CHECK_FALSE(rep.overall());
}

TEST_CASE("padding constant") {
  CHECK(padding_constant(2, 1, 3) == Rational(1, 4));
  CHECK(padding_constant(3, 3, 4) == Rational(0));
  CHECK(padding_constant(4, 3, 3) == Rational(1, 8));
  CHECK_THROWS_AS(padding_constant(2, 1, 4), PreconditionError);
}

TEST_CASE("regimes") {
  CHECK(regime_for(make_params(3, 5, 1, 2, 2, 4)) == Regime::kB);
  CHECK(regime_for(make_params(3, 4, 1, 2, 2, 3)) == Regime::kC);
  CHECK(regime_for(make_params(3, 4, 1, 4, 2, 6)) == Regime::kOutOfRegime);
  CHECK(regime_for(make_params(3, 4, 2, 2, 2, 3)) == Regime::kAPrime);
  CHECK(regime_for(make_params(3, 3, 1, 1, 2, 1)) == Regime::kOutOfRegime);
  CHECK(regime_for(make_params(8, 12, 1, 2, 3, 10)) == Regime::kPadding);
  CHECK_THROWS_AS(check_regime(Decomposition(complete_multigraph(3, 1), {complete_multigraph(3, 1)}),
                               make_params(3, 3, 1, 1, 2, 1), Regime::kOutOfRegime),
                  PreconditionError);
}

// Existence per exhaustive search against the battery, over every
// decomposition (up to renaming colors) of several small families.
TEST_CASE("property: battery holds iff an enclosing exists") {
  struct Family {
    int n, m, lambda, mu, r, k;
  };
  const Family families[] = {
      {3, 5, 1, 2, 2, 4}, {3, 5, 1, 3, 3, 4}, {3, 5, 1, 4, 4, 4}, {3, 6, 1, 2, 2, 5}, {3, 6, 1, 2, 5, 2},
      {3, 4, 1, 2, 2, 3}, {3, 4, 1, 3, 3, 3}, {3, 4, 1, 4, 4, 3}, {3, 4, 1, 4, 3, 4}, {3, 4, 2, 4, 4, 3},
      {2, 3, 1, 4, 4, 2}, {2, 3, 1, 2, 2, 2}, {4, 6, 1, 2, 2, 5},
  };
  for (const auto& f : families) {
    const auto params = make_params(f.n, f.m, f.lambda, f.mu, f.r, f.k);
    const Regime regime = regime_for(params);
    REQUIRE((regime == Regime::kB || regime == Regime::kC));
    int agree = 0;
    int total = 0;
    for (const auto& g : oracle::all_decompositions(f.n, f.lambda, f.k)) {
      const auto found = oracle::brute_force_enclose(g, params);
      REQUIRE(found.status != oracle::SearchStatus::kBudget);
      const bool exists = found.status == oracle::SearchStatus::kFound;
      agree += exists == check_regime(g, params, regime).overall() ? 1 : 0;
      ++total;
    }
    INFO(params.to_string());
    CHECK(agree == total);
  }
}
