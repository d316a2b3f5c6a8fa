#include "enclose/conditions.hpp"

#include <sstream>

#include "enclose/error.hpp"

namespace enclose {

namespace {

std::int64_t pairs_of(std::int64_t n) { return n * (n - 1) / 2; }

void require_base(const Decomposition& d, int n, int multiplicity, const char* who) {
  if (!(d.base() == complete_multigraph(n, multiplicity))) {
    throw PreconditionError(std::string(who) + ": base graph is not " + std::to_string(multiplicity) + "K_" +
                            std::to_string(n));
  }
}

ConditionFlag arithmetic_flag(const std::string& name, const EnclosureParams& p) {
  const std::int64_t rk = std::int64_t{p.r} * p.k;
  const std::int64_t target = std::int64_t{p.mu} * (p.m - 1);
  const bool even = (std::int64_t{p.r} * p.m) % 2 == 0;
  std::ostringstream why;
  why << "rk = " << rk << (rk == target ? " = " : " != ") << "mu(m-1) = " << target << "; rm = "
      << std::int64_t{p.r} * p.m << (even ? " even" : " odd");
  return {name, rk == target && even, why.str()};
}

ConditionFlag admissible_flag(const std::string& name, const Decomposition& g, int r) {
  const auto res = is_admissible(g, r);
  return {name, res.admissible,
          res.admissible ? std::to_string(r) + "-admissible" : res.violation->describe()};
}

// sum_{i=0}^{floor(bound)} (bound - i) |S_i|
Rational deficiency_sum(const Decomposition& g, const Rational& bound) {
  Rational total = 0;
  for (std::int64_t i = 0; Rational(i) <= bound; ++i) {
    total = total + (bound - Rational(i)) * Rational(s_count(g, static_cast<int>(i)));
  }
  return total;
}

}  // namespace

bool EnclosureParams::factorization_arithmetic() const {
  return std::int64_t{r} * k == std::int64_t{mu} * (m - 1) && (std::int64_t{r} * m) % 2 == 0;
}

std::string EnclosureParams::to_string() const {
  std::ostringstream os;
  os << "n=" << n << " m=" << m << " lambda=" << lambda << " mu=" << mu << " r=" << r << " k=" << k << " p=" << p;
  return os.str();
}

EnclosureParams make_params(int n, int m, int lambda, int mu, int r, int k) {
  if (n < 1 || m < 1 || lambda < 1 || mu < 1 || k < 1) {
    throw PreconditionError("n, m, lambda, mu, k must be positive");
  }
  if (mu < lambda) throw PreconditionError("mu must be at least lambda");
  if (m < n) throw PreconditionError("m must be at least n");
  if (r < 2) throw PreconditionError("r must be at least 2");
  EnclosureParams p{n, m, lambda, mu, r, k, Rational(std::int64_t{r} * (2 * std::int64_t{n} - m), 2)};
  if (p.factorization_arithmetic() && !p.p.is_integer()) {
    throw InternalInconsistency("p = " + p.p.str() + " is not an integer although rm is even");
  }
  return p;
}

bool ConditionReport::overall() const {
  for (const auto& f : flags) {
    if (!f.ok) return false;
  }
  return true;
}

const ConditionFlag& ConditionReport::flag(const std::string& name) const {
  for (const auto& f : flags) {
    if (f.name == name) return f;
  }
  throw PreconditionError("no condition named " + name + " in battery " + battery);
}

const ConditionFlag* ConditionReport::first_failure() const {
  for (const auto& f : flags) {
    if (!f.ok) return &f;
  }
  return nullptr;
}

std::string ConditionReport::to_string() const {
  std::ostringstream os;
  os << battery << ": " << (overall() ? "PASS" : "FAIL") << "\n";
  for (const auto& f : flags) os << "  " << f.name << " " << (f.ok ? "ok  " : "FAIL") << "  " << f.reason << "\n";
  return os.str();
}

ConditionReport check_a_prime(const Decomposition& a, const EnclosureParams& params) {
  require_base(a, params.n, params.mu, "check_a_prime");
  if (a.k() != params.k) throw PreconditionError("check_a_prime: decomposition has the wrong number of classes");
  ConditionReport rep{"A'", {}};
  rep.flags.push_back(arithmetic_flag("A'1", params));
  rep.flags.push_back(admissible_flag("A'2", a, params.r));

  int smallest = a.k() > 0 ? a.color_class(0).edge_count() : 0;
  for (const auto& c : a.classes()) smallest = std::min(smallest, c.edge_count());
  const bool sizes_ok = Rational(smallest) >= params.p;
  rep.flags.push_back({"A'3", sizes_ok,
                       "smallest class has " + std::to_string(smallest) + " edges, p = " + params.p.str()});
  return rep;
}

ConditionReport check_b(const Decomposition& g, const EnclosureParams& params) {
  if (params.m < 2 * params.n - 1) throw PreconditionError("check_b: requires m >= 2n - 1");
  require_base(g, params.n, params.lambda, "check_b");
  if (g.k() != params.k) throw PreconditionError("check_b: decomposition has the wrong number of classes");
  ConditionReport rep{"B", {}};
  rep.flags.push_back(arithmetic_flag("B1", params));
  rep.flags.push_back(admissible_flag("B2", g, params.r));

  const Rational lhs = deficiency_sum(g, params.p);
  const Rational rhs = Rational(std::int64_t{params.mu - params.lambda} * pairs_of(params.n));
  rep.flags.push_back({"B3", lhs <= rhs, "sum (p-i)|S_i| = " + lhs.str() + ", spare edges = " + rhs.str()});
  return rep;
}

ConditionReport check_c(const Decomposition& g, const EnclosureParams& params) {
  if (params.m != 2 * params.n - 2) throw PreconditionError("check_c: requires m = 2n - 2");
  require_base(g, params.n, params.lambda, "check_c");
  if (g.k() != params.k) throw PreconditionError("check_c: decomposition has the wrong number of classes");
  ConditionReport rep{"C", {}};
  rep.flags.push_back(arithmetic_flag("C1", params));
  rep.flags.push_back(admissible_flag("C2", g, params.r));

  const Rational lhs = deficiency_sum(g, Rational(params.r));
  const Rational rhs = Rational(std::int64_t{params.mu - params.lambda} * pairs_of(params.n));
  rep.flags.push_back({"C3", lhs <= rhs, "sum (r-i)|S_i| = " + lhs.str() + ", spare edges = " + rhs.str()});

  const std::int64_t bound = std::int64_t{params.mu - params.lambda} * (pairs_of(params.n) - 1);
  const int empty = s_count(g, 0);
  bool c4 = true;
  std::string worst = "no pair binds";
  std::int64_t worst_lhs = -1;
  for (Vertex u = 0; u < params.n; ++u) {
    for (Vertex v = u + 1; v < params.n; ++v) {
      std::int64_t lhs_uv = empty;
      for (int i = 1; i <= params.r - 1; ++i) lhs_uv += s_uv_count(g, i, u, v);
      if (lhs_uv > worst_lhs) {
        worst_lhs = lhs_uv;
        worst = "pair " + std::to_string(u) + "-" + std::to_string(v) + ": |S_0| + sum |S_i(u,v)| = " +
                std::to_string(lhs_uv) + ", bound = " + std::to_string(bound);
      }
      if (lhs_uv > bound) c4 = false;
    }
  }
  rep.flags.push_back({"C4", c4, worst});
  return rep;
}

Rational padding_constant(int mu, int lambda, int r) {
  if (!(2 * std::int64_t{mu} > std::int64_t{r} * (mu - lambda))) {
    throw PreconditionError("padding_constant: requires 2 mu > r (mu - lambda)");
  }
  if (mu == lambda) return Rational(0);
  const Rational first(mu - lambda, 2 * std::int64_t{mu});
  const Rational second = Rational(2) - Rational(std::int64_t{r} * (mu - lambda), mu);
  return min(first, second);
}

ConditionReport check_padding(const Decomposition& g, const EnclosureParams& params) {
  if (params.r < 3) throw PreconditionError("check_padding: requires r >= 3");
  require_base(g, params.n, params.lambda, "check_padding");
  if (g.k() != params.k) throw PreconditionError("check_padding: decomposition has the wrong number of classes");
  ConditionReport rep{"P", {}};
  rep.flags.push_back(arithmetic_flag("P1", params));

  const std::int64_t lhs = 2 * std::int64_t{params.mu};
  const std::int64_t rhs = std::int64_t{params.r} * (params.mu - params.lambda);
  const bool ratio_ok = lhs > rhs && params.mu > params.lambda;
  rep.flags.push_back({"P2", ratio_ok,
                       "2mu = " + std::to_string(lhs) + (lhs > rhs ? " > " : " <= ") + "r(mu-lambda) = " +
                           std::to_string(rhs) + (params.mu > params.lambda ? "" : "; requires mu > lambda")});

  rep.flags.push_back(admissible_flag("P3", g, params.r - 1));

  if (lhs > rhs) {
    const Rational c = padding_constant(params.mu, params.lambda, params.r);
    const Rational threshold = (Rational(2) - c) * Rational(params.n) + Rational(1);
    rep.flags.push_back({"P4", Rational(params.m) >= threshold,
                         "C = " + c.str() + ", (2-C)n+1 = " + threshold.str() + ", m = " + std::to_string(params.m)});
  } else {
    rep.flags.push_back({"P4", false, "C undefined because 2mu <= r(mu-lambda)"});
  }

  const std::int64_t need = std::int64_t{params.mu - params.lambda} * params.n;
  rep.flags.push_back({"P5", params.k >= need,
                       "k = " + std::to_string(params.k) + ", (mu-lambda)n = " + std::to_string(need)});
  return rep;
}

Regime regime_for(const EnclosureParams& p) {
  if (p.m <= p.n) return Regime::kOutOfRegime;
  if (p.mu == p.lambda) return Regime::kAPrime;
  if (p.m >= 2 * p.n - 1) return Regime::kB;
  if (p.m == 2 * p.n - 2 && 2 * (p.r - 1) >= p.mu) return Regime::kC;
  if (p.r >= 3) return Regime::kPadding;
  return Regime::kOutOfRegime;
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::kAPrime: return "A'";
    case Regime::kB: return "B";
    case Regime::kC: return "C";
    case Regime::kPadding: return "P";
    case Regime::kOutOfRegime: return "none";
  }
  return "none";
}

ConditionReport check_regime(const Decomposition& g, const EnclosureParams& params, Regime regime) {
  switch (regime) {
    case Regime::kAPrime: return check_a_prime(g, params);
    case Regime::kB: return check_b(g, params);
    case Regime::kC: return check_c(g, params);
    case Regime::kPadding: return check_padding(g, params);
    case Regime::kOutOfRegime: break;
  }
  throw PreconditionError("no condition battery applies to " + params.to_string());
}

}  // namespace enclose
