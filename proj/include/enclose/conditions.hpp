#pragma once

#include <string>
#include <vector>

#include "enclose/decomp.hpp"
#include "enclose/rational.hpp"

namespace enclose {

/// Target parameters for enclosing a decomposition of lambda K_n into k colors
/// in a 2-edge-connected r-factorization of mu K_m.
struct EnclosureParams {
  int n = 0;
  int m = 0;
  int lambda = 0;
  int mu = 0;
  int r = 0;
  int k = 0;
  Rational p;  // r(2n - m) / 2, the minimum class size before detachment

  // rk = mu(m - 1) and rm even.
  bool factorization_arithmetic() const;
  std::string to_string() const;
};

// Validates mu >= lambda, m >= n, r >= 2 and positivity, then derives p.
EnclosureParams make_params(int n, int m, int lambda, int mu, int r, int k);

struct ConditionFlag {
  std::string name;
  bool ok = true;
  std::string reason;
};

/// Outcome of one condition battery. `overall()` is the conjunction of flags.
struct ConditionReport {
  std::string battery;
  std::vector<ConditionFlag> flags;

  bool overall() const;
  const ConditionFlag& flag(const std::string& name) const;
  bool ok(const std::string& name) const { return flag(name).ok; }
  // First failing flag, or nullptr when all pass.
  const ConditionFlag* first_failure() const;
  std::string to_string() const;
};

// (A'1)-(A'3) for a decomposition of mu K_n.
ConditionReport check_a_prime(const Decomposition& a, const EnclosureParams& params);

// (B1)-(B3); requires m >= 2n - 1.
ConditionReport check_b(const Decomposition& g, const EnclosureParams& params);

// (C1)-(C4); requires m = 2n - 2, where p = r.
ConditionReport check_c(const Decomposition& g, const EnclosureParams& params);

/// min{(mu - lambda)/(2 mu), 2 - r(mu - lambda)/mu}; 0 when mu == lambda.
/// Requires 2 mu > r(mu - lambda).
Rational padding_constant(int mu, int lambda, int r);

// Hypotheses of the (r-1)-admissible sufficiency result; requires r >= 3.
// Also reports k >= (mu - lambda) n, which the padding construction needs.
ConditionReport check_padding(const Decomposition& g, const EnclosureParams& params);

/// Which condition battery governs a parameter set.
enum class Regime {
  kAPrime,      // mu == lambda, m > n: the multigraph amalgamation result applies directly
  kB,           // mu > lambda, m >= 2n - 1
  kC,           // mu > lambda, m = 2n - 2, 2(r - 1) >= mu
  kPadding,   // mu > lambda, r >= 3, below the other regimes
  kOutOfRegime
};

Regime regime_for(const EnclosureParams& params);
std::string regime_name(Regime r);

// Runs the battery for `regime`; throws PreconditionError for kOutOfRegime.
ConditionReport check_regime(const Decomposition& g, const EnclosureParams& params, Regime regime);

}  // namespace enclose
