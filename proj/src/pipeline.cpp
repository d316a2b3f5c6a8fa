#include "enclose/pipeline.hpp"

#include "enclose/error.hpp"

namespace enclose {

PipelineResult enclose_decomposition(const Decomposition& g, const EnclosureParams& params, std::uint64_t seed,
                                     std::uint64_t budget, std::optional<Regime> regime) {
  PipelineResult out;
  out.regime = regime.value_or(regime_for(params));
  if (out.regime == Regime::kOutOfRegime) {
    throw PreconditionError("no construction covers " + params.to_string());
  }
  out.extension = enclose_in_mu_kn(g, params, out.regime, seed);
  const Triad triad = build_amalgamated_triad(out.extension.decomposition, params);
  if (!is_good_triad(triad)) throw InternalInconsistency("amalgamated triad is not good");
  DetachmentWitness w = fair_detach(triad, params, seed, budget);
  out.detach_stats = w.stats;

  const auto detach_report = verify_detachment(w, triad, params);
  if (!detach_report) throw InternalInconsistency("detachment check failed: " + detach_report.diagnostics.front());
  out.enclosing = Enclosing{std::move(w.result), params.n};
  const auto report = verify_enclosing(g, out.enclosing, params);
  if (!report) throw InternalInconsistency("enclosing check failed: " + report.diagnostics.front());
  if (!(restrict(out.enclosing, params.n) == out.extension.decomposition)) {
    throw InternalInconsistency("restriction of the enclosing differs from the mu K_n decomposition");
  }
  return out;
}

}  // namespace enclose
