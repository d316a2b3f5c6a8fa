#pragma once

#include <cstdint>
#include <optional>

#include "enclose/detach.hpp"
#include "enclose/extend.hpp"

namespace enclose {

struct PipelineResult {
  Enclosing enclosing;
  Regime regime = Regime::kOutOfRegime;
  MuKnResult extension;  // the decomposition of mu K_n before detachment
  DetachStats detach_stats;
};

/// Encloses g in a 2-edge-connected r-factorization of mu K_m: completes g to
/// a decomposition of mu K_n for the governing regime, amalgamates the new
/// vertices and detaches them again. The result is verified before it is
/// returned; its restriction to the first n vertices is the mu K_n
/// decomposition. Throws PreconditionError when the regime's battery fails or
/// no regime applies, BudgetExhausted from the detachment. `regime` overrides
/// regime_for, e.g. to take the padding route where the B route also applies.
PipelineResult enclose_decomposition(const Decomposition& g, const EnclosureParams& params, std::uint64_t seed = 0,
                                     std::uint64_t budget = kDefaultDetachBudget,
                                     std::optional<Regime> regime = std::nullopt);

}  // namespace enclose
